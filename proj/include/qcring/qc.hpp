/*
   Copyright 2026 the qcring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QCRING_QC_HPP
#define QCRING_QC_HPP

#include "cyclic.hpp"
#include "distance.hpp"

namespace qcring {

/// QC code of length n*ell with index ell, stored in the tuple view: each
/// generator is an ell-tuple over R_n. The extension view is derived on
/// demand via pack over the canonical degree-ell extension.
struct QcCode {
    RingPtr ring;
    uint32_t n = 0;
    uint32_t ell = 1;
    std::vector<std::vector<Poly>> gens;
};

QcCode qc_from_generators(const RingPtr& R, uint32_t n, uint32_t ell,
                          std::vector<std::vector<Poly>> gens);

/// Length-n*ell coordinate vector of a tuple (blocks indexed by the degree,
/// positions within a block by the tuple index).
std::vector<RElem> tuple_to_vector(const Ring& R, const std::vector<Poly>& tuple, uint32_t n,
                                   uint32_t ell);
std::vector<Poly> vector_to_tuple(const Ring& R, const std::vector<RElem>& vec, uint32_t n,
                                  uint32_t ell);

/// R-module generator rows {x^j g_k} as length-n*ell vectors.
Echelon qc_echelon(const QcCode& c);

/// Theorem 3.1 bound d(Ctilde) * d(B): Ctilde the cyclic code over the
/// canonical degree-ell extension generated by the packed generators, B the
/// R-linear length-ell code spanned by all coefficient vectors.
uint32_t module_bound(const QcCode& c, uint64_t budget);

/// Echelon-style data over an extension ring (constituents are S-modules).
struct ExtEchelon {
    ExtensionPtr ext;
    uint32_t ncols = 0;
    std::vector<uint32_t> torsion;
    std::vector<std::vector<ExtElem>> rows;
    std::vector<uint32_t> pivots;
};

ExtEchelon ext_echelon(const ExtensionPtr& S, uint32_t ncols,
                       std::vector<std::vector<ExtElem>> rows);
QPow ext_cardinality(const ExtEchelon& e);
void ext_enumerate(const ExtEchelon& e, uint64_t budget,
                   const std::function<void(const std::vector<ExtElem>&)>& fn);
/// Exact minimum Hamming weight over the extension-alphabet coordinates.
std::optional<uint32_t> ext_min_hamming(const ExtEchelon& e, uint64_t budget);

struct ConstituentCode {
    ExtensionPtr S;  // R[x]/<f_i>
    Poly factor;
    uint32_t u_rep = 0;
    std::vector<std::vector<ExtElem>> gens;  // length-ell vectors over S
    ExtEchelon ech;
};

struct CanonicalDecomposition {
    RingPtr ring;
    uint32_t n = 0;
    uint32_t ell = 1;
    ExtensionPtr big;  // smallest extension containing the n-th roots
    ExtElem xi;
    std::vector<ConstituentCode> constituents;
    std::vector<ExtElem> omegas;      // Tr_{big/S_i}(omega_i) = 1
    std::vector<ExtElem> xi_pow_u;    // embedding of S_i's x-class: xi^(u_i)
};

CanonicalDecomposition canonical_decompose(const QcCode& c);

/// Theorem 4.2 (1): the codeword with blocks
/// c_j = sum_i Tr(ctilde_i omega_i xi^(-j u_i)).
std::vector<RElem> trace_reconstruct(const CanonicalDecomposition& d,
                                     const std::vector<std::vector<ExtElem>>& selection);

/// Theorem 4.3 layered bound; zero constituents are excluded from the min.
uint32_t layered_bound(const CanonicalDecomposition& d, uint64_t budget);

/// Theorem 3.2 field construction: the F_q-span of {v, xv, ..., x^(n-1)v}
/// unpacked over the basis {1, u, ..., u^(ell-1)} of R = F_q[u]/<u^ell>.
struct FieldConstruction {
    uint32_t n = 0, ell = 1, dim = 0;
    std::vector<std::vector<uint32_t>> matrix;  // F_q codes, dim x (n*ell)
    std::optional<uint32_t> min_hamming;
    uint32_t bound = 0;                      // d(Ctilde) * d(B), Thm 3.2 (1)
    std::optional<uint32_t> bound_bch;       // delta * epsilon, Thm 3.2 (2)
};

FieldConstruction field_construction(const RingPtr& R, const Poly& v, uint32_t n, uint64_t budget);

}  // namespace qcring

#endif

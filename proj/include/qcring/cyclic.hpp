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

#ifndef QCRING_CYCLIC_HPP
#define QCRING_CYCLIC_HPP

#include "crt.hpp"
#include "extension.hpp"
#include "polyring.hpp"

namespace qcring {

/// Cyclic code over R as an ideal of R_n = R[x]/<x^n-1>, held in the
/// canonical form of a coprime monic family F_0 ... F_s with product x^n-1:
/// C = <Fhat_1, gamma Fhat_2, ..., gamma^(s-1) Fhat_s>.
struct CyclicCode {
    RingPtr ring;
    uint32_t n = 0;
    std::vector<Poly> family;      // F_0 ... F_s
    std::vector<Poly> generators;  // gamma^(i-1) * Fhat_i, i = 1..s (zero gens dropped)
    Poly single_generator;         // Fhat_1 + gamma Fhat_2 + ... + gamma^(s-1) Fhat_s
};

CyclicCode cyclic_from_family(const RingPtr& R, uint32_t n, std::vector<Poly> family);
/// Free cyclic code <g> for a monic divisor g of x^n - 1.
CyclicCode cyclic_free(const RingPtr& R, uint32_t n, const Poly& g);

/// log_q |C| = sum (s-i+1) deg F_i.
uint64_t cyclic_logq_size(const CyclicCode& c);

std::pair<bool, uint32_t> is_free_rank(const CyclicCode& c);

CyclicCode dual_free_cyclic(const CyclicCode& c);

/// Reciprocal x^deg(f) f(1/x), normalized monic (constant term must be a unit).
Poly reciprocal_monic(const Poly& f);

/// BCH bound: longest run of consecutive exponents e with g(xi^e) = 0
/// (wrap-around included) plus one, for the given n-th primitive root xi.
uint32_t bch_bound(const CyclicCode& c, const Extension& E, const ExtElem& xi);
/// Same, maximized over the primitive-root classes (Z/n)^* / <q>; every class
/// instantiates a valid n-th primitive root, so this is still a lower bound.
uint32_t bch_bound_best(const CyclicCode& c);

/// The canonical root context for length n over R: the canonical extension of
/// degree ord_n(q) together with zeta^((q^d-1)/n).
std::pair<ExtensionPtr, ExtElem> root_context(const RingPtr& R, uint32_t n);

struct SpectralVector {
    ExtensionPtr ext;
    ExtElem xi;
    std::vector<ExtElem> values;  // A_i = c(xi^i)
};

SpectralVector ms_transform(const Poly& c, const ExtensionPtr& E, const ExtElem& xi, uint32_t n);
Poly ms_inverse(const SpectralVector& A);

/// c_v = sum_j Tr(a_j xi^(v i_j)), v = 0..n-1. The i_j must lie in pairwise
/// distinct q-cyclotomic cosets.
std::vector<RElem> trace_codeword(const Extension& E, const ExtElem& xi, uint32_t n,
                                  const std::vector<ExtElem>& coeffs,
                                  const std::vector<uint32_t>& exponents);

/// The kernel criterion for a vanishing trace orbit: with tau = |U_{i_j}|,
/// Tr(a xi^(v i_j)) = 0 for every v iff tau != m and Tr_{E/E_tau}(a) = 0.
bool zero_coord_criterion(const Extension& E, const ExtElem& a, uint32_t v, uint32_t i_j,
                          uint32_t n);
/// Direct evaluation side: whether Tr(a xi^(v i_j)) = 0 for all v.
bool trace_orbit_vanishes(const Extension& E, const ExtElem& xi, const ExtElem& a, uint32_t i_j,
                          uint32_t n);

std::vector<std::vector<RElem>> generator_matrix_free(const CyclicCode& c);

}  // namespace qcring

#endif

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

#ifndef QCRING_EXTENSION_HPP
#define QCRING_EXTENSION_HPP

#include <memory>
#include <vector>

#include "poly.hpp"

namespace qcring {

class Extension;
using ExtensionPtr = std::shared_ptr<const Extension>;

/// Element of a Galois extension ring in power-basis coordinates over the
/// base chain ring: a = sum coords[i] * xi^i, xi the class of x.
struct ExtElem {
    const Extension* ext = nullptr;
    std::vector<RElem> c;

    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }
};

/// Polynomial over an extension ring (used for the R_n^ell <-> cal(R)_n view
/// and the block computations of the one-generator machinery).
struct ExtPoly {
    const Extension* ext = nullptr;
    std::vector<ExtElem> c;

    bool operator==(const ExtPoly& o) const;
    bool operator!=(const ExtPoly& o) const { return !(*this == o); }
};

/// cal(R) = R[x]/<f> for a monic basic irreducible f of degree d >= 1. A
/// chain ring with the same gamma and s as R, residue field F_{q^d}, free
/// over R with the power basis {1, xi, ..., xi^(d-1)}.
class Extension : public std::enable_shared_from_this<Extension> {
   public:
    static ExtensionPtr make(RingPtr base, Poly modulus);
    /// Extension by the Hensel lift of the lexicographically smallest
    /// primitive polynomial of degree d (a divisor of x^(q^d - 1) - 1), so
    /// the class of x is a Teichmueller generator.
    static ExtensionPtr canonical(RingPtr base, uint32_t d);

    const RingPtr& base() const { return base_; }
    const Poly& modulus() const { return mod_; }
    uint32_t deg() const { return d_; }
    const Gf::Ptr& rf() const { return rf_; }  // residue field F_{q^d}
    uint64_t rq() const { return rf_->q(); }
    uint32_t s() const { return base_->s(); }
    uint64_t size() const;  // (q^d)^s

    // elements
    ExtElem zero() const;
    ExtElem one() const;
    ExtElem xi() const;    // class of x
    ExtElem zeta() const;  // Teichmueller generator (order q^d - 1)
    ExtElem from_coords(std::vector<RElem> coords) const;
    ExtElem embed(const RElem& r) const;
    bool is_in_base(const ExtElem& a) const;
    RElem project_to_base(const ExtElem& a) const;
    /// Teichmueller representative of a residue-field code.
    ExtElem teich(uint32_t rf_code) const;

    // arithmetic
    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem inv(const ExtElem& a) const;
    ExtElem pow_u(const ExtElem& a, uint64_t e) const;
    ExtElem pow_i(const ExtElem& a, int64_t e) const;  // unit a, negative ok
    bool is_zero(const ExtElem& a) const;
    bool is_unit(const ExtElem& a) const { return residue_code(a) != 0; }
    uint32_t val(const ExtElem& a) const;
    ExtElem shift_up(const ExtElem& a, uint32_t k) const;
    ExtElem shift_down(const ExtElem& a, uint32_t k) const;
    uint64_t order_of(const ExtElem& a) const;

    /// Residue-field code of a (the pack of the coordinates' first digits).
    uint32_t residue_code(const ExtElem& a) const;
    /// gamma-adic digits of a over the Teichmueller set of cal(R), as
    /// residue-field codes (length s).
    std::vector<uint32_t> digits(const ExtElem& a) const;
    ExtElem from_digits(const std::vector<uint32_t>& codes) const;

    /// phi^times, phi the Frobenius acting digit-wise as t -> t^q.
    ExtElem frobenius(const ExtElem& a, uint32_t times = 1) const;
    /// Tr_{cal(R)/R}.
    RElem trace_to_base(const ExtElem& a) const;
    /// Relative trace onto the phi^tau-fixed subring, computed inside cal(R).
    ExtElem trace_rel(const ExtElem& a, uint32_t tau) const;
    /// Relative trace landed in an explicit tau-th extension of R (the
    /// canonical one), with the embedding fixed by Teichmueller root-matching.
    std::pair<ExtensionPtr, ExtElem> trace_to_subring(const ExtElem& a, uint32_t tau) const;
    /// The root-matched image of the canonical tau-th extension inside this
    /// ring (image of its xi).
    ExtElem subring_image_of_xi(uint32_t tau) const;

    /// Deterministic search: first element in coordinate-lexicographic order
    /// with the exact multiplicative order, Teichmueller elements first.
    ExtElem find_unit_of_order(uint64_t order) const;
    /// zeta^((q^d-1)/n): the canonical n-th root of unity. Requires n | q^d-1.
    ExtElem nth_root_of_unity(uint32_t n) const;

    /// Evaluation of a base-ring polynomial at an extension element.
    ExtElem eval_poly(const Poly& f, const ExtElem& x) const;

    /// mu_j coordinate-wise; the result lives over trunc_ext(j).
    ExtensionPtr trunc_ext(uint32_t j) const;
    ExtElem mu(const ExtElem& a, uint32_t j) const;
    ExtElem lift_from(const ExtElem& a) const;  // zero-pad digits per coordinate

    bool same_as(const Extension& o) const;
    static bool coord_lex_less(const ExtElem& a, const ExtElem& b);

    void check_mine(const ExtElem& a) const;

   private:
    Extension() = default;
    void build_teich();
    ExtElem eval_poly_raw(const Poly& f, const ExtElem& x) const;

    RingPtr base_;
    Poly mod_;
    uint32_t d_ = 1;
    Gf::Ptr rf_;
    std::vector<ExtElem> zeta_pows_;       // q^d - 1 entries
    mutable std::vector<ExtensionPtr> trunc_;  // filled in make()
};

namespace extpoly {

ExtPoly make(const Extension& E, std::vector<ExtElem> coeffs);
ExtPoly zero(const Extension& E);
ExtPoly one(const Extension& E);
int degree(const ExtPoly& f);
bool is_zero(const ExtPoly& f);
ExtElem coeff(const ExtPoly& f, uint32_t i);
ExtPoly add(const ExtPoly& a, const ExtPoly& b);
ExtPoly sub(const ExtPoly& a, const ExtPoly& b);
ExtPoly mul(const ExtPoly& a, const ExtPoly& b);
ExtPoly mul_mod_xn(const ExtPoly& a, const ExtPoly& b, uint32_t n);
ExtPoly scale(const ExtPoly& a, const ExtElem& c);
ExtPoly shift_gamma(const ExtPoly& a, uint32_t k);
ExtPoly embed(const Extension& E, const Poly& f);
GfVec residue(const ExtPoly& f);  // over E.rf()
ExtPoly project(const ExtPoly& f, uint32_t j);
ExtPoly lift_from(const Extension& E, const ExtPoly& f);
ExtElem eval(const ExtPoly& f, const ExtElem& x);

/// basis_convert: tuple of ell base-ring polynomials <-> polynomial over the
/// degree-ell extension, with the power basis {1, xi, ..., xi^(ell-1)}.
ExtPoly pack(const Extension& E, const std::vector<Poly>& tuple);
std::vector<Poly> unpack(const ExtPoly& A, uint32_t ell);

}  // namespace extpoly

}  // namespace qcring

#endif

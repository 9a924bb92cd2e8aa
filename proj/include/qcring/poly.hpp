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

#ifndef QCRING_POLY_HPP
#define QCRING_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "gfpoly.hpp"
#include "ring.hpp"

namespace qcring {

/// Polynomial over a chain ring, coefficients ascending by degree, canonical
/// (leading coefficient nonzero unless zero polynomial = empty vector).
struct Poly {
    const Ring* ring = nullptr;
    std::vector<RElem> c;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

namespace poly {

Poly make(const Ring& R, std::vector<RElem> coeffs);
Poly zero(const Ring& R);
Poly one(const Ring& R);
Poly constant(const Ring& R, const RElem& c);
Poly xpow(const Ring& R, uint32_t k);
/// x^n - 1 over R.
Poly xn_minus_one(const Ring& R, uint32_t n);
/// Lift a residue-field polynomial coefficient-wise (canonical digit lifts).
Poly lift(const Ring& R, const GfVec& f);

int degree(const Poly& f);
bool is_zero(const Poly& f);
bool is_one(const Poly& f);
bool is_monic(const Poly& f);
RElem coeff(const Poly& f, uint32_t i);  // zero beyond degree
RElem lc(const Poly& f);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const RElem& c);
Poly shift_gamma(const Poly& a, uint32_t k);  // gamma^k * a
/// Quotient and remainder by a monic divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, uint64_t e, const Poly& m);
RElem eval(const Poly& f, const RElem& x);

/// Coefficient-wise residue projection f-bar.
GfVec residue(const Poly& f);
/// Coefficient-wise mu_j; result lives over R->truncated(j).
Poly project(const Poly& f, uint32_t j);
/// Zero-pad digits of a polynomial over a truncation of R back into R.
Poly lift_from(const Ring& R, const Poly& f);
/// Minimal gamma-adic valuation over all coefficients (s for the zero poly).
uint32_t content_val(const Poly& f);
Poly shift_down(const Poly& f, uint32_t k);  // exact division by gamma^k

}  // namespace poly

}  // namespace qcring

#endif

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

#ifndef QCRING_POLYRING_HPP
#define QCRING_POLYRING_HPP

#include <optional>

#include "poly.hpp"

namespace qcring {

class Extension;
struct ExtElem;

struct CyclotomicCoset {
    uint32_t n;
    uint32_t q;
    std::vector<uint32_t> members;  // sorted
    uint32_t representative;        // smallest member
};

/// The q-cyclotomic cosets of Z_n, sorted by representative. Requires
/// gcd(n, q) = 1.
std::vector<CyclotomicCoset> cyclotomic_cosets(uint32_t n, uint32_t q);

/// Bezout witness (a, b) with a*f + b*g = 1 over R, present iff f and g are
/// coprime over R (equivalently, their residues are coprime over F_q).
std::optional<std::pair<Poly, Poly>> coprime_over_ring(const Poly& f, const Poly& g);

/// The unique monic lift of fbar dividing `target` over R. `target` must be
/// monic with square-free residue divisible by fbar.
Poly hensel_lift_factor(const Ring& R, const GfVec& fbar, const Poly& target);

struct Factor {
    Poly f;
    std::vector<uint32_t> coset;
    uint32_t rep;
};

/// Basic-irreducible factorization of x^n - 1 over R, factors ordered by
/// (degree, residue code) ascending, each paired with its cyclotomic coset.
struct Factorization {
    RingPtr ring;
    uint32_t n = 0;
    std::vector<Factor> factors;

    const Factor* factor_for_exponent(uint32_t e) const;  // coset containing e
    Poly product() const;
};

Factorization factor_xn_minus_1(const RingPtr& R, uint32_t n);

/// Minimal polynomial over R of xi^power for an n-th primitive root of unity
/// xi living in an extension of R.
Poly minimal_polynomial(const Extension& E, const ExtElem& xi, uint32_t power, uint32_t n);

}  // namespace qcring

#endif

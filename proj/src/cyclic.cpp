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

#include "qcring/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace qcring {

CyclicCode cyclic_from_family(const RingPtr& R, uint32_t n, std::vector<Poly> family) {
    require(family.size() == R->s() + 1, Err::ProductMismatch,
            "family must have s+1 entries F_0..F_s");
    Poly xn1 = poly::xn_minus_one(*R, n);
    Poly prod = poly::one(*R);
    for (const auto& f : family) {
        require(poly::is_monic(f), Err::NotCoprime, "family members must be monic");
        prod = poly::mul(prod, f);
    }
    require(prod == xn1, Err::ProductMismatch, "family product must be x^n - 1");
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            require(poly::degree(family[i]) == 0 || poly::degree(family[j]) == 0 ||
                        coprime_over_ring(family[i], family[j]).has_value(),
                    Err::NotCoprime, "family members must be pairwise coprime");

    CyclicCode c;
    c.ring = R;
    c.n = n;
    c.family = std::move(family);
    Poly single = poly::zero(*R);
    for (uint32_t i = 1; i <= R->s(); ++i) {
        auto [fhat, rem] = poly::divmod(xn1, c.family[i]);
        require(poly::is_zero(rem), Err::Internal, "family member does not divide x^n-1");
        Poly gen = poly::mod(poly::shift_gamma(fhat, i - 1), xn1);
        single = poly::add(single, gen);
        c.generators.push_back(std::move(gen));
    }
    c.single_generator = poly::mod(single, xn1);
    return c;
}

CyclicCode cyclic_free(const RingPtr& R, uint32_t n, const Poly& g) {
    Poly xn1 = poly::xn_minus_one(*R, n);
    auto [h, rem] = poly::divmod(xn1, g);
    require(poly::is_monic(g) && poly::is_zero(rem), Err::NotADivisor,
            "generator must be a monic divisor of x^n - 1");
    std::vector<Poly> family(R->s() + 1, poly::one(*R));
    family[0] = g;
    family[1] = h;
    return cyclic_from_family(R, n, std::move(family));
}

uint64_t cyclic_logq_size(const CyclicCode& c) {
    const Ring& R = *c.ring;
    uint64_t out = 0;
    for (uint32_t i = 1; i <= R.s(); ++i)
        out += static_cast<uint64_t>(R.s() - i + 1) * poly::degree(c.family[i]);
    return out;
}

std::pair<bool, uint32_t> is_free_rank(const CyclicCode& c) {
    const Ring& R = *c.ring;
    for (uint32_t i = 2; i <= R.s(); ++i)
        if (!poly::is_one(c.family[i])) return {false, 0};
    return {true, static_cast<uint32_t>(poly::degree(c.family[1]))};
}

Poly reciprocal_monic(const Poly& f) {
    const Ring& R = *f.ring;
    require(!poly::is_zero(f), Err::Internal, "reciprocal of zero");
    require(R.is_unit(f.c[0]), Err::Internal, "constant term must be a unit");
    std::vector<RElem> rev(f.c.rbegin(), f.c.rend());
    Poly r = poly::make(R, std::move(rev));
    return poly::scale(r, R.inv(poly::lc(r)));
}

CyclicCode dual_free_cyclic(const CyclicCode& c) {
    auto fr = is_free_rank(c);
    require(fr.first, Err::NotFree, "dual implemented for free cyclic codes only");
    Poly h = c.family[1];
    return cyclic_free(c.ring, c.n, reciprocal_monic(h));
}

std::pair<ExtensionPtr, ExtElem> root_context(const RingPtr& R, uint32_t n) {
    require(std::gcd<uint64_t>(n, R->q()) == 1, Err::NotCoprimeLength, "gcd(n, q) must be 1");
    uint32_t T = 1;
    uint64_t cur = R->q() % n;
    while (cur != 1 % n) {
        cur = cur * R->q() % n;
        ++T;
    }
    auto E = Extension::canonical(R, T);
    return {E, E->nth_root_of_unity(n)};
}

static Poly free_generator(const CyclicCode& c) {
    // Fhat_1 = F_0 F_2 ... F_s, the monic generator of a free code
    const Ring& R = *c.ring;
    Poly g = c.family[0];
    for (uint32_t i = 2; i <= R.s(); ++i) g = poly::mul(g, c.family[i]);
    return g;
}

static std::vector<bool> zero_exponents(const CyclicCode& c, const Extension& E,
                                        const ExtElem& xi) {
    Poly g = free_generator(c);
    std::vector<bool> z(c.n, false);
    ExtElem p = E.one();
    for (uint32_t e = 0; e < c.n; ++e) {
        z[e] = E.is_zero(E.eval_poly(g, p));
        p = E.mul(p, xi);
    }
    return z;
}

static uint32_t longest_circular_run(const std::vector<bool>& z) {
    uint32_t n = static_cast<uint32_t>(z.size());
    uint32_t best = 0, cur = 0;
    for (uint32_t i = 0; i < 2 * n; ++i) {
        if (z[i % n]) {
            ++cur;
            best = std::max(best, std::min(cur, n));
        } else {
            cur = 0;
        }
    }
    return best;
}

uint32_t bch_bound(const CyclicCode& c, const Extension& E, const ExtElem& xi) {
    auto fr = is_free_rank(c);
    require(fr.first, Err::NotFree, "BCH bound applies to free cyclic codes");
    require(E.is_unit(xi) && E.order_of(xi) == c.n, Err::NotARootOfUnity,
            "xi must be an n-th primitive root of unity");
    return longest_circular_run(zero_exponents(c, E, xi)) + 1;
}

uint32_t bch_bound_best(const CyclicCode& c) {
    auto fr = is_free_rank(c);
    require(fr.first, Err::NotFree, "BCH bound applies to free cyclic codes");
    auto [E, xi] = root_context(c.ring, c.n);
    auto z = zero_exponents(c, *E, xi);
    uint32_t n = c.n;
    if (n == 1) return longest_circular_run(z) + 1;
    uint32_t best = 0;
    // each unit class k of (Z/n)*/<q> instantiates a valid primitive root
    // xi^k; the zero-exponent set rescales by k^-1, so scan k directly
    std::vector<bool> done(n, false);
    for (uint32_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1 || done[k]) continue;
        uint64_t cur = k;
        do {
            done[cur] = true;
            cur = cur * c.ring->q() % n;
        } while (cur != k);
        std::vector<bool> zk(n);
        for (uint32_t e = 0; e < n; ++e) zk[e] = z[static_cast<uint64_t>(k) * e % n];
        best = std::max(best, longest_circular_run(zk));
    }
    return best + 1;
}

SpectralVector ms_transform(const Poly& c, const ExtensionPtr& E, const ExtElem& xi, uint32_t n) {
    require(E->is_unit(xi) && E->order_of(xi) == n, Err::NotARootOfUnity,
            "xi must have order n");
    SpectralVector out;
    out.ext = E;
    out.xi = xi;
    out.values.reserve(n);
    ExtElem p = E->one();
    for (uint32_t i = 0; i < n; ++i) {
        out.values.push_back(E->eval_poly(c, p));
        p = E->mul(p, xi);
    }
    return out;
}

Poly ms_inverse(const SpectralVector& A) {
    const Extension& E = *A.ext;
    const Ring& R = *E.base();
    uint32_t n = static_cast<uint32_t>(A.values.size());
    RElem nel = R.from_int(static_cast<int64_t>(n));
    require(R.is_unit(nel), Err::NonInvertibleN, "n is not invertible in R");
    RElem ninv = R.inv(nel);
    ExtElem xinv = E.inv(A.xi);
    std::vector<RElem> coeffs;
    coeffs.reserve(n);
    for (uint32_t j = 0; j < n; ++j) {
        ExtElem acc = E.zero();
        ExtElem p = E.one();
        ExtElem step = E.pow_u(xinv, j);
        for (uint32_t k = 0; k < n; ++k) {
            acc = E.add(acc, E.mul(A.values[k], p));
            p = E.mul(p, step);
        }
        coeffs.push_back(R.mul(ninv, E.project_to_base(acc)));
    }
    return poly::make(R, std::move(coeffs));
}

std::vector<RElem> trace_codeword(const Extension& E, const ExtElem& xi, uint32_t n,
                                  const std::vector<ExtElem>& coeffs,
                                  const std::vector<uint32_t>& exponents) {
    require(coeffs.size() == exponents.size(), Err::DimensionMismatch,
            "coefficient/exponent count mismatch");
    auto cosets = cyclotomic_cosets(n, E.base()->q());
    auto coset_of = [&](uint32_t e) -> const CyclotomicCoset* {
        for (const auto& c : cosets)
            if (std::binary_search(c.members.begin(), c.members.end(), e % n)) return &c;
        return nullptr;
    };
    for (size_t i = 0; i < exponents.size(); ++i)
        for (size_t j = i + 1; j < exponents.size(); ++j)
            require(coset_of(exponents[i]) != coset_of(exponents[j]), Err::CosetCollision,
                    "exponents lie in the same q-cyclotomic coset");
    std::vector<RElem> out;
    out.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        ExtElem acc = E.zero();
        for (size_t j = 0; j < coeffs.size(); ++j) {
            ExtElem term =
                E.mul(coeffs[j], E.pow_u(xi, static_cast<uint64_t>(v) * exponents[j] % n));
            acc = E.add(acc, term);
        }
        out.push_back(E.trace_to_base(acc));
    }
    return out;
}

bool zero_coord_criterion(const Extension& E, const ExtElem& a, uint32_t v, uint32_t i_j,
                          uint32_t n) {
    require(!E.is_zero(a), Err::Internal, "criterion requires a nonzero coefficient");
    auto cosets = cyclotomic_cosets(n, E.base()->q());
    uint32_t e = static_cast<uint64_t>(v) * i_j % n;
    uint32_t tau = 0;
    for (const auto& c : cosets)
        if (std::binary_search(c.members.begin(), c.members.end(), e))
            tau = static_cast<uint32_t>(c.members.size());
    uint32_t m = E.deg();
    if (tau == m) return false;
    require(tau != 0 && m % tau == 0, Err::NotASubextension,
            "coset size does not divide the extension degree");
    return E.is_zero(E.trace_rel(a, tau));
}

bool trace_orbit_vanishes(const Extension& E, const ExtElem& xi, const ExtElem& a, uint32_t i_j,
                          uint32_t n) {
    for (uint32_t v = 0; v < n; ++v) {
        ExtElem t = E.mul(a, E.pow_u(xi, static_cast<uint64_t>(v) * i_j % n));
        if (!E.base()->is_zero(E.trace_to_base(t))) return false;
    }
    return true;
}

std::vector<std::vector<RElem>> generator_matrix_free(const CyclicCode& c) {
    auto fr = is_free_rank(c);
    require(fr.first, Err::NotFree, "generator matrix in this form requires a free code");
    const Ring& R = *c.ring;
    Poly g = free_generator(c);
    std::vector<std::vector<RElem>> rows;
    Poly xn1 = poly::xn_minus_one(R, c.n);
    Poly cur = poly::mod(g, xn1);
    for (uint32_t r = 0; r < fr.second; ++r) {
        std::vector<RElem> row(c.n, R.zero());
        for (uint32_t i = 0; i < cur.c.size(); ++i) row[i] = cur.c[i];
        rows.push_back(std::move(row));
        cur = poly::mod(poly::mul(cur, poly::xpow(R, 1)), xn1);
    }
    return rows;
}

}  // namespace qcring

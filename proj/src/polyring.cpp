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

#include "qcring/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcring/extension.hpp"

namespace qcring {

std::vector<CyclotomicCoset> cyclotomic_cosets(uint32_t n, uint32_t q) {
    require(n >= 1, Err::NotCoprimeLength, "n must be positive");
    require(std::gcd(n, q) == 1, Err::NotCoprimeLength, "gcd(n, q) must be 1");
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (uint32_t r = 0; r < n; ++r) {
        if (seen[r]) continue;
        CyclotomicCoset c{n, q, {}, r};
        uint64_t cur = r;
        do {
            seen[cur] = true;
            c.members.push_back(static_cast<uint32_t>(cur));
            cur = cur * q % n;
        } while (cur != r);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<std::pair<Poly, Poly>> coprime_over_ring(const Poly& f, const Poly& g) {
    require(f.ring && g.ring && f.ring->same_as(*g.ring), Err::RingMismatch,
            "polynomials over different rings");
    const Ring& R = *f.ring;
    const Gf& F = *R.fq();
    GfVec fb = poly::residue(f), gb = poly::residue(g);
    auto x = gfp::xgcd(F, fb, gb);
    if (!gfp::is_one(x.g)) return std::nullopt;
    // lift the field witness gamma-adically: with r = 1 - (af + bg) nilpotent
    // coefficient-wise, (a,b) * (1 + r + ... + r^(s-1)) is exact over R
    Poly a = poly::lift(R, x.u), b = poly::lift(R, x.v);
    Poly r = poly::sub(poly::one(R), poly::add(poly::mul(a, f), poly::mul(b, g)));
    Poly mult = poly::one(R), rpow = r;
    for (uint32_t k = 1; k < R.s(); ++k) {
        mult = poly::add(mult, rpow);
        if (k + 1 < R.s()) rpow = poly::mul(rpow, r);
    }
    a = poly::mul(a, mult);
    b = poly::mul(b, mult);
    require(poly::is_one(poly::add(poly::mul(a, f), poly::mul(b, g))), Err::Internal,
            "Bezout lift failed");
    return std::make_pair(std::move(a), std::move(b));
}

Poly hensel_lift_factor(const Ring& R, const GfVec& fbar, const Poly& target) {
    require(target.ring && target.ring->same_as(R), Err::RingMismatch,
            "target over a different ring");
    require(poly::is_monic(target), Err::NonMonicDivisor, "target must be monic");
    const Gf& F = *R.fq();
    GfVec tbar = poly::residue(target);
    require(!fbar.empty() && fbar.back() == 1, Err::NotADivisor, "fbar must be monic");
    auto [qb, rb] = gfp::divmod(F, tbar, fbar);
    require(gfp::is_zero(rb), Err::NotADivisor, "fbar does not divide the residue of target");
    GfVec gbar = qb;
    {  // square-free cofactor check: fbar and gbar must be coprime
        GfVec d = gfp::gcd(F, fbar, gbar);
        require(gfp::is_one(d), Err::NonSquareFreeResidue,
                "residue of target is not square-free along fbar");
    }
    if (static_cast<int>(fbar.size()) - 1 == poly::degree(target)) return target;

    auto xg = gfp::xgcd(F, fbar, gbar);  // u*fbar + v*gbar = 1
    Poly f = poly::lift(R, fbar), g = poly::lift(R, gbar);
    Poly a = poly::lift(R, xg.u), b = poly::lift(R, xg.v);
    // quadratic Newton lifting with Bezout update, ceil(log2 s) rounds
    for (uint32_t k = 0; (1u << k) < R.s(); ++k) {
        Poly e = poly::sub(target, poly::mul(f, g));
        auto [q1, r1] = poly::divmod(poly::mul(b, e), f);
        Poly fstar = poly::add(f, r1);
        Poly gstar = poly::add(g, poly::add(poly::mul(a, e), poly::mul(q1, g)));
        Poly e2 = poly::sub(poly::add(poly::mul(a, fstar), poly::mul(b, gstar)), poly::one(R));
        auto [q2, r2] = poly::divmod(poly::mul(a, e2), fstar);
        a = poly::sub(a, r2);
        b = poly::sub(b, poly::add(poly::mul(b, e2), poly::mul(q2, gstar)));
        f = std::move(fstar);
        g = std::move(gstar);
    }
    auto [quot, rem] = poly::divmod(target, f);
    require(poly::is_zero(rem), Err::Internal, "Hensel lift does not divide the target");
    require(poly::residue(f) == fbar, Err::Internal, "Hensel lift has wrong residue");
    return f;
}

const Factor* Factorization::factor_for_exponent(uint32_t e) const {
    e %= n;
    for (const auto& f : factors)
        if (std::binary_search(f.coset.begin(), f.coset.end(), e)) return &f;
    return nullptr;
}

Poly Factorization::product() const {
    Poly p = poly::one(*ring);
    for (const auto& f : factors) p = poly::mul(p, f.f);
    return p;
}

Factorization factor_xn_minus_1(const RingPtr& R, uint32_t n) {
    require(n >= 1 && std::gcd<uint64_t>(n, R->q()) == 1, Err::NotCoprimeLength,
            "gcd(n, q) must be 1");
    const Gf& F = *R->fq();
    auto cosets = cyclotomic_cosets(n, R->q());
    // order of q mod n = size of the coset of 1 (n=1: T=1)
    uint32_t T = 1;
    for (const auto& c : cosets)
        if (c.representative == 1) T = static_cast<uint32_t>(c.members.size());
    Gf::Ptr W = T == 1 ? R->fq() : Gf::extension(R->fq(), gfp::smallest_primitive(F, T));
    // alpha: element of order n in F_{q^T}
    uint32_t alpha = n == 1 ? 1 : W->gen_pow((W->q() - 1) / n);
    Poly target = poly::xn_minus_one(*R, n);

    Factorization out;
    out.ring = R;
    out.n = n;
    for (const auto& c : cosets) {
        // minimal polynomial over F_q of alpha^rep: prod (x - alpha^(rep q^k))
        GfVec m = {1};
        for (uint32_t e : c.members) {
            uint32_t root = W->pow(alpha, e);
            GfVec lin = {W->neg(root), 1};
            m = gfp::mul(*W, m, lin);
        }
        // coefficients are symmetric functions of a conjugate orbit: in F_q
        GfVec mq(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            require(W->in_base(m[i]) || T == 1, Err::Internal,
                    "minimal polynomial coefficient outside F_q");
            mq[i] = m[i];
        }
        Factor fac;
        fac.coset = c.members;
        fac.rep = c.representative;
        fac.f = hensel_lift_factor(*R, mq, target);
        out.factors.push_back(std::move(fac));
    }
    std::sort(out.factors.begin(), out.factors.end(), [&](const Factor& A, const Factor& B) {
        int da = poly::degree(A.f), db = poly::degree(B.f);
        if (da != db) return da < db;
        GfVec ra = poly::residue(A.f), rb = poly::residue(B.f);
        // compare as integer codes, leading coefficients first
        for (size_t i = ra.size(); i-- > 0;)
            if (ra[i] != rb[i]) return ra[i] < rb[i];
        return false;
    });
    require(out.product() == target, Err::Internal, "factor product mismatch");
    return out;
}

Poly minimal_polynomial(const Extension& E, const ExtElem& xi, uint32_t power, uint32_t n) {
    require(!E.is_zero(xi) && E.is_unit(xi) && E.order_of(xi) == n, Err::NotARootOfUnity,
            "xi must be an n-th primitive root of unity");
    auto fac = factor_xn_minus_1(E.base(), n);
    ExtElem root = E.pow_u(xi, power % n);
    for (const auto& f : fac.factors)
        if (E.is_zero(E.eval_poly(f.f, root))) return f.f;
    fail(Err::Internal, "no factor vanishes at the requested root");
}

}  // namespace qcring

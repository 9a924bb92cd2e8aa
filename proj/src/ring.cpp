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

#include "qcring/ring.hpp"

#include <algorithm>

#include "qcring/gfpoly.hpp"

namespace qcring {

static bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingPtr Ring::make(const RingSpec& spec) {
    require(is_prime_u32(spec.p), Err::NonPrimeP, "p must be prime");
    require(spec.m >= 1 && spec.s >= 1, Err::ReducibleDefiningPolynomial,
            "m and s must be positive");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->family_ = spec.family;
    r->p_ = spec.p;
    r->m_ = spec.m;
    r->s_ = spec.s;
    auto fp = Gf::prime(spec.p);
    if (spec.h) {
        require(spec.h->size() == spec.m + 1 && spec.h->back() == 1,
                Err::ReducibleDefiningPolynomial, "defining polynomial must be monic of degree m");
        require(gfp::irreducible(*fp, *spec.h), Err::ReducibleDefiningPolynomial,
                "defining polynomial is reducible over F_p");
        r->h_ = *spec.h;
        r->fq_ = Gf::with_modulus(spec.p, r->h_);
    } else {
        r->h_ = gfp::smallest_primitive(*fp, spec.m);
        r->fq_ = spec.m == 1 ? fp : Gf::canonical(spec.p, spec.m);
    }
    if (spec.family == Family::GaloisRing) r->init_galois_tables();
    r->trunc_.resize(spec.s + 1);
    for (uint32_t j = 1; j < spec.s; ++j) {
        RingSpec sub = spec;
        sub.s = j;
        sub.h = r->h_;
        r->trunc_[j] = Ring::make(sub);
    }
    r->trunc_[spec.s] = r;
    return r;
}

void Ring::init_galois_tables() {
    ps_ = 1;
    for (uint32_t i = 0; i < s_; ++i) ps_ *= p_;
    grmod_.assign(h_.begin(), h_.end());  // coefficient-wise lift of h

    auto cmul = [this](const std::vector<uint64_t>& a,
                       const std::vector<uint64_t>& b) -> std::vector<uint64_t> {
        std::vector<uint64_t> prod(2 * m_ - 1, 0);
        for (uint32_t i = 0; i < m_; ++i) {
            if (!a[i]) continue;
            for (uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % ps_;
        }
        for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(m_); --k) {
            uint64_t c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (uint32_t j = 0; j < m_; ++j) {
                uint64_t t = c * grmod_[j] % ps_;
                prod[k - m_ + j] = (prod[k - m_ + j] + ps_ - t) % ps_;
            }
        }
        prod.resize(m_);
        return prod;
    };

    // zeta = (class of x)^(q^(s-1)): the Teichmueller lift of the residue
    // generator; the 1+<gamma> component has p-power order killed by q^(s-1).
    std::vector<uint64_t> w(m_, 0);
    uint32_t zbar;
    if (m_ == 1) {
        w[0] = (ps_ - grmod_[0] % ps_) % ps_;
        zbar = static_cast<uint32_t>((p_ - h_[0] % p_) % p_);
    } else {
        w[1] = 1;
        zbar = p_;  // code of the class of x
    }
    std::vector<uint64_t> zeta(m_, 0);
    zeta[0] = 1;
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < s_; ++i) e *= q();
    std::vector<uint64_t> base = w;
    while (e) {
        if (e & 1) zeta = cmul(zeta, base);
        base = cmul(base, base);
        e >>= 1;
    }
    teich_coeffs_.assign(q(), std::vector<uint64_t>(m_, 0));
    std::vector<uint64_t> cur(m_, 0);
    cur[0] = 1;
    uint32_t code = 1;
    for (uint32_t k = 0; k < q() - 1; ++k) {
        teich_coeffs_[code] = cur;
        cur = cmul(cur, zeta);
        code = fq_->mul(code, zbar);
    }
}

uint64_t Ring::size() const {
    uint64_t out = 1;
    for (uint32_t i = 0; i < s_; ++i) out *= q();
    return out;
}

bool Ring::same_as(const Ring& o) const {
    return family_ == o.family_ && p_ == o.p_ && m_ == o.m_ && s_ == o.s_ && h_ == o.h_;
}

std::string Ring::spec_string() const {
    if (family_ == Family::EisensteinU)
        return "F" + std::to_string(q()) + "[u]/u^" + std::to_string(s_);
    uint64_t ps = 1;
    for (uint32_t i = 0; i < s_; ++i) ps *= p_;
    return "GR(" + std::to_string(ps) + "," + std::to_string(m_) + ")";
}

RElem Ring::zero() const { return {this, std::vector<uint32_t>(s_, 0)}; }

RElem Ring::one() const { return from_residue(1); }

RElem Ring::gamma() const {
    RElem e = zero();
    if (s_ >= 2) e.d[1] = 1;
    return e;
}

RElem Ring::from_digits(std::vector<uint32_t> digits) const {
    require(digits.size() == s_, Err::DegreeMismatch, "digit vector length must equal s");
    for (uint32_t c : digits)
        require(c < q(), Err::IndexOutOfRange, "digit code out of range");
    return {this, std::move(digits)};
}

RElem Ring::from_residue(uint32_t code) const {
    require(code < q(), Err::IndexOutOfRange, "residue code out of range");
    RElem e = zero();
    e.d[0] = code;
    return e;
}

RElem Ring::from_int(int64_t k) const {
    if (family_ == Family::EisensteinU) {
        int64_t c = k % p_;
        if (c < 0) c += p_;
        return from_residue(static_cast<uint32_t>(c));
    }
    int64_t c = k % static_cast<int64_t>(ps_);
    if (c < 0) c += ps_;
    std::vector<uint64_t> coeffs(m_, 0);
    coeffs[0] = static_cast<uint64_t>(c);
    return from_coeffs(std::move(coeffs));
}

void Ring::check_mine(const RElem& a) const {
    require(a.ring != nullptr && same_as(*a.ring), Err::RingMismatch,
            "element belongs to a different ring");
}

void Ring::check_same(const RElem& a, const RElem& b) const {
    check_mine(a);
    check_mine(b);
}

std::vector<uint64_t> Ring::to_coeffs(const RElem& a) const {
    require(family_ == Family::GaloisRing, Err::UnsupportedRing, "coefficients of non-Galois ring");
    std::vector<uint64_t> out(m_, 0);
    uint64_t mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        const auto& t = teich_coeffs_[a.d[i]];
        for (uint32_t j = 0; j < m_; ++j) out[j] = (out[j] + t[j] * mult) % ps_;
        mult *= p_;
    }
    return out;
}

RElem Ring::from_coeffs(std::vector<uint64_t> c) const {
    require(family_ == Family::GaloisRing, Err::UnsupportedRing, "coefficients of non-Galois ring");
    RElem e = zero();
    for (uint32_t i = 0; i < s_; ++i) {
        std::vector<uint32_t> rd(m_);
        for (uint32_t j = 0; j < m_; ++j) rd[j] = static_cast<uint32_t>(c[j] % p_);
        uint32_t code = fq_->pack(rd);
        e.d[i] = code;
        const auto& t = teich_coeffs_[code];
        for (uint32_t j = 0; j < m_; ++j) {
            uint64_t v = (c[j] + ps_ - t[j] % ps_) % ps_;
            c[j] = v / p_;  // exact by construction of the Teichmueller digit
        }
    }
    return e;
}

RElem Ring::add(const RElem& a, const RElem& b) const {
    check_same(a, b);
    if (family_ == Family::EisensteinU) {
        RElem out = zero();
        for (uint32_t i = 0; i < s_; ++i) out.d[i] = fq_->add(a.d[i], b.d[i]);
        return out;
    }
    auto ca = to_coeffs(a), cb = to_coeffs(b);
    for (uint32_t j = 0; j < m_; ++j) ca[j] = (ca[j] + cb[j]) % ps_;
    return from_coeffs(std::move(ca));
}

RElem Ring::neg(const RElem& a) const {
    check_mine(a);
    if (family_ == Family::EisensteinU) {
        RElem out = zero();
        for (uint32_t i = 0; i < s_; ++i) out.d[i] = fq_->neg(a.d[i]);
        return out;
    }
    auto c = to_coeffs(a);
    for (uint32_t j = 0; j < m_; ++j) c[j] = (ps_ - c[j]) % ps_;
    return from_coeffs(std::move(c));
}

RElem Ring::sub(const RElem& a, const RElem& b) const { return add(a, neg(b)); }

RElem Ring::mul(const RElem& a, const RElem& b) const {
    check_same(a, b);
    if (family_ == Family::EisensteinU) {
        RElem out = zero();
        for (uint32_t i = 0; i < s_; ++i) {
            if (a.d[i] == 0) continue;
            for (uint32_t j = 0; i + j < s_; ++j) {
                if (b.d[j] == 0) continue;
                out.d[i + j] = fq_->add(out.d[i + j], fq_->mul(a.d[i], b.d[j]));
            }
        }
        return out;
    }
    auto ca = to_coeffs(a), cb = to_coeffs(b);
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (!ca[i]) continue;
        for (uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % ps_;
    }
    for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(m_); --k) {
        uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (uint32_t j = 0; j < m_; ++j) {
            uint64_t t = c * grmod_[j] % ps_;
            prod[k - m_ + j] = (prod[k - m_ + j] + ps_ - t) % ps_;
        }
    }
    prod.resize(m_);
    return from_coeffs(std::move(prod));
}

RElem Ring::inv(const RElem& a) const {
    check_mine(a);
    require(is_unit(a), Err::NotAUnit, "element is not a unit");
    RElem b = from_residue(fq_->inv(a.d[0]));
    RElem two = from_int(2);
    for (uint32_t k = 0; (1u << k) < s_; ++k) b = mul(b, sub(two, mul(a, b)));
    return b;
}

RElem Ring::pow_u(const RElem& a, uint64_t e) const {
    RElem out = one(), base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

bool Ring::is_zero(const RElem& a) const {
    return std::all_of(a.d.begin(), a.d.end(), [](uint32_t c) { return c == 0; });
}

uint32_t Ring::val(const RElem& a) const {
    for (uint32_t i = 0; i < s_; ++i)
        if (a.d[i] != 0) return i;
    return s_;
}

// gamma-adic digit expansions make multiplication and exact division by
// gamma^k plain digit shifts, in both families.
RElem Ring::shift_up(const RElem& a, uint32_t k) const {
    RElem out = zero();
    for (uint32_t i = 0; i + k < s_; ++i) out.d[i + k] = a.d[i];
    return out;
}

RElem Ring::shift_down(const RElem& a, uint32_t k) const {
    require(val(a) >= std::min(k, s_), Err::Internal, "inexact division by gamma");
    RElem out = zero();
    for (uint32_t i = k; i < s_; ++i) out.d[i - k] = a.d[i];
    return out;
}

RingPtr Ring::truncated(uint32_t j) const {
    require(j >= 1 && j <= s_, Err::IndexOutOfRange, "truncation index out of range");
    return trunc_[j];
}

RElem Ring::project(const RElem& a, uint32_t j) const {
    check_mine(a);
    require(j >= 1 && j <= s_, Err::IndexOutOfRange, "truncation index out of range");
    const Ring* t = trunc_[j].get();
    std::vector<uint32_t> digits(a.d.begin(), a.d.begin() + j);
    return {t, std::move(digits)};
}

RElem Ring::lift_from(const RElem& a) const {
    require(a.ring != nullptr && a.ring->family_ == family_ && a.ring->p_ == p_ &&
                a.ring->m_ == m_ && a.ring->h_ == h_ && a.ring->s_ <= s_,
            Err::RingMismatch, "cannot lift element from unrelated ring");
    std::vector<uint32_t> digits(a.d);
    digits.resize(s_, 0);
    return {this, std::move(digits)};
}

std::vector<RElem> Ring::teichmuller_digits() const {
    std::vector<RElem> out;
    out.reserve(q());
    out.push_back(zero());
    uint32_t code = 1;
    for (uint32_t k = 0; k < q() - 1; ++k) {
        out.push_back(from_residue(code));
        code = fq_->mul(code, fq_->gen());
    }
    return out;
}

}  // namespace qcring

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

#include "qcring/poly.hpp"

#include <algorithm>

namespace qcring {

bool Poly::operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].d != o.c[i].d) return false;
    return true;
}

namespace poly {

static std::vector<RElem> trim(const Ring& R, std::vector<RElem> v) {
    while (!v.empty() && R.is_zero(v.back())) v.pop_back();
    return v;
}

Poly make(const Ring& R, std::vector<RElem> coeffs) {
    for (auto& e : coeffs) R.check_mine(e);
    return {&R, trim(R, std::move(coeffs))};
}

Poly zero(const Ring& R) { return {&R, {}}; }

Poly one(const Ring& R) { return {&R, {R.one()}}; }

Poly constant(const Ring& R, const RElem& c) { return make(R, {c}); }

Poly xpow(const Ring& R, uint32_t k) {
    std::vector<RElem> v(k + 1, R.zero());
    v[k] = R.one();
    return {&R, std::move(v)};
}

Poly xn_minus_one(const Ring& R, uint32_t n) {
    std::vector<RElem> v(n + 1, R.zero());
    v[n] = R.one();
    v[0] = R.neg(R.one());
    return {&R, std::move(v)};
}

Poly lift(const Ring& R, const GfVec& f) {
    std::vector<RElem> v;
    v.reserve(f.size());
    for (uint32_t code : f) v.push_back(R.from_residue(code));
    return {&R, trim(R, std::move(v))};
}

int degree(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }
bool is_zero(const Poly& f) { return f.c.empty(); }
bool is_one(const Poly& f) { return f.c.size() == 1 && f.c[0] == f.ring->one(); }
bool is_monic(const Poly& f) { return !f.c.empty() && f.c.back() == f.ring->one(); }

RElem coeff(const Poly& f, uint32_t i) { return i < f.c.size() ? f.c[i] : f.ring->zero(); }

RElem lc(const Poly& f) {
    require(!f.c.empty(), Err::Internal, "leading coefficient of zero polynomial");
    return f.c.back();
}

static void check_rings(const Poly& a, const Poly& b) {
    require(a.ring && b.ring && a.ring->same_as(*b.ring), Err::RingMismatch,
            "polynomials over different rings");
}

Poly add(const Poly& a, const Poly& b) {
    check_rings(a, b);
    const Ring& R = *a.ring;
    std::vector<RElem> out(std::max(a.c.size(), b.c.size()), R.zero());
    for (size_t i = 0; i < out.size(); ++i) {
        RElem x = i < a.c.size() ? a.c[i] : R.zero();
        RElem y = i < b.c.size() ? b.c[i] : R.zero();
        out[i] = R.add(x, y);
    }
    return {&R, trim(R, std::move(out))};
}

Poly neg(const Poly& a) {
    const Ring& R = *a.ring;
    std::vector<RElem> out(a.c);
    for (auto& e : out) e = R.neg(e);
    return {&R, std::move(out)};
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    check_rings(a, b);
    const Ring& R = *a.ring;
    if (a.c.empty() || b.c.empty()) return zero(R);
    std::vector<RElem> out(a.c.size() + b.c.size() - 1, R.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (R.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (R.is_zero(b.c[j])) continue;
            out[i + j] = R.add(out[i + j], R.mul(a.c[i], b.c[j]));
        }
    }
    return {&R, trim(R, std::move(out))};
}

Poly scale(const Poly& a, const RElem& c) {
    const Ring& R = *a.ring;
    std::vector<RElem> out(a.c);
    for (auto& e : out) e = R.mul(e, c);
    return {&R, trim(R, std::move(out))};
}

Poly shift_gamma(const Poly& a, uint32_t k) {
    const Ring& R = *a.ring;
    std::vector<RElem> out(a.c);
    for (auto& e : out) e = R.shift_up(e, k);
    return {&R, trim(R, std::move(out))};
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_rings(a, b);
    require(is_monic(b), Err::NonMonicDivisor, "divisor must be monic");
    const Ring& R = *a.ring;
    std::vector<RElem> rem = trim(R, a.c);
    int db = degree(b);
    std::vector<RElem> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) quot.assign(rem.size() - b.c.size() + 1, R.zero());
    while (static_cast<int>(rem.size()) - 1 >= db) {
        int k = static_cast<int>(rem.size()) - 1 - db;
        RElem c = rem.back();
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] = R.sub(rem[k + i], R.mul(c, b.c[i]));
        rem = trim(R, std::move(rem));
    }
    return {Poly{&R, trim(R, std::move(quot))}, Poly{&R, std::move(rem)}};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(mul(a, b), m); }

Poly powmod(const Poly& a, uint64_t e, const Poly& m) {
    Poly out = one(*a.ring), base = mod(a, m);
    while (e) {
        if (e & 1) out = mulmod(out, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return out;
}

RElem eval(const Poly& f, const RElem& x) {
    const Ring& R = *f.ring;
    RElem acc = R.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f.c[i]);
    return acc;
}

GfVec residue(const Poly& f) {
    GfVec out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i].d[0];
    return gfp::trim(std::move(out));
}

Poly project(const Poly& f, uint32_t j) {
    const Ring& R = *f.ring;
    const Ring& T = *R.truncated(j);
    std::vector<RElem> out;
    out.reserve(f.c.size());
    for (const auto& e : f.c) out.push_back(R.project(e, j));
    return {&T, trim(T, std::move(out))};
}

Poly lift_from(const Ring& R, const Poly& f) {
    std::vector<RElem> out;
    out.reserve(f.c.size());
    for (const auto& e : f.c) out.push_back(R.lift_from(e));
    return {&R, trim(R, std::move(out))};
}

uint32_t content_val(const Poly& f) {
    const Ring& R = *f.ring;
    uint32_t v = R.s();
    for (const auto& e : f.c) v = std::min(v, R.val(e));
    return v;
}

Poly shift_down(const Poly& f, uint32_t k) {
    const Ring& R = *f.ring;
    std::vector<RElem> out(f.c);
    for (auto& e : out) e = R.shift_down(e, k);
    return {&R, trim(R, std::move(out))};
}

}  // namespace poly
}  // namespace qcring

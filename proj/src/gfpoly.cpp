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

#include "qcring/gfpoly.hpp"

#include <algorithm>

namespace qcring {
namespace gfp {

GfVec trim(GfVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int degree(const GfVec& f) { return static_cast<int>(f.size()) - 1; }
bool is_zero(const GfVec& f) { return f.empty(); }
bool is_one(const GfVec& f) { return f.size() == 1 && f[0] == 1; }
GfVec one() { return {1}; }

GfVec xpow(uint32_t k) {
    GfVec v(k + 1, 0);
    v[k] = 1;
    return v;
}

GfVec add(const Gf& F, const GfVec& a, const GfVec& b) {
    GfVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = F.add(x, y);
    }
    return trim(std::move(out));
}

GfVec sub(const Gf& F, const GfVec& a, const GfVec& b) {
    GfVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = F.sub(x, y);
    }
    return trim(std::move(out));
}

GfVec mul(const Gf& F, const GfVec& a, const GfVec& b) {
    if (a.empty() || b.empty()) return {};
    GfVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return trim(std::move(out));
}

GfVec scale(const Gf& F, const GfVec& a, uint32_t c) {
    if (c == 0) return {};
    GfVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
    return trim(std::move(out));
}

std::pair<GfVec, GfVec> divmod(const Gf& F, const GfVec& a, const GfVec& b) {
    require(!b.empty(), Err::NonMonicDivisor, "division by zero polynomial");
    GfVec rem = a, quot;
    int db = degree(b);
    uint32_t lcinv = F.inv(b.back());
    if (degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, 0);
    while (degree(rem) >= db) {
        int k = degree(rem) - db;
        uint32_t c = F.mul(rem.back(), lcinv);
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]));
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quot)), rem};
}

GfVec mod(const Gf& F, const GfVec& a, const GfVec& b) { return divmod(F, a, b).second; }

GfVec monic(const Gf& F, const GfVec& f) {
    if (f.empty()) return f;
    return scale(F, f, F.inv(f.back()));
}

GfVec gcd(const Gf& F, GfVec a, GfVec b) {
    while (!b.empty()) {
        GfVec r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Xgcd xgcd(const Gf& F, const GfVec& a, const GfVec& b) {
    GfVec r0 = a, r1 = b;
    GfVec u0 = one(), u1 = {};
    GfVec v0 = {}, v1 = one();
    while (!r1.empty()) {
        auto [q, r] = divmod(F, r0, r1);
        GfVec u2 = sub(F, u0, mul(F, q, u1));
        GfVec v2 = sub(F, v0, mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        uint32_t c = F.inv(r0.back());
        r0 = scale(F, r0, c);
        u0 = scale(F, u0, c);
        v0 = scale(F, v0, c);
    }
    return {r0, u0, v0};
}

uint32_t eval(const Gf& F, const GfVec& f, uint32_t x) {
    uint32_t acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

GfVec powmod(const Gf& F, GfVec base, uint64_t e, const GfVec& m) {
    GfVec result = one();
    base = mod(F, base, m);
    while (e) {
        if (e & 1) result = mod(F, mul(F, result, base), m);
        base = mod(F, mul(F, base, base), m);
        e >>= 1;
    }
    return result;
}

bool irreducible(const Gf& F, const GfVec& f) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    uint64_t q = F.q();
    // x^(q^d) == x mod f, and x^(q^(d/l)) != x for prime l | d
    GfVec x = xpow(1);
    std::vector<GfVec> frob(d + 1);  // frob[k] = x^(q^k) mod f
    frob[0] = mod(F, x, f);
    for (int k = 1; k <= d; ++k) frob[k] = powmod(F, frob[k - 1], q, f);
    if (frob[d] != mod(F, x, f)) return false;
    for (uint64_t ell : prime_factors(static_cast<uint64_t>(d))) {
        int k = d / static_cast<int>(ell);
        GfVec diff = sub(F, frob[k], mod(F, x, f));
        if (gcd(F, diff, f).size() > 1) return false;
    }
    return true;
}

bool primitive(const Gf& F, const GfVec& f) {
    int d = degree(f);
    uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();
    uint64_t n = qd - 1;
    if (!is_zero(mod(F, sub(F, powmod(F, xpow(1), n, f), one()), f))) return false;
    for (uint64_t ell : prime_factors(n)) {
        GfVec r = powmod(F, xpow(1), n / ell, f);
        if (is_one(r)) return false;
    }
    return true;
}

GfVec smallest_primitive(const Gf& F, uint32_t deg) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < deg; ++i) count *= F.q();
    for (uint64_t code = 0; code < count; ++code) {
        GfVec f(deg + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < deg; ++i) {
            f[i] = static_cast<uint32_t>(c % F.q());
            c /= F.q();
        }
        f[deg] = 1;
        if (!irreducible(F, f)) continue;
        if (primitive(F, f)) return f;
    }
    fail(Err::Internal, "no primitive polynomial found");
}

}  // namespace gfp
}  // namespace qcring

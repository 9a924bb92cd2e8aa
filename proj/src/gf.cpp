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

#include "qcring/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qcring/gfpoly.hpp"

namespace qcring {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

static bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Gf::Ptr Gf::prime(uint32_t p) {
    require(is_prime(p), Err::NonPrimeP, "p must be prime");
    auto f = std::shared_ptr<Gf>(new Gf());
    f->p_ = p;
    f->q_ = p;
    f->deg_ = 1;
    if (p == 2) {
        f->exp_ = {1};
        f->log_ = {0, 0};
        return f;
    }
    // smallest primitive root mod p
    auto fac = prime_factors(p - 1);
    uint32_t g = 0;
    for (uint32_t c = 2; c < p; ++c) {
        bool ok = true;
        for (uint64_t ell : fac) {
            uint64_t e = (p - 1) / ell, r = 1, b = c;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = c;
            break;
        }
    }
    f->exp_.resize(p - 1);
    f->log_.assign(p, 0);
    uint64_t cur = 1;
    for (uint32_t i = 0; i < p - 1; ++i) {
        f->exp_[i] = static_cast<uint32_t>(cur);
        f->log_[cur] = i;
        cur = cur * g % p;
    }
    return f;
}

uint32_t Gf::raw_mul(uint32_t a, uint32_t b) const {
    // schoolbook product of coordinate vectors mod modulus, base-field ops
    const Gf& B = *base_;
    uint32_t qb = B.q();
    std::vector<uint32_t> av = unpack(a), bv = unpack(b);
    std::vector<uint32_t> prod(2 * deg_ - 1, 0);
    for (uint32_t i = 0; i < deg_; ++i) {
        if (av[i] == 0) continue;
        for (uint32_t j = 0; j < deg_; ++j) {
            if (bv[j] == 0) continue;
            prod[i + j] = B.add(prod[i + j], B.mul(av[i], bv[j]));
        }
    }
    for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(deg_); --k) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t j = 0; j < deg_; ++j)
            prod[k - deg_ + j] = B.sub(prod[k - deg_ + j], B.mul(c, mod_[j]));
    }
    uint64_t code = 0;
    for (int i = static_cast<int>(deg_) - 1; i >= 0; --i) code = code * qb + prod[i];
    return static_cast<uint32_t>(code);
}

void Gf::build_tables(uint32_t generator_code) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = raw_mul(cur, generator_code);
    }
    require(cur == 1, Err::Internal, "generator order mismatch while building GF tables");
}

Gf::Ptr Gf::extension(Ptr base, const std::vector<uint32_t>& modulus) {
    require(base != nullptr, Err::Internal, "null base field");
    require(modulus.size() >= 2 && modulus.back() == 1, Err::ReducibleDefiningPolynomial,
            "modulus must be monic of degree >= 1");
    require(gfp::irreducible(*base, modulus), Err::ReducibleDefiningPolynomial,
            "modulus is reducible");
    auto f = std::shared_ptr<Gf>(new Gf());
    f->base_ = base;
    f->p_ = base->p();
    f->deg_ = static_cast<uint32_t>(modulus.size() - 1);
    uint64_t q = 1;
    for (uint32_t i = 0; i < f->deg_; ++i) q *= base->q();
    require(q <= (1u << 24), Err::TooLargeToEnumerate, "field too large for table arithmetic");
    f->q_ = static_cast<uint32_t>(q);
    f->mod_ = modulus;
    // generator: x-class if primitive, otherwise smallest code of full order
    auto fac = prime_factors(f->q_ - 1);
    auto has_full_order = [&](uint32_t c) {
        for (uint64_t ell : fac) {
            uint64_t e = (f->q_ - 1) / ell;
            uint32_t r = 1, b = c;
            while (e) {
                if (e & 1) r = f->raw_mul(r, b);
                b = f->raw_mul(b, b);
                e >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    };
    uint32_t xcode = base->q();  // the class of x
    uint32_t gen = 0;
    if (has_full_order(xcode)) {
        gen = xcode;
    } else {
        for (uint32_t c = 2; c < f->q_; ++c)
            if (has_full_order(c)) {
                gen = c;
                break;
            }
    }
    require(gen != 0, Err::Internal, "no generator found");
    f->build_tables(gen);
    return f;
}

namespace {
std::mutex g_canon_mutex;
std::map<std::pair<uint32_t, uint32_t>, Gf::Ptr> g_canon_cache;
}  // namespace

Gf::Ptr Gf::canonical(uint32_t p, uint32_t m) {
    require(m >= 1, Err::ReducibleDefiningPolynomial, "extension degree must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_canon_mutex);
        auto it = g_canon_cache.find({p, m});
        if (it != g_canon_cache.end()) return it->second;
    }
    Ptr f;
    if (m == 1) {
        f = prime(p);
    } else {
        auto base = prime(p);
        f = extension(base, gfp::smallest_primitive(*base, m));
    }
    std::lock_guard<std::mutex> lk(g_canon_mutex);
    g_canon_cache[{p, m}] = f;
    return f;
}

Gf::Ptr Gf::with_modulus(uint32_t p, const std::vector<uint32_t>& modulus) {
    if (modulus.size() <= 2) return prime(p);
    return extension(prime(p), modulus);
}

uint32_t Gf::deg_prime() const { return base_ ? deg_ * base_->deg_prime() : 1; }

uint32_t Gf::add(uint32_t a, uint32_t b) const {
    if (!base_) return (a + b) % p_;
    uint32_t qb = base_->q();
    uint64_t out = 0, mult = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        out += static_cast<uint64_t>(base_->add(a % qb, b % qb)) * mult;
        a /= qb;
        b /= qb;
        mult *= qb;
    }
    return static_cast<uint32_t>(out);
}

uint32_t Gf::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Gf::neg(uint32_t a) const {
    if (!base_) return (p_ - a % p_) % p_;
    uint32_t qb = base_->q();
    uint64_t out = 0, mult = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        out += static_cast<uint64_t>(base_->neg(a % qb)) * mult;
        a /= qb;
        mult *= qb;
    }
    return static_cast<uint32_t>(out);
}

uint32_t Gf::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t l = static_cast<uint64_t>(log_[a]) % (q_ - 1);
    // e may exceed 2^64 / log; reduce first
    unsigned __int128 le = static_cast<unsigned __int128>(l) * (e % (q_ - 1));
    return exp_[static_cast<uint64_t>(le % (q_ - 1))];
}

uint64_t Gf::order(uint32_t a) const {
    require(a != 0, Err::NotAUnit, "order of zero");
    if (log_[a] == 0) return 1;
    uint64_t n = q_ - 1;  // order of g^k is (q-1)/gcd(q-1, k)
    return n / std::gcd<uint64_t, uint64_t>(n, log_[a]);
}

uint32_t Gf::scale_prime(uint32_t a, uint32_t c) const {
    c %= p_;
    uint32_t out = 0;
    for (uint32_t i = 0; i < c; ++i) out = add(out, a);
    return out;
}

std::vector<uint32_t> Gf::unpack(uint32_t a) const {
    uint32_t qb = base_ ? base_->q() : p_;
    std::vector<uint32_t> v(deg_);
    for (uint32_t i = 0; i < deg_; ++i) {
        v[i] = a % qb;
        a /= qb;
    }
    return v;
}

uint32_t Gf::pack(const std::vector<uint32_t>& digits) const {
    uint32_t qb = base_ ? base_->q() : p_;
    uint64_t out = 0;
    for (size_t i = digits.size(); i-- > 0;) out = out * qb + digits[i];
    return static_cast<uint32_t>(out);
}

bool Gf::same_as(const Gf& other) const {
    if (this == &other) return true;
    if (q_ != other.q_ || p_ != other.p_ || deg_ != other.deg_ || mod_ != other.mod_) return false;
    if (!base_ && !other.base_) return true;
    if (!base_ || !other.base_) return false;
    return base_->same_as(*other.base_);
}

}  // namespace qcring

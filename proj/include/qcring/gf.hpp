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

#ifndef QCRING_GF_HPP
#define QCRING_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace qcring {

/// Finite field context. Elements are integer codes 0..q-1 packing the
/// coordinate vector over the base field (base-|base| digits); for a prime
/// field the code is the residue itself. Multiplication runs on log/antilog
/// tables built over a fixed generator, so q is limited to desk scale.
class Gf {
   public:
    using Ptr = std::shared_ptr<const Gf>;

    static Ptr prime(uint32_t p);
    /// F_{p^m} over the lexicographically smallest primitive polynomial.
    static Ptr canonical(uint32_t p, uint32_t m);
    /// Extension of `base` by a monic irreducible `modulus` (codes over base,
    /// ascending degree, length deg+1).
    static Ptr extension(Ptr base, const std::vector<uint32_t>& modulus);
    /// Canonical(p, m) but with a caller-supplied irreducible modulus over F_p.
    static Ptr with_modulus(uint32_t p, const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t q() const { return q_; }
    uint32_t deg() const { return deg_; }        // degree over base
    uint32_t deg_prime() const;                  // total degree over F_p
    const Ptr& base() const { return base_; }    // null for prime fields
    bool prime_field() const { return base_ == nullptr; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    uint32_t inv(uint32_t a) const {
        require(a != 0, Err::NotAUnit, "inverse of zero in GF");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t gen() const { return exp_[1 % (q_ - 1)]; }
    uint32_t gen_pow(uint64_t e) const { return exp_[e % (q_ - 1)]; }
    uint32_t dlog(uint32_t a) const {
        require(a != 0, Err::NotAUnit, "dlog of zero");
        return log_[a];
    }
    uint64_t order(uint32_t a) const;
    /// Multiply element by a prime-field scalar c (0..p-1).
    uint32_t scale_prime(uint32_t a, uint32_t c) const;

    std::vector<uint32_t> unpack(uint32_t a) const;  // base-field digits, length deg
    uint32_t pack(const std::vector<uint32_t>& digits) const;
    /// Base-subfield embedding: a base code as an element of this field.
    uint32_t embed_base(uint32_t base_code) const { return base_code; }
    bool in_base(uint32_t a) const { return a < (base_ ? base_->q() : p_); }

    bool same_as(const Gf& other) const;

   private:
    Gf() = default;
    void build_tables(uint32_t generator_code);
    uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free, for bootstrap

    uint32_t p_ = 0, q_ = 0, deg_ = 1;
    Ptr base_;
    std::vector<uint32_t> mod_;
    std::vector<uint32_t> exp_, log_;
};

/// Prime factorization by trial division (desk scale).
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace qcring

#endif

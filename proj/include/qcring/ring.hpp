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

#ifndef QCRING_RING_HPP
#define QCRING_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"

namespace qcring {

enum class Family { EisensteinU, GaloisRing };

struct RingSpec {
    Family family;
    uint32_t p;
    uint32_t m;
    uint32_t s;
    /// Optional defining polynomial over F_p (monic, degree m). Defaults to
    /// the lexicographically smallest primitive polynomial for (p, m).
    std::optional<std::vector<uint32_t>> h;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a finite chain ring in canonical gamma-adic form: d[i] is the
/// i-th digit as a residue-field code. Digits are Teichmueller representatives
/// for the GaloisRing family and plain subfield constants for EisensteinU.
struct RElem {
    const Ring* ring = nullptr;
    std::vector<uint32_t> d;

    bool operator==(const RElem& o) const { return d == o.d; }
    bool operator!=(const RElem& o) const { return d != o.d; }
    bool operator<(const RElem& o) const { return d < o.d; }
};

/// Arithmetic context for R = F_{p^m}[u]/<u^s> (gamma = u) or
/// R = GR(p^s, m) (gamma = p). s = 1 degenerates to the field F_q.
class Ring : public std::enable_shared_from_this<Ring> {
   public:
    static RingPtr make(const RingSpec& spec);

    Family family() const { return family_; }
    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t s() const { return s_; }
    uint32_t q() const { return fq_->q(); }
    uint64_t size() const;  // q^s
    const Gf::Ptr& fq() const { return fq_; }
    const std::vector<uint32_t>& field_poly() const { return h_; }

    bool same_as(const Ring& o) const;
    std::string spec_string() const;

    // element construction
    RElem zero() const;
    RElem one() const;
    RElem gamma() const;
    RElem from_digits(std::vector<uint32_t> digits) const;
    RElem from_residue(uint32_t code) const;  // canonical digit-set lift
    RElem from_int(int64_t k) const;          // k * 1

    // arithmetic
    RElem add(const RElem& a, const RElem& b) const;
    RElem sub(const RElem& a, const RElem& b) const;
    RElem neg(const RElem& a) const;
    RElem mul(const RElem& a, const RElem& b) const;
    RElem inv(const RElem& a) const;
    RElem pow_u(const RElem& a, uint64_t e) const;
    bool is_zero(const RElem& a) const;
    bool is_unit(const RElem& a) const { return a.d[0] != 0; }
    uint32_t val(const RElem& a) const;  // gamma-adic valuation, s for zero
    RElem shift_up(const RElem& a, uint32_t k) const;    // * gamma^k
    RElem shift_down(const RElem& a, uint32_t k) const;  // exact / gamma^k (zero-pad)
    uint32_t residue(const RElem& a) const { return a.d[0]; }

    /// gamma-adic digits (a copy of the canonical coordinates).
    std::vector<uint32_t> gamma_decompose(const RElem& a) const { return a.d; }

    /// The truncated ring R^{(j)} = R mod gamma^j, 1 <= j <= s.
    RingPtr truncated(uint32_t j) const;
    RElem project(const RElem& a, uint32_t j) const;  // mu_j(a), element of truncated(j)
    RElem lift_from(const RElem& a) const;            // zero-pad digits into this ring

    /// The q-element canonical digit set (Teichmueller set for GaloisRing,
    /// F_q as constants for EisensteinU).
    std::vector<RElem> teichmuller_digits() const;

    void check_same(const RElem& a, const RElem& b) const;
    void check_mine(const RElem& a) const;

    // GaloisRing internals, exposed for tests: coefficient vector over Z_{p^s}
    // with respect to the lifted defining polynomial.
    std::vector<uint64_t> to_coeffs(const RElem& a) const;
    RElem from_coeffs(std::vector<uint64_t> coeffs) const;

   private:
    Ring() = default;
    void init_galois_tables();

    Family family_;
    uint32_t p_ = 0, m_ = 1, s_ = 1;
    Gf::Ptr fq_;
    std::vector<uint32_t> h_;  // defining polynomial over F_p

    // GaloisRing family only
    uint64_t ps_ = 0;                                  // p^s
    std::vector<uint64_t> grmod_;                      // monic lift of h_ over Z_{p^s}
    std::vector<std::vector<uint64_t>> teich_coeffs_;  // q x m

    mutable std::vector<RingPtr> trunc_;  // built in make()
};

}  // namespace qcring

#endif

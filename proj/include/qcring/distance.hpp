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

#ifndef QCRING_DISTANCE_HPP
#define QCRING_DISTANCE_HPP

#include <functional>
#include <optional>
#include <string>

#include "ring.hpp"

namespace qcring {

/// Exact q-power cardinality (module sizes over a chain ring are always
/// powers of the residue field size).
struct QPow {
    uint64_t q = 1;
    uint64_t e = 0;

    bool fits_u64() const;
    uint64_t to_u64() const;  // throws BudgetExceeded if too large
    std::string str() const;
    bool operator==(const QPow& o) const { return q == o.q ? e == o.e : to_u64() == o.to_u64(); }
};

/// Generator rows brought to gamma-adic echelon form: row i is
/// gamma^(t_i) * (unit-pivot row); the set generates the same module and
/// every codeword has a unique coefficient vector with c_i ranging over a
/// transversal of R / gamma^(s - t_i).
struct Echelon {
    RingPtr ring;
    uint32_t ncols = 0;
    std::vector<uint32_t> torsion;           // t_i
    std::vector<std::vector<RElem>> rows;    // gamma^(t_i) v_i
    std::vector<uint32_t> pivots;            // pivot column of each row
};

Echelon echelon_form(const RingPtr& R, uint32_t ncols, std::vector<std::vector<RElem>> rows);

QPow code_cardinality(const Echelon& e);

/// Visit each codeword exactly once. Throws BudgetExceeded if |C| > budget.
void enumerate_codewords(const Echelon& e, uint64_t budget,
                         const std::function<void(const std::vector<RElem>&)>& fn);

/// Membership of a word in the module generated by the echelon rows.
bool echelon_contains(const Echelon& e, std::vector<RElem> word);

struct WeightProfile {
    std::optional<uint32_t> min_hamming;  // empty for the zero code
    std::optional<uint32_t> min_lee;
    std::string method;  // exhaustive | socle | sampled
    uint64_t codewords_examined = 0;
};

/// Exact minimum Hamming weight by full enumeration (threads partition the
/// leading coefficient range; deterministic min-merge).
WeightProfile min_hamming_exact(const Echelon& e, uint64_t budget, uint32_t threads = 1);

/// Exact minimum Hamming weight through the socle {c : gamma c = 0}, an
/// F_q-space of dimension = number of echelon rows.
WeightProfile socle_min_hamming(const Echelon& e, uint64_t budget, uint32_t threads = 1);

/// Lee weight over F_2+uF_2 (weights of 0,1,u,1+u are 0,1,2,1).
uint32_t lee_weight(const Ring& R, const std::vector<RElem>& word);
/// Gray map over F_2+uF_2: 0->00, 1->01, u->11, 1+u->10.
std::vector<uint8_t> gray_map(const Ring& R, const std::vector<RElem>& word);
/// Exact minimum Lee weight (enumeration; F_2+uF_2 only).
WeightProfile min_lee_f2u(const Echelon& e, uint64_t budget);

/// Minimum weight over `trials` seeded pseudo-random codewords; an upper
/// bound on the true distance. Empty for the zero code or trials = 0.
WeightProfile sampled_upper_bound(const Echelon& e, uint64_t trials, uint64_t seed);

uint32_t hamming_weight(const Ring& R, const std::vector<RElem>& word);

}  // namespace qcring

#endif

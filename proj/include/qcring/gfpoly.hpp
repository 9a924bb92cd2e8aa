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

#ifndef QCRING_GFPOLY_HPP
#define QCRING_GFPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace qcring {

/// Polynomials over a Gf, coefficient codes ascending by degree, trailing
/// zeros trimmed (zero polynomial = empty vector).
using GfVec = std::vector<uint32_t>;

namespace gfp {

GfVec trim(GfVec v);
int degree(const GfVec& f);  // -1 for zero
bool is_zero(const GfVec& f);
bool is_one(const GfVec& f);
GfVec one();
GfVec xpow(uint32_t k);

GfVec add(const Gf& F, const GfVec& a, const GfVec& b);
GfVec sub(const Gf& F, const GfVec& a, const GfVec& b);
GfVec mul(const Gf& F, const GfVec& a, const GfVec& b);
GfVec scale(const Gf& F, const GfVec& a, uint32_t c);
std::pair<GfVec, GfVec> divmod(const Gf& F, const GfVec& a, const GfVec& b);
GfVec mod(const Gf& F, const GfVec& a, const GfVec& b);
GfVec gcd(const Gf& F, GfVec a, GfVec b);  // monic
/// g = gcd, plus u,v with u*a + v*b = g.
struct Xgcd {
    GfVec g, u, v;
};
Xgcd xgcd(const Gf& F, const GfVec& a, const GfVec& b);
uint32_t eval(const Gf& F, const GfVec& f, uint32_t x);
GfVec powmod(const Gf& F, GfVec base, uint64_t e, const GfVec& m);
GfVec monic(const Gf& F, const GfVec& f);

bool irreducible(const Gf& F, const GfVec& f);
/// Order of x modulo f equals q^deg - 1 (f assumed irreducible).
bool primitive(const Gf& F, const GfVec& f);
/// Lexicographically smallest (by ascending integer code) monic primitive
/// polynomial of the given degree.
GfVec smallest_primitive(const Gf& F, uint32_t deg);

}  // namespace gfp

}  // namespace qcring

#endif

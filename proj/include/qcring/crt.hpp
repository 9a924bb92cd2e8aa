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

#ifndef QCRING_CRT_HPP
#define QCRING_CRT_HPP

#include "poly.hpp"

namespace qcring {

/// Orthogonal idempotent system for R[x]/<f> = (+) R[x]/<f_i>, built once
/// from pairwise-coprime monic factors and cached.
struct CrtSystem {
    RingPtr ring;
    Poly f;
    std::vector<Poly> factors;
    std::vector<Poly> cofactors;    // f / f_i
    std::vector<Poly> idempotents;  // e_i = b_i * cofactor_i mod f
};

CrtSystem idempotents(const std::vector<Poly>& factors, const Poly& f);

/// Components c mod f_i.
std::vector<Poly> crt_decompose(const Poly& c, const CrtSystem& sys);

/// Unique c mod f with c = component_i mod f_i.
Poly crt_recompose(const std::vector<Poly>& components, const CrtSystem& sys);

}  // namespace qcring

#endif

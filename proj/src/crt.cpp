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

#include "qcring/crt.hpp"

#include "qcring/polyring.hpp"

namespace qcring {

CrtSystem idempotents(const std::vector<Poly>& factors, const Poly& f) {
    require(!factors.empty(), Err::NotCoprimeFactors, "empty factor list");
    const Ring& R = *f.ring;
    Poly prod = poly::one(R);
    for (const auto& fi : factors) {
        require(poly::is_monic(fi), Err::NotCoprimeFactors, "factors must be monic");
        prod = poly::mul(prod, fi);
    }
    require(prod == f, Err::ProductMismatch, "factor product differs from the modulus");
    CrtSystem sys;
    sys.ring = R.shared_from_this();
    sys.f = f;
    sys.factors = factors;
    for (size_t i = 0; i < factors.size(); ++i) {
        Poly cof = poly::one(R);
        for (size_t j = 0; j < factors.size(); ++j)
            if (j != i) cof = poly::mul(cof, factors[j]);
        auto wit = coprime_over_ring(factors[i], cof);
        require(wit.has_value(), Err::NotCoprimeFactors, "factors are not pairwise coprime");
        // e_i = b_i * cofactor_i mod f, from a_i f_i + b_i cofactor_i = 1
        sys.idempotents.push_back(poly::mod(poly::mul(wit->second, cof), f));
        sys.cofactors.push_back(std::move(cof));
    }
    return sys;
}

std::vector<Poly> crt_decompose(const Poly& c, const CrtSystem& sys) {
    std::vector<Poly> out;
    out.reserve(sys.factors.size());
    for (const auto& fi : sys.factors) out.push_back(poly::mod(c, fi));
    return out;
}

Poly crt_recompose(const std::vector<Poly>& components, const CrtSystem& sys) {
    require(components.size() == sys.factors.size(), Err::DimensionMismatch,
            "component count mismatch");
    const Ring& R = *sys.ring;
    Poly acc = poly::zero(R);
    for (size_t i = 0; i < components.size(); ++i) {
        require(poly::degree(components[i]) < poly::degree(sys.factors[i]),
                Err::ComponentDegreeTooHigh, "component not reduced modulo its factor");
        acc = poly::add(acc, poly::mul(components[i], sys.idempotents[i]));
    }
    return poly::mod(acc, sys.f);
}

}  // namespace qcring

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

#ifndef QCRING_ERRORS_HPP
#define QCRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcring {

enum class Err {
    NonPrimeP,
    ReducibleDefiningPolynomial,
    RingMismatch,
    NotAUnit,
    IndexOutOfRange,
    NonMonicDivisor,
    NotCoprimeLength,
    NotADivisor,
    NonSquareFreeResidue,
    NotARootOfUnity,
    NotBasicIrreducible,
    NotASubextension,
    NoSuchOrder,
    DegreeMismatch,
    NotCoprimeFactors,
    ProductMismatch,
    ComponentDegreeTooHigh,
    NotCoprime,
    NotFree,
    NonInvertibleN,
    CosetCollision,
    DimensionMismatch,
    TooLargeToEnumerate,
    NotFreeForm,
    AssumptionViolated,
    BlockMembershipViolated,
    BudgetExceeded,
    UnsupportedRing,
    ParseError,
    Internal
};

class Error : public std::runtime_error {
   public:
    Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Err kind() const noexcept { return kind_; }

   private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, Err kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace qcring

#endif

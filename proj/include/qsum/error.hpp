// Copyright 2026 The qsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSUM_ERROR_HPP
#define QSUM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsum {

enum class Errc {
    NotPrime,
    CharTwoOrThree,
    Overflow,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    DegreeTooLow,
    ZeroScale,
    NotMonicQuartic,
    BudgetExceeded,
    WrongDegree,
    AllZero,
    DegenerateDiscriminant,
    NotSquareFree,
    DegenerateParameters,
    ZeroParameter,
    IdentityViolation,
    NonResidue,
    WrongResidueClass,
    LambdaZero,
    PIs19,
    ParseError,
    UnknownIdentity,
    UnknownExample,
    ConfigInvalid,
    IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (tests, the CLI) can branch on the kind without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace qsum

#endif  // QSUM_ERROR_HPP

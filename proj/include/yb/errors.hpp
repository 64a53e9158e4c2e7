/*
   Copyright 2026 the yb authors

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

#ifndef YB_ERRORS_HPP
#define YB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yb {

// Every failure mode carries its input verbatim in the message, so that a
// failing randomized run is reproducible from the error text alone.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};

// det Pi1 = 0: the refactorization map is undefined at this point.
struct SingularPi1 : Error {
    explicit SingularPi1(const std::string& what) : Error(what) {}
};

struct NonCommuting : Error {
    explicit NonCommuting(const std::string& what) : Error(what) {}
};

// A rational map hit a vanishing denominator (or another open-set condition).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what) : Error(what) {}
};

struct ZeroEpsilon : Error {
    explicit ZeroEpsilon(const std::string& what = "epsilon must be nonzero") : Error(what) {}
};

// The bracketed matrix in the triple-product recovery is not invertible.
struct SingularRecovery : Error {
    explicit SingularRecovery(const std::string& what) : Error(what) {}
};

struct OracleInconclusive : Error {
    explicit OracleInconclusive(const std::string& what) : Error(what) {}
};

// Internal consistency assertion of the leaf-coordinate extraction; must
// never fire for spectrum-preserving refactorizations.
struct LeafExtractionMismatch : Error {
    explicit LeafExtractionMismatch(const std::string& what) : Error(what) {}
};

// Rational bit-size exceeded the cap requested via YB_MAX_BITS.
struct BitLimitExceeded : Error {
    explicit BitLimitExceeded(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace yb

#endif

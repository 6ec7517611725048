// Copyright 2026 The qfsm Authors
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

#ifndef QFSM_ERRORS_H
#define QFSM_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace qfsm {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (bad index, inverted interval, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A structural invariant does not hold (e.g. a generator set is not orthonormal).
struct InvariantViolation : Error {
    using Error::Error;
};

/// A computation produced a non-finite value.
struct NumericalError : Error {
    using Error::Error;
};

/// Input text could not be parsed (e.g. a bit string holding a symbol other than 0/1).
struct ParseError : Error {
    using Error::Error;
};

/// A simulation configuration violates one or more invariants. Every problem is listed.
struct ConfigError : Error {
    explicit ConfigError(std::vector<std::string> problems);
    std::vector<std::string> problems;
};

/// The analytic propagator was requested for a coefficient matrix that does not commute with itself
/// at different times.
struct NonCommutingError : Error {
    NonCommutingError(double residual, double tolerance);
    double residual;
    double tolerance;
};

}  // namespace qfsm

#endif  // QFSM_ERRORS_H

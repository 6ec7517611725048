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

#include "qfsm/errors.h"

#include <sstream>
#include <utility>

namespace qfsm {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "invalid configuration";
    for (std::size_t i = 0; i < problems.size(); ++i) {
        out += (i == 0 ? ": " : "; ");
        out += problems[i];
    }
    return out;
}

std::string non_commuting_message(double residual, double tolerance) {
    std::ostringstream msg;
    msg << "non-commuting coefficient: max |[g(ta), g(tb)]| = " << residual << " exceeds " << tolerance
        << "; the analytic propagator does not apply, integrate with rk4 instead";
    return msg.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems_in)
    : Error(join_problems(problems_in)), problems(std::move(problems_in)) {}

NonCommutingError::NonCommutingError(double residual_in, double tolerance_in)
    : Error(non_commuting_message(residual_in, tolerance_in)), residual(residual_in), tolerance(tolerance_in) {}

}  // namespace qfsm

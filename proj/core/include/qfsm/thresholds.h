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

#ifndef QFSM_THRESHOLDS_H
#define QFSM_THRESHOLDS_H

#include <string>
#include <vector>

namespace qfsm {

/// Which scalar is compared against the coherence threshold.
enum class CoherenceMeasure {
    /// sqrt(S1^2 + S2^2) = 2 |rho_01|, the magnitude of the Bloch vector's transverse part.
    BlochPlane,
    /// |rho_01| itself.
    AbsRho01,
};

/// Cut-offs that turn final populations and coherences into logic bits.
struct LogicThresholds {
    double population = 0.6;
    double coherence = 0.5;
    /// Absolute slack subtracted from each threshold before the >= comparison.
    double tolerance = 1e-9;
    CoherenceMeasure measure = CoherenceMeasure::BlochPlane;

    bool operator==(const LogicThresholds&) const = default;
};

/// Empty when valid: both thresholds in (0, 1) and tolerance >= 0.
std::vector<std::string> validate(const LogicThresholds& thresholds);

}  // namespace qfsm

#endif  // QFSM_THRESHOLDS_H

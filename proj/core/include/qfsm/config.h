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

#ifndef QFSM_CONFIG_H
#define QFSM_CONFIG_H

#include <cstddef>
#include <string>
#include <vector>

#include "qfsm/linalg.h"
#include "qfsm/pulses.h"
#include "qfsm/thresholds.h"

namespace qfsm {

enum class InitialStateKind { Ground, Excited, Mixed, Explicit };

struct InitialState {
    InitialStateKind kind = InitialStateKind::Ground;
    /// Coherence-vector components, used only for InitialStateKind::Explicit.
    std::vector<double> components;
    /// Skip the positivity check on explicit vectors (linearity tests feed arbitrary vectors).
    bool unchecked = false;

    bool operator==(const InitialState&) const = default;
};

enum class OutputFormat { Csv, Json };

/// Everything one simulation run needs. Defaults reproduce the resonant Gaussian-pulse run
/// (omega0 = 1, tau = 5, sigma = 1, Delta = 0, window [0, 10], ground start).
struct SimulationConfig {
    int dimension = 2;
    PulseProfile pulse = PulseProfile::gaussian(1.0, 5.0, 1.0);
    DetuningSpec detuning{};
    double t0 = 0.0;
    double t1 = 10.0;
    double dt = 1e-3;
    /// Times in this config are measured in units of `time_scale`: physical time = time_scale * t,
    /// and the coefficient matrix is multiplied by time_scale. 1 means physical time.
    double time_scale = 1.0;
    InitialState initial_state{};
    /// Record every n-th step (the final sample is always kept).
    std::size_t decimation = 1;
    std::string output_path;
    OutputFormat output_format = OutputFormat::Csv;
    LogicThresholds thresholds{};

    bool operator==(const SimulationConfig&) const = default;
};

/// Every violated invariant, in a stable order. Empty means valid.
std::vector<std::string> validate(const SimulationConfig& cfg);

/// Throws ConfigError listing every violated invariant.
void require_valid(const SimulationConfig& cfg);

}  // namespace qfsm

#endif  // QFSM_CONFIG_H

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

#include "qfsm/config.h"

#include <cmath>

#include "qfsm/dynamics.h"
#include "qfsm/errors.h"

namespace qfsm {

std::vector<std::string> validate(const LogicThresholds& thresholds) {
    std::vector<std::string> problems;
    if (!(thresholds.population > 0.0 && thresholds.population < 1.0)) {
        problems.emplace_back("thresholds.population must lie in (0, 1)");
    }
    if (!(thresholds.coherence > 0.0 && thresholds.coherence < 1.0)) {
        problems.emplace_back("thresholds.coherence must lie in (0, 1)");
    }
    if (!(thresholds.tolerance >= 0.0) || !std::isfinite(thresholds.tolerance)) {
        problems.emplace_back("thresholds.tolerance must be >= 0");
    }
    return problems;
}

std::vector<std::string> validate(const SimulationConfig& cfg) {
    std::vector<std::string> problems;
    if (cfg.dimension < 2) {
        problems.emplace_back("dimension must be >= 2");
    }
    if (!std::isfinite(cfg.t0) || !std::isfinite(cfg.t1)) {
        problems.emplace_back("window bounds must be finite");
    } else if (cfg.t0 > cfg.t1) {
        problems.emplace_back("window start must not exceed window end");
    }
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        problems.emplace_back("dt must be positive");
    }
    if (!(cfg.time_scale > 0.0) || !std::isfinite(cfg.time_scale)) {
        problems.emplace_back("time_scale must be positive");
    }
    if (!std::isfinite(cfg.detuning.delta)) {
        problems.emplace_back("delta must be finite");
    }
    if (cfg.decimation == 0) {
        problems.emplace_back("decimation must be >= 1");
    }
    for (auto& p : validate(cfg.thresholds)) {
        problems.push_back(std::move(p));
    }
    if (cfg.dimension >= 2 && cfg.initial_state.kind == InitialStateKind::Explicit) {
        try {
            initial_coherence(cfg, make_basis(cfg.dimension));
        } catch (const ConfigError& e) {
            problems.insert(problems.end(), e.problems.begin(), e.problems.end());
        }
    }
    return problems;
}

void require_valid(const SimulationConfig& cfg) {
    if (auto problems = validate(cfg); !problems.empty()) {
        throw ConfigError(std::move(problems));
    }
}

}  // namespace qfsm

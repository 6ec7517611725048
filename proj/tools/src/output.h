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


#ifndef QFSM_TOOLS_OUTPUT_H
#define QFSM_TOOLS_OUTPUT_H

#include <ostream>
#include <string>
#include <vector>

#include "config_io.h"
#include "qfsm/config.h"
#include "qfsm/dynamics.h"

namespace qfsm::cli {

/// %.17g, the shortest format guaranteed to round-trip a double.
std::string format_number(double x);

/// t, S1..S{N^2-1}, then the density-matrix observables.
std::vector<std::string> trajectory_columns(int dimension);

/// Run metadata. Contains no timestamps or host data, so equal configs give equal bytes.
Json trajectory_metadata(const SimulationConfig& cfg, const Trajectory& traj);

/// First line is "# " followed by the metadata as compact JSON, then a header row and one row per sample.
void write_trajectory_csv(std::ostream& out, const SimulationConfig& cfg, const Trajectory& traj);
void write_trajectory_json(std::ostream& out, const SimulationConfig& cfg, const Trajectory& traj);

/// Final populations, coherence, logic bits (two-level only) and norm drift.
Json trajectory_summary(const SimulationConfig& cfg, const Trajectory& traj);

/// 2 |rho_01| of the final sample; equals the Bloch-plane magnitude for N = 2.
double transverse_coherence(const RealVector& s, int dimension);

/// Writes `text` to `path`, replacing it. Throws IoError.
void write_file(const std::string& path, const std::string& text);

}  // namespace qfsm::cli

#endif  // QFSM_TOOLS_OUTPUT_H

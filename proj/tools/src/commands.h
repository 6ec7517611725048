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


#ifndef QFSM_TOOLS_COMMANDS_H
#define QFSM_TOOLS_COMMANDS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qfsm/config.h"

namespace qfsm::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitConfig = 2,
    kExitNumerical = 3,
    kExitEncoding = 4,
};

struct GlobalOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> output_path;
    std::optional<std::string> format;
    /// Reserved for test-data generation; no subcommand draws random numbers.
    std::optional<std::uint64_t> seed;
};

/// Default config (or --config), with --output and --format applied on top.
SimulationConfig resolve_config(const GlobalOptions& global);

/// Runs `body`, printing any error to `err` and mapping it to an exit code.
int guarded(const std::function<int()>& body, std::ostream& err);

/// Writes the trajectory to the configured path and the JSON summary to `out`. With no path the
/// trajectory goes to "trajectory.csv" / "trajectory.json".
int cmd_simulate(const GlobalOptions& global, std::ostream& out);

enum class PropagateMethod { Rk4, Sylvester, Both };
PropagateMethod parse_method(const std::string& name);
int cmd_propagate(const GlobalOptions& global, PropagateMethod method, double commute_tolerance, std::ostream& out);

struct ParityOptions {
    std::string bits;
    std::string start = "even";
    std::string mode = "logical";
    /// Emit the four-row state table instead of running `bits`.
    bool truth_table = false;
};
int cmd_parity(const GlobalOptions& global, const ParityOptions& opts, std::ostream& out);

int cmd_generators(const GlobalOptions& global, int dimension, bool check, std::ostream& out);

struct SweepSpec {
    SimulationConfig base;
    /// omega0, sigma, tau or delta.
    std::string axis;
    std::vector<double> values;
    int workers = 1;
};

/// Throws ConfigError listing every problem.
void validate(const SweepSpec& spec);

/// Copy of `base` with the axis set to `value`. Throws ConfigError when the pulse has no such parameter.
SimulationConfig apply_axis(const SimulationConfig& base, const std::string& axis, double value);

struct SweepRow {
    double value = 0.0;
    bool ok = false;
    std::string error;
    int exit_code = kExitOk;
    double pulse_area = 0.0;
    std::vector<double> populations;
    double coherence = 0.0;
    int state_bit = -1;
    int coherence_bit = -1;
    double norm_drift = 0.0;
};

/// One row per value, sorted by value (stable for repeats). A failing run yields a row with ok = false.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Parses "a,b,c" into numbers. Throws ConfigError.
std::vector<double> parse_values(const std::string& text);

int cmd_sweep(const GlobalOptions& global, const std::string& axis, const std::string& values, int workers,
              std::ostream& out);

}  // namespace qfsm::cli

#endif  // QFSM_TOOLS_COMMANDS_H

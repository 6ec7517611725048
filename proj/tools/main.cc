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


#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
    using namespace qfsm::cli;

    CLI::App app{"Coherence-vector simulator and quantum parity checker"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    std::string config_path, output_path, format;
    std::uint64_t seed = 0;
    auto* config_opt = app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    auto* output_opt = app.add_option("--output", output_path, "Output file (default: standard output or trajectory.*)");
    auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    auto* seed_opt = app.add_option("--seed", seed, "Seed reserved for test-data generation");

    std::function<int()> action;

    auto* simulate = app.add_subcommand("simulate", "Integrate the coherence-vector equation and write a trajectory");
    simulate->callback([&] { action = [&] { return cmd_simulate(global, std::cout); }; });

    auto* propagate = app.add_subcommand("propagate", "Compare the RK4 endpoint with the analytic propagator");
    std::string method = "both";
    double commute_tolerance = 1e-8;
    propagate->add_option("--method", method, "rk4, sylvester or both")
        ->check(CLI::IsMember({"rk4", "sylvester", "both"}))
        ->capture_default_str();
    propagate->add_option("--commute-tolerance", commute_tolerance, "Largest accepted sampled commutator norm")
        ->capture_default_str();
    propagate->callback([&] {
        action = [&] { return cmd_propagate(global, parse_method(method), commute_tolerance, std::cout); };
    });

    auto* parity = app.add_subcommand("parity", "Run the serial parity checker");
    ParityOptions parity_opts;
    parity->add_option("--bits", parity_opts.bits, "Input bit string, e.g. 0110");
    parity->add_option("--start", parity_opts.start, "Start state")
        ->check(CLI::IsMember({"even", "odd", "0", "1"}))
        ->capture_default_str();
    parity->add_option("--mode", parity_opts.mode, "logical or physical")
        ->check(CLI::IsMember({"logical", "physical"}))
        ->capture_default_str();
    parity->add_flag("--truth-table", parity_opts.truth_table, "Emit the four-row state table");
    parity->callback([&] { action = [&] { return cmd_parity(global, parity_opts, std::cout); }; });

    auto* generators = app.add_subcommand("generators", "Print the su(N) generators and structure constants");
    int dimension = 2;
    bool check = false;
    generators->add_option("--n", dimension, "Number of levels N >= 2")->required();
    generators->add_flag("--check", check, "Verify orthonormality and the commutator relations");
    generators->callback([&] { action = [&] { return cmd_generators(global, dimension, check, std::cout); }; });

    auto* sweep = app.add_subcommand("sweep", "Simulate once per value of one parameter");
    std::string axis, values;
    int workers = 1;
    sweep->add_option("--axis", axis, "omega0, sigma, tau or delta")->required();
    sweep->add_option("--values", values, "Comma-separated values")->required();
    sweep->add_option("--workers", workers, "Parallel runs")->capture_default_str();
    sweep->callback([&] { action = [&] { return cmd_sweep(global, axis, values, workers, std::cout); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (*config_opt) global.config_path = config_path;
    if (*output_opt) global.output_path = output_path;
    if (*format_opt) global.format = format;
    if (*seed_opt) global.seed = seed;
    return guarded(action, std::cerr);
}

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


#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.h"
#include "config_io.h"
#include "io_error.h"
#include "gtest/gtest.h"
#include "output.h"
#include "qfsm/errors.h"
#include "support/oracles.h"

using namespace qfsm;
using namespace qfsm::cli;

namespace {

std::vector<std::string> problems_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.problems;
    }
    return {};
}

bool contains(const std::vector<std::string>& haystack, const std::string& needle) {
    for (const auto& h : haystack) {
        if (h.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("qfsm_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(const std::string& args, const std::filesystem::path& cwd) {
    const std::string cmd = "cd '" + cwd.string() + "' && '" QFSM_CLI_PATH "' " + args + " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(config_io, default_config_is_valid_and_default) {
    const SimulationConfig cfg = parse_config(R"({
        "pulse": {"kind": "gaussian", "omega0": 1.0, "tau": 5.0, "sigma": 1.0},
        "delta": 0.0, "window": [0, 10], "initial_state": "ground"})");
    ASSERT_EQ(cfg, SimulationConfig{});
    ASSERT_EQ(parse_config("{}"), SimulationConfig{});
}

TEST(config_io, negative_dt_reported) {
    const auto problems = problems_of(R"({"dt": -1})");
    ASSERT_TRUE(contains(problems, "dt must be positive"));
}

TEST(config_io, time_dependent_delta_rejected) {
    ASSERT_TRUE(contains(problems_of(R"({"delta": {"kind": "gaussian"}})"), "time-dependent"));
    ASSERT_TRUE(contains(problems_of(R"({"delta": [0, 1, 2]})"), "time-dependent"));
}

TEST(config_io, unknown_keys_and_aggregation) {
    const auto problems = problems_of(R"({"dimension": 1, "window": [3, 1], "colour": "red",
        "pulse": {"kind": "gaussian", "sigma": 1, "width": 2}, "thresholds": {"population": 2}})");
    ASSERT_TRUE(contains(problems, "unknown key 'colour'"));
    ASSERT_TRUE(contains(problems, "unknown key 'pulse.width'"));
    ASSERT_TRUE(contains(problems, "dimension must be >= 2"));
    ASSERT_TRUE(contains(problems, "window start"));
    ASSERT_TRUE(contains(problems, "thresholds.population"));
}

TEST(config_io, type_errors) {
    ASSERT_TRUE(contains(problems_of(R"({"dt": "small"})"), "dt must be a number"));
    ASSERT_TRUE(contains(problems_of(R"({"dimension": 2.5})"), "dimension must be an integer"));
    ASSERT_TRUE(contains(problems_of(R"({"decimation": -3})"), "decimation must be non-negative"));
    ASSERT_TRUE(contains(problems_of(R"({"pulse": {"kind": "square"}})"), "kind must be one of"));
    ASSERT_TRUE(contains(problems_of(R"({"pulse": {"kind": "gaussian", "sigma": 0}})"), "sigma"));
    ASSERT_TRUE(contains(problems_of(R"({"pulse": {"kind": "dd", "interval": 1}})"), "inner is required"));
    ASSERT_TRUE(contains(problems_of(R"({"initial_state": "sideways"})"), "initial_state"));
    ASSERT_TRUE(contains(problems_of(R"({"initial_state": [0, 0, 2]})"), "valid density matrix"));
    ASSERT_TRUE(contains(problems_of(R"({"output": {"format": "xml"}})"), "csv or json"));
    ASSERT_TRUE(contains(problems_of("[1, 2]"), "config must be an object"));
    ASSERT_TRUE(contains(problems_of("{"), "malformed JSON"));
}

TEST(config_io, round_trip_random_configs) {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        SimulationConfig cfg;
        switch (pick(rng)) {
            case 0:
                cfg.pulse = PulseProfile::gaussian(u(rng), u(rng) * 3.0, u(rng));
                break;
            case 1:
                cfg.pulse = PulseProfile::constant(u(rng) - 1.5);
                break;
            case 2:
                cfg.pulse = PulseProfile::zero();
                break;
            default:
                cfg.pulse = PulseProfile::decoupled(PulseProfile::gaussian(u(rng), 5.0, u(rng)), u(rng) / 7.0);
                break;
        }
        cfg.detuning.delta = u(rng) - 1.5;
        cfg.t0 = u(rng);
        cfg.t1 = cfg.t0 + u(rng) * 5.0;
        cfg.dt = u(rng) * 1e-3;
        cfg.time_scale = u(rng);
        cfg.decimation = static_cast<std::size_t>(pick(rng) + 1);
        cfg.output_format = pick(rng) % 2 ? OutputFormat::Json : OutputFormat::Csv;
        cfg.output_path = "out/" + std::to_string(trial);
        cfg.thresholds.population = u(rng) / 3.1;
        cfg.thresholds.measure = pick(rng) % 2 ? CoherenceMeasure::AbsRho01 : CoherenceMeasure::BlochPlane;
        if (pick(rng) == 0) {
            const RealVector s = oracle::random_unit_vector(rng, 3) * 0.9;
            cfg.initial_state = InitialState{InitialStateKind::Explicit, {s[0], s[1], s[2]}, false};
        } else {
            cfg.initial_state.kind = pick(rng) % 2 ? InitialStateKind::Excited : InitialStateKind::Mixed;
        }
        ASSERT_EQ(parse_config(serialize_config(cfg)), cfg) << serialize_config(cfg);
    }
}

TEST(config_io, missing_file_is_io_error) {
    ASSERT_THROW(load_config("/nonexistent/qfsm.json"), IoError);
}

TEST(output, csv_layout_and_precision) {
    SimulationConfig cfg;
    cfg.dt = 0.5;
    const Trajectory traj = integrate(cfg);
    std::ostringstream out;
    write_trajectory_csv(out, cfg, traj);
    std::istringstream lines(out.str());
    std::string meta, header, first;
    std::getline(lines, meta);
    std::getline(lines, header);
    std::getline(lines, first);
    ASSERT_EQ(meta.rfind("# {", 0), 0u);
    ASSERT_EQ(header, "t,S1,S2,S3,rho00,rho11,re_rho01,im_rho01");
    ASSERT_EQ(first, "0,0,0,1,1,0,0,0");
    ASSERT_EQ(format_number(0.1), "0.10000000000000001");
    ASSERT_EQ(trajectory_columns(3).size(), 1u + 8u + 9u);
}

TEST(output, summary_reports_default_endpoint) {
    const Trajectory traj = integrate(SimulationConfig{});
    const Json s = trajectory_summary(SimulationConfig{}, traj);
    ASSERT_NEAR(s["populations"][1].get<double>(), 0.60015, 1e-5);
    ASSERT_NEAR(s["coherence"].get<double>(), 0.97974, 1e-5);
    ASSERT_EQ(s["logic"]["state_bit"].get<int>(), 1);
    ASSERT_LT(s["norm_drift"].get<double>(), 1e-9);
}

TEST(commands, simulate_excited_start_flips_coherence) {
    const auto dir = scratch_dir("excited");
    std::ofstream(dir / "cfg.json") << R"({"initial_state": "excited"})";
    GlobalOptions g;
    g.config_path = (dir / "cfg.json").string();
    g.output_path = (dir / "traj.json").string();
    g.format = "json";
    std::ostringstream out;
    ASSERT_EQ(cmd_simulate(g, out), kExitOk);
    const Json summary = Json::parse(out.str());
    ASSERT_NEAR(summary["populations"][0].get<double>(), 0.60015, 1e-5);
    ASSERT_GT(summary["final_state"][1].get<double>(), 0.97);
    const Json traj = Json::parse(read_file(dir / "traj.json"));
    ASSERT_EQ(traj["rows"].size(), 10001u);
}

TEST(commands, simulate_zero_pulse_is_constant) {
    const auto dir = scratch_dir("zero");
    std::ofstream(dir / "cfg.json") << R"({"pulse": {"kind": "zero"}, "dt": 0.1})";
    GlobalOptions g;
    g.config_path = (dir / "cfg.json").string();
    g.output_path = (dir / "traj.csv").string();
    std::ostringstream out;
    ASSERT_EQ(cmd_simulate(g, out), kExitOk);
    std::istringstream lines(read_file(dir / "traj.csv"));
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        ASSERT_EQ(line.substr(line.find(',')), ",0,0,1,1,0,0,0");
    }
}

TEST(commands, simulate_output_is_deterministic) {
    const auto dir = scratch_dir("determinism");
    GlobalOptions g;
    g.output_path = (dir / "a.csv").string();
    std::ostringstream s1, s2;
    ASSERT_EQ(cmd_simulate(g, s1), kExitOk);
    g.output_path = (dir / "b.csv").string();
    ASSERT_EQ(cmd_simulate(g, s2), kExitOk);
    const std::string a = read_file(dir / "a.csv"), b = read_file(dir / "b.csv");
    // Only the embedded output path differs.
    ASSERT_EQ(a.substr(a.find('\n')), b.substr(b.find('\n')));
}

TEST(commands, sweep_rows_sorted_and_match_erf_areas) {
    SweepSpec spec;
    spec.axis = "omega0";
    spec.values = {1.5, 0.5, 1.0};
    spec.workers = 3;
    spec.base.dt = 1e-2;
    const auto rows = run_sweep(spec);
    ASSERT_EQ(rows.size(), 3u);
    const double expected[] = {0.5, 1.0, 1.5};
    for (int i = 0; i < 3; ++i) {
        ASSERT_EQ(rows[i].value, expected[i]);
        ASSERT_TRUE(rows[i].ok);
        ASSERT_NEAR(rows[i].pulse_area, oracle::gaussian_area(expected[i], 5.0, 1.0, 0.0, 10.0), 1e-12);
    }
    ASSERT_NEAR(rows[0].pulse_area, 0.886, 1e-3);
    ASSERT_NEAR(rows[1].pulse_area, 1.772, 1e-3);
    ASSERT_NEAR(rows[2].pulse_area, 2.659, 1e-3);
}

TEST(commands, sweep_output_independent_of_workers) {
    SweepSpec spec;
    spec.axis = "delta";
    spec.values = {0.3, -0.2, 0.0, 0.7, -1.0, 0.1, 0.5, -0.4};
    spec.base.dt = 1e-2;
    spec.workers = 1;
    const std::string serial = sweep_csv(spec, run_sweep(spec));
    spec.workers = 4;
    ASSERT_EQ(sweep_csv(spec, run_sweep(spec)), serial);
}

TEST(commands, single_value_sweep_matches_simulate_summary) {
    SweepSpec spec;
    spec.axis = "omega0";
    spec.values = {1.0};
    const auto rows = run_sweep(spec);
    const Json summary = trajectory_summary(spec.base, integrate(spec.base));
    ASSERT_EQ(rows[0].populations[1], summary["populations"][1].get<double>());
    ASSERT_EQ(rows[0].coherence, summary["coherence"].get<double>());
}

TEST(commands, sweep_failures_are_marked) {
    SweepSpec spec;
    spec.axis = "sigma";
    spec.values = {1.0, -1.0};
    spec.base.dt = 1e-2;
    const auto rows = run_sweep(spec);
    ASSERT_FALSE(rows[0].ok);
    ASSERT_EQ(rows[0].exit_code, kExitConfig);
    ASSERT_TRUE(rows[1].ok);
    const std::string csv = sweep_csv(spec, rows);
    std::istringstream lines(csv);
    std::string meta, header, bad, good;
    std::getline(lines, meta);
    std::getline(lines, header);
    std::getline(lines, bad);
    std::getline(lines, good);
    const auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
    ASSERT_EQ(commas(bad), commas(header));
    ASSERT_EQ(commas(good), commas(header));

    spec.values.clear();
    ASSERT_THROW(run_sweep(spec), ConfigError);
    spec.values = {1.0};
    spec.axis = "phase";
    ASSERT_THROW(run_sweep(spec), ConfigError);
    ASSERT_THROW(parse_values("1,,2"), ConfigError);
    ASSERT_EQ(parse_values(" 1, 2.5 ,3e-1"), (std::vector<double>{1.0, 2.5, 0.3}));
}

TEST(commands, apply_axis_requires_matching_parameter) {
    SimulationConfig cfg;
    cfg.pulse = PulseProfile::constant(1.0);
    ASSERT_THROW(apply_axis(cfg, "sigma", 2.0), ConfigError);
    ASSERT_EQ(apply_axis(cfg, "omega0", 2.0).pulse, PulseProfile::constant(2.0));
    cfg.pulse = PulseProfile::decoupled(PulseProfile::gaussian(1.0, 5.0, 1.0), 0.5);
    ASSERT_EQ(apply_axis(cfg, "tau", 4.0).pulse, PulseProfile::decoupled(PulseProfile::gaussian(1.0, 4.0, 1.0), 0.5));
}

TEST(commands, parity_transcript_json) {
    GlobalOptions g;
    ParityOptions opts;
    opts.bits = "0110";
    std::ostringstream out;
    ASSERT_EQ(cmd_parity(g, opts, out), kExitOk);
    const Json doc = Json::parse(out.str());
    ASSERT_EQ(doc["outputs"], "0100");
    ASSERT_EQ(doc["final_state"], 0);
    ASSERT_EQ(doc["transcript"].size(), 4u);
}

TEST(commands, parity_physical_truth_table_csv) {
    GlobalOptions g;
    g.format = "csv";
    ParityOptions opts;
    opts.mode = "physical";
    opts.truth_table = true;
    std::ostringstream out;
    ASSERT_EQ(cmd_parity(g, opts, out), kExitOk);
    ASSERT_EQ(out.str(), "PS,PI,NS,PO\n0,0,0,0\n0,1,1,0\n1,0,1,1\n1,1,0,1\n");
}

TEST(commands, generators_check_passes) {
    GlobalOptions g;
    for (int n = 2; n <= 5; ++n) {
        std::ostringstream out;
        ASSERT_EQ(cmd_generators(g, n, true, out), kExitOk);
        const Json doc = Json::parse(out.str());
        ASSERT_EQ(doc["count"], n * n - 1);
        ASSERT_TRUE(doc["check"]["pass"].get<bool>());
    }
}

TEST(commands, propagate_both_agree) {
    GlobalOptions g;
    std::ostringstream out;
    ASSERT_EQ(cmd_propagate(g, PropagateMethod::Both, 1e-8, out), kExitOk);
    const Json doc = Json::parse(out.str());
    ASSERT_LT(doc["max_deviation"].get<double>(), 1e-8);
    ASSERT_THROW(parse_method("euler"), ConfigError);
}

TEST(commands, exit_codes_through_binary) {
    const auto dir = scratch_dir("binary");
    ASSERT_EQ(run_cli("simulate", dir), kExitOk);
    ASSERT_TRUE(std::filesystem::exists(dir / "trajectory.csv"));
    const Json summary = Json::parse(read_file(dir / "stdout.txt"));
    ASSERT_NEAR(summary["populations"][1].get<double>(), 0.6001467705603487, 1e-9);

    std::ofstream(dir / "bad.json") << R"({"dt": -1})";
    ASSERT_EQ(run_cli("simulate --config bad.json", dir), kExitConfig);
    ASSERT_NE(read_file(dir / "stderr.txt").find("dt must be positive"), std::string::npos);

    ASSERT_EQ(run_cli("simulate --output /nonexistent/dir/x.csv", dir), kExitIo);
    ASSERT_EQ(run_cli("parity --bits 01x", dir), kExitConfig);

    std::ofstream(dir / "weak.json") << R"({"pulse": {"kind": "gaussian", "omega0": 0.5}})";
    ASSERT_EQ(run_cli("parity --bits 11 --mode physical --config weak.json", dir), kExitEncoding);

    std::ofstream(dir / "detuned.json") << R"({"delta": 0.5})";
    ASSERT_EQ(run_cli("propagate --method sylvester --config detuned.json", dir), kExitNumerical);

    ASSERT_EQ(run_cli("sweep --axis sigma --values 1,-1", dir), kExitConfig);
    ASSERT_EQ(run_cli("sweep --axis sigma --values ''", dir), kExitConfig);
    ASSERT_EQ(run_cli("--seed 7 generators --n 3 --check", dir), kExitOk);
    ASSERT_EQ(run_cli("nonsense", dir), kExitConfig);
}

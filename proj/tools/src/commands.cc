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


#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <type_traits>
#include <variant>

#include "config_io.h"
#include "io_error.h"
#include "output.h"
#include "qfsm/dynamics.h"
#include "qfsm/errors.h"
#include "qfsm/generators.h"
#include "qfsm/logic.h"
#include "qfsm/pulses.h"
#include "qfsm/sylvester.h"

namespace qfsm::cli {

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const EncodingMismatch*>(&e)) {
        return kExitEncoding;
    }
    if (dynamic_cast<const IoError*>(&e)) {
        return kExitIo;
    }
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const DomainError*>(&e)) {
        return kExitConfig;
    }
    return kExitNumerical;
}

std::vector<double> to_std(const RealVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (path && !path->empty()) {
        write_file(*path, text);
    } else {
        out << text;
    }
}

const char* method_name(PropagatorMethod m) {
    switch (m) {
        case PropagatorMethod::Identity:
            return "identity";
        case PropagatorMethod::Sylvester:
            return "sylvester";
        case PropagatorMethod::SeriesFallback:
            return "series_fallback";
    }
    return "unknown";
}

const char* kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Symmetric:
            return "symmetric";
        case GeneratorKind::Antisymmetric:
            return "antisymmetric";
        case GeneratorKind::Diagonal:
            return "diagonal";
    }
    return "unknown";
}

Json matrix_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json record_json(const TransitionRecord& r) {
    Json j;
    j["present_state"] = r.present_state;
    j["present_input"] = r.present_input;
    j["next_state"] = r.next_state;
    j["output"] = r.output;
    j["coherence_bit"] = r.coherence_bit;
    if (r.observables) {
        j["observables"] = {{"rho00", r.observables->population0},
                            {"rho11", r.observables->population1},
                            {"coherence", r.observables->coherence},
                            {"state_bit", r.observables->state_bit},
                            {"coherence_bit", r.observables->coherence_bit}};
    }
    return j;
}

PulseProfile set_pulse_parameter(const PulseProfile& pulse, const std::string& axis, double value) {
    return std::visit(
        [&](const auto& p) -> PulseProfile {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianPulse>) {
                return PulseProfile::gaussian(axis == "omega0" ? value : p.omega0, axis == "tau" ? value : p.tau,
                                              axis == "sigma" ? value : p.sigma);
            } else if constexpr (std::is_same_v<T, ConstantPulse>) {
                if (axis == "omega0") {
                    return PulseProfile::constant(value);
                }
            } else if constexpr (std::is_same_v<T, DecoupledPulse>) {
                return PulseProfile::decoupled(set_pulse_parameter(*p.inner, axis, value), p.interval);
            }
            throw ConfigError({"pulse kind '" + pulse.kind() + "' has no parameter '" + axis + "'"});
        },
        pulse.variant());
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

SweepRow run_row(const SweepSpec& spec, double value) {
    SweepRow row;
    row.value = value;
    try {
        SimulationConfig cfg = apply_axis(spec.base, spec.axis, value);
        require_valid(cfg);
        cfg.decimation = std::numeric_limits<std::size_t>::max();
        const Trajectory traj = integrate(cfg);
        const int n = traj.dimension;
        row.pulse_area = pulse_area(cfg.pulse, cfg.time_scale * cfg.t0, cfg.time_scale * cfg.t1);
        const auto& obs = traj.observables.back();
        row.populations.assign(obs.begin(), obs.begin() + n);
        row.coherence = transverse_coherence(traj.final_state(), n);
        if (n == 2) {
            const Readout r = readout(CoherenceVector(2, traj.final_state()), cfg.thresholds);
            row.state_bit = r.state_bit;
            row.coherence_bit = r.coherence_bit;
        }
        row.norm_drift = traj.norm_drift;
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
        row.exit_code = exit_code_for(e);
    }
    return row;
}

}  // namespace

SimulationConfig resolve_config(const GlobalOptions& global) {
    SimulationConfig cfg = global.config_path ? load_config(*global.config_path) : SimulationConfig{};
    if (global.output_path) {
        cfg.output_path = *global.output_path;
    }
    if (global.format) {
        cfg.output_format = parse_format(*global.format);
    }
    return cfg;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: invalid configuration\n";
        for (const auto& p : e.problems) {
            err << "  - " << p << '\n';
        }
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_simulate(const GlobalOptions& global, std::ostream& out) {
    SimulationConfig cfg = resolve_config(global);
    if (cfg.output_path.empty()) {
        cfg.output_path = cfg.output_format == OutputFormat::Csv ? "trajectory.csv" : "trajectory.json";
    }
    const Trajectory traj = integrate(cfg);
    std::ostringstream data;
    if (cfg.output_format == OutputFormat::Csv) {
        write_trajectory_csv(data, cfg, traj);
    } else {
        write_trajectory_json(data, cfg, traj);
    }
    write_file(cfg.output_path, data.str());

    Json summary = trajectory_summary(cfg, traj);
    summary["output"] = {{"path", cfg.output_path}, {"format", format_name(cfg.output_format)}};
    out << summary.dump(2) << '\n';
    return kExitOk;
}

PropagateMethod parse_method(const std::string& name) {
    if (name == "rk4") {
        return PropagateMethod::Rk4;
    }
    if (name == "sylvester") {
        return PropagateMethod::Sylvester;
    }
    if (name == "both") {
        return PropagateMethod::Both;
    }
    throw ConfigError({"method must be rk4, sylvester or both (got '" + name + "')"});
}

int cmd_propagate(const GlobalOptions& global, PropagateMethod method, double commute_tolerance, std::ostream& out) {
    SimulationConfig cfg = resolve_config(global);
    cfg.decimation = std::numeric_limits<std::size_t>::max();
    const CoherenceVector s0 = initial_coherence(cfg, make_basis(cfg.dimension));

    Json report;
    report["method"] = method == PropagateMethod::Rk4 ? "rk4" : method == PropagateMethod::Sylvester ? "sylvester" : "both";
    report["window"] = Json::array({cfg.t0, cfg.t1});
    report["initial_state"] = to_std(s0.components());

    RealVector rk4_final;
    RealVector sylvester_final;
    if (method != PropagateMethod::Sylvester) {
        const Trajectory traj = integrate(cfg);
        rk4_final = traj.final_state();
        report["rk4"] = {{"final_state", to_std(rk4_final)}, {"steps", traj.steps}, {"norm_drift", traj.norm_drift}};
    }
    if (method != PropagateMethod::Rk4) {
        const Propagator r = superevolution(cfg, commute_tolerance);
        sylvester_final = r.apply(s0).components();
        Json eig = Json::array();
        for (const Complex& l : r.eigenvalues) {
            eig.push_back(Json::array({l.real(), l.imag()}));
        }
        Json s;
        s["final_state"] = to_std(sylvester_final);
        s["propagator_method"] = method_name(r.method);
        if (r.zeta) {
            s["zeta"] = *r.zeta;
        }
        s["eigenvalues"] = std::move(eig);
        s["orthogonality_residual"] = r.orthogonality_residual();
        s["determinant"] = r.determinant();
        s["diagnostics"] = r.diagnostics;
        s["propagator"] = matrix_json(r.matrix);
        report["sylvester"] = std::move(s);
    }
    if (method == PropagateMethod::Both) {
        report["max_deviation"] = (rk4_final - sylvester_final).cwiseAbs().maxCoeff();
    }
    emit(global.output_path, report.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_parity(const GlobalOptions& global, const ParityOptions& opts, std::ostream& out) {
    std::vector<std::string> problems;
    int start = 0;
    if (opts.start == "even" || opts.start == "0") {
        start = 0;
    } else if (opts.start == "odd" || opts.start == "1") {
        start = 1;
    } else {
        problems.push_back("start must be even or odd (got '" + opts.start + "')");
    }
    if (opts.mode != "logical" && opts.mode != "physical") {
        problems.push_back("mode must be logical or physical (got '" + opts.mode + "')");
    }
    OutputFormat format = OutputFormat::Json;
    if (global.format) {
        format = parse_format(*global.format);
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }

    ParityMode mode = LogicalMode{};
    if (opts.mode == "physical") {
        SimulationConfig cfg = global.config_path ? load_config(*global.config_path) : SimulationConfig{};
        mode = PhysicalMode{cfg, cfg.thresholds};
    }

    std::string text;
    if (opts.truth_table) {
        const auto rows = parity_truth_table(mode);
        if (format == OutputFormat::Csv) {
            text = state_table_csv(rows);
        } else {
            Json doc;
            doc["mode"] = opts.mode;
            doc["table"] = Json::array();
            for (const auto& r : rows) {
                doc["table"].push_back(record_json(r));
            }
            text = doc.dump(2) + "\n";
        }
    } else {
        const ParityRun run = run_parity(std::string_view(opts.bits), start, mode);
        if (format == OutputFormat::Csv) {
            text = state_table_csv(run.transcript);
        } else {
            Json doc;
            doc["mode"] = opts.mode;
            doc["start"] = start;
            doc["bits"] = opts.bits;
            doc["final_state"] = run.final_state;
            std::string outputs;
            for (int b : run.outputs) {
                outputs += static_cast<char>('0' + b);
            }
            doc["outputs"] = outputs;
            doc["transcript"] = Json::array();
            for (const auto& r : run.transcript) {
                doc["transcript"].push_back(record_json(r));
            }
            text = doc.dump(2) + "\n";
        }
    }
    emit(global.output_path, text, out);
    return kExitOk;
}

int cmd_generators(const GlobalOptions& global, int dimension, bool check, std::ostream& out) {
    const GeneratorBasis basis = make_basis(dimension);
    const StructureConstants f = structure_constants(basis);
    Json doc;
    doc["dimension"] = dimension;
    doc["count"] = basis.size();
    Json gens = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const GeneratorLabel& l = basis.labels()[i];
        gens.push_back({{"index", i},
                        {"kind", kind_name(l.kind)},
                        {"m", l.m},
                        {"n", l.n},
                        {"real", matrix_json(basis[i].real())},
                        {"imag", matrix_json(basis[i].imag())}});
    }
    doc["generators"] = std::move(gens);
    Json entries = Json::array();
    for (const auto& e : f.nonzeros()) {
        entries.push_back(Json::array({e.i, e.j, e.k, e.value}));
    }
    doc["structure_constants"] = {{"storage", f.dense() ? "dense" : "sparse"}, {"nonzeros", std::move(entries)}};

    int code = kExitOk;
    if (check) {
        const BasisCheck c = check_basis(basis, f);
        const bool pass = c.orthonormality < 1e-12 && c.hermiticity < 1e-12 && c.trace < 1e-12 &&
                          c.commutator < 1e-10 && c.antisymmetry < 1e-12;
        doc["check"] = {{"orthonormality", c.orthonormality}, {"hermiticity", c.hermiticity}, {"trace", c.trace},
                        {"commutator", c.commutator},         {"antisymmetry", c.antisymmetry}, {"pass", pass}};
        code = pass ? kExitOk : kExitNumerical;
    }
    emit(global.output_path, doc.dump(2) + "\n", out);
    return code;
}

void validate(const SweepSpec& spec) {
    std::vector<std::string> problems;
    if (spec.axis != "omega0" && spec.axis != "sigma" && spec.axis != "tau" && spec.axis != "delta") {
        problems.push_back("sweep axis must be omega0, sigma, tau or delta (got '" + spec.axis + "')");
    }
    if (spec.values.empty()) {
        problems.emplace_back("sweep values must not be empty");
    }
    for (double v : spec.values) {
        if (!std::isfinite(v)) {
            problems.emplace_back("sweep values must be finite");
            break;
        }
    }
    if (spec.workers < 1) {
        problems.emplace_back("workers must be >= 1");
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
}

SimulationConfig apply_axis(const SimulationConfig& base, const std::string& axis, double value) {
    SimulationConfig cfg = base;
    if (axis == "delta") {
        cfg.detuning.delta = value;
    } else {
        cfg.pulse = set_pulse_parameter(base.pulse, axis, value);
    }
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<std::size_t> order(spec.values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return spec.values[a] < spec.values[b]; });

    std::vector<SweepRow> rows(order.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) {
            rows[i] = run_row(spec, spec.values[order[i]]);
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(spec.workers), order.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    return rows;
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const int n = spec.base.dimension;
    Json meta;
    meta["format"] = "qfsm-sweep";
    meta["version"] = 1;
    meta["axis"] = spec.axis;
    meta["base"] = config_to_json(spec.base);
    std::ostringstream out;
    out << "# " << meta.dump() << '\n';
    out << spec.axis << ",status,pulse_area";
    for (int k = 0; k < n; ++k) {
        out << ",rho" << k << k;
    }
    out << ",coherence,state_bit,coherence_bit,norm_drift,error\n";
    for (const auto& r : rows) {
        out << format_number(r.value) << ',' << (r.ok ? "ok" : "failed");
        if (r.ok) {
            out << ',' << format_number(r.pulse_area);
            for (double p : r.populations) {
                out << ',' << format_number(p);
            }
            out << ',' << format_number(r.coherence) << ',';
            if (r.state_bit >= 0) {
                out << r.state_bit << ',' << r.coherence_bit;
            } else {
                out << ',';
            }
            out << ',' << format_number(r.norm_drift) << ",\n";
        } else {
            out << std::string(static_cast<std::size_t>(n) + 6, ',') << csv_escape(r.error) << '\n';
        }
    }
    return out.str();
}

std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    Json doc;
    doc["format"] = "qfsm-sweep";
    doc["version"] = 1;
    doc["axis"] = spec.axis;
    doc["base"] = config_to_json(spec.base);
    doc["rows"] = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["value"] = r.value;
        j["status"] = r.ok ? "ok" : "failed";
        if (r.ok) {
            j["pulse_area"] = r.pulse_area;
            j["populations"] = r.populations;
            j["coherence"] = r.coherence;
            if (r.state_bit >= 0) {
                j["state_bit"] = r.state_bit;
                j["coherence_bit"] = r.coherence_bit;
            }
            j["norm_drift"] = r.norm_drift;
        } else {
            j["error"] = r.error;
        }
        doc["rows"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::vector<std::string> problems;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        const std::string trimmed = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        char* end = nullptr;
        const double v = std::strtod(trimmed.c_str(), &end);
        if (trimmed.empty() || end != trimmed.c_str() + trimmed.size()) {
            problems.push_back("sweep value '" + trimmed + "' is not a number");
            continue;
        }
        values.push_back(v);
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    return values;
}

int cmd_sweep(const GlobalOptions& global, const std::string& axis, const std::string& values, int workers,
              std::ostream& out) {
    SweepSpec spec;
    spec.base = global.config_path ? load_config(*global.config_path) : SimulationConfig{};
    spec.axis = axis;
    spec.values = parse_values(values);
    spec.workers = workers;
    const OutputFormat format = global.format ? parse_format(*global.format) : OutputFormat::Csv;

    const auto rows = run_sweep(spec);
    emit(global.output_path, format == OutputFormat::Csv ? sweep_csv(spec, rows) : sweep_json(spec, rows), out);

    int code = kExitOk;
    for (const auto& r : rows) {
        code = std::max(code, r.ok ? kExitOk : r.exit_code);
    }
    return code;
}

}  // namespace qfsm::cli

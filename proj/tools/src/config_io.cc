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


#include "config_io.h"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "io_error.h"
#include "qfsm/errors.h"

namespace qfsm::cli {

namespace {

constexpr int kMaxPulseNesting = 8;

// Accumulates problems instead of stopping at the first one.
class Reader {
   public:
    std::vector<std::string> problems;

    void reject_unknown(const Json& obj, const std::string& where, std::initializer_list<const char*> known) {
        for (const auto& [key, value] : obj.items()) {
            bool ok = false;
            for (const char* k : known) {
                ok = ok || key == k;
            }
            if (!ok) {
                problems.push_back("unknown key '" + where + key + "'");
            }
        }
    }

    bool number(const Json& obj, const char* key, const std::string& where, double& out) {
        if (!obj.contains(key)) {
            return false;
        }
        const Json& v = obj.at(key);
        if (!v.is_number()) {
            problems.push_back(where + key + " must be a number");
            return false;
        }
        out = v.get<double>();
        return true;
    }

    template <typename Int>
    void integer(const Json& obj, const char* key, const std::string& where, Int& out) {
        if (!obj.contains(key)) {
            return;
        }
        const Json& v = obj.at(key);
        if (!v.is_number_integer()) {
            problems.push_back(where + key + " must be an integer");
            return;
        }
        if constexpr (std::is_unsigned_v<Int>) {
            if (v.is_number_unsigned() || v.get<long long>() >= 0) {
                out = v.get<Int>();
            } else {
                problems.push_back(where + key + " must be non-negative");
            }
        } else {
            out = v.get<Int>();
        }
    }

    void boolean(const Json& obj, const char* key, const std::string& where, bool& out) {
        if (!obj.contains(key)) {
            return;
        }
        if (!obj.at(key).is_boolean()) {
            problems.push_back(where + key + " must be a boolean");
            return;
        }
        out = obj.at(key).get<bool>();
    }

    bool string(const Json& obj, const char* key, const std::string& where, std::string& out) {
        if (!obj.contains(key)) {
            return false;
        }
        if (!obj.at(key).is_string()) {
            problems.push_back(where + key + " must be a string");
            return false;
        }
        out = obj.at(key).get<std::string>();
        return true;
    }

    bool object(const Json& v, const std::string& what) {
        if (!v.is_object()) {
            problems.push_back(what + " must be an object");
            return false;
        }
        return true;
    }

    PulseProfile pulse(const Json& v, const std::string& where, int depth) {
        const std::string name = where.substr(0, where.size() - 1);
        if (!object(v, name)) {
            return PulseProfile::zero();
        }
        if (depth > kMaxPulseNesting) {
            problems.push_back(name + " nests too deeply");
            return PulseProfile::zero();
        }
        std::string kind;
        if (!string(v, "kind", where, kind)) {
            if (!v.contains("kind")) {
                problems.push_back(where + "kind is required");
            }
            return PulseProfile::zero();
        }
        try {
            if (kind == "zero") {
                reject_unknown(v, where, {"kind"});
                return PulseProfile::zero();
            }
            if (kind == "constant") {
                reject_unknown(v, where, {"kind", "omega0"});
                double omega0 = 1.0;
                number(v, "omega0", where, omega0);
                return PulseProfile::constant(omega0);
            }
            if (kind == "gaussian") {
                reject_unknown(v, where, {"kind", "omega0", "tau", "sigma"});
                double omega0 = 1.0, tau = 5.0, sigma = 1.0;
                number(v, "omega0", where, omega0);
                number(v, "tau", where, tau);
                number(v, "sigma", where, sigma);
                return PulseProfile::gaussian(omega0, tau, sigma);
            }
            if (kind == "dd") {
                reject_unknown(v, where, {"kind", "inner", "interval"});
                double interval = 1.0;
                number(v, "interval", where, interval);
                if (!v.contains("inner")) {
                    problems.push_back(where + "inner is required for kind 'dd'");
                    return PulseProfile::zero();
                }
                PulseProfile inner = pulse(v.at("inner"), where + "inner.", depth + 1);
                return PulseProfile::decoupled(std::move(inner), interval);
            }
        } catch (const DomainError& e) {
            problems.push_back(name + ": " + e.what());
            return PulseProfile::zero();
        }
        problems.push_back(where + "kind must be one of zero, constant, gaussian, dd (got '" + kind + "')");
        return PulseProfile::zero();
    }
};

Json pulse_to_json(const PulseProfile& p) {
    Json out;
    out["kind"] = p.kind();
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianPulse>) {
                out["omega0"] = v.omega0;
                out["tau"] = v.tau;
                out["sigma"] = v.sigma;
            } else if constexpr (std::is_same_v<T, ConstantPulse>) {
                out["omega0"] = v.omega0;
            } else if constexpr (std::is_same_v<T, DecoupledPulse>) {
                out["interval"] = v.interval;
                out["inner"] = pulse_to_json(*v.inner);
            }
        },
        p.variant());
    return out;
}

const char* measure_name(CoherenceMeasure m) {
    return m == CoherenceMeasure::BlochPlane ? "bloch_plane" : "abs_rho01";
}

}  // namespace

const char* format_name(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError({"output format must be csv or json (got '" + std::string(name) + "')"});
}

SimulationConfig parse_config(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    Reader r;
    SimulationConfig cfg;
    if (!r.object(doc, "config")) {
        throw ConfigError(std::move(r.problems));
    }
    r.reject_unknown(doc, "", {"dimension", "pulse", "delta", "window", "dt", "time_scale", "initial_state",
                               "unchecked_initial_state", "decimation", "output", "thresholds"});

    r.integer(doc, "dimension", "", cfg.dimension);
    if (doc.contains("pulse")) {
        cfg.pulse = r.pulse(doc.at("pulse"), "pulse.", 0);
    }
    if (doc.contains("delta")) {
        const Json& d = doc.at("delta");
        if (d.is_object() || d.is_array()) {
            r.problems.emplace_back("delta must be a constant number; time-dependent detuning is not supported");
        } else {
            r.number(doc, "delta", "", cfg.detuning.delta);
        }
    }
    if (doc.contains("window")) {
        const Json& w = doc.at("window");
        if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number()) {
            r.problems.emplace_back("window must be an array [t0, t1] of two numbers");
        } else {
            cfg.t0 = w[0].get<double>();
            cfg.t1 = w[1].get<double>();
        }
    }
    r.number(doc, "dt", "", cfg.dt);
    r.number(doc, "time_scale", "", cfg.time_scale);
    if (doc.contains("initial_state")) {
        const Json& s = doc.at("initial_state");
        if (s.is_string()) {
            const auto name = s.get<std::string>();
            if (name == "ground") {
                cfg.initial_state.kind = InitialStateKind::Ground;
            } else if (name == "excited") {
                cfg.initial_state.kind = InitialStateKind::Excited;
            } else if (name == "mixed") {
                cfg.initial_state.kind = InitialStateKind::Mixed;
            } else {
                r.problems.push_back("initial_state must be ground, excited, mixed or an array (got '" + name + "')");
            }
        } else if (s.is_array()) {
            cfg.initial_state.kind = InitialStateKind::Explicit;
            for (const auto& c : s) {
                if (!c.is_number()) {
                    r.problems.emplace_back("initial_state entries must be numbers");
                    break;
                }
                cfg.initial_state.components.push_back(c.get<double>());
            }
        } else {
            r.problems.emplace_back("initial_state must be a string or an array of numbers");
        }
    }
    r.boolean(doc, "unchecked_initial_state", "", cfg.initial_state.unchecked);
    r.integer(doc, "decimation", "", cfg.decimation);
    if (doc.contains("output") && r.object(doc.at("output"), "output")) {
        const Json& o = doc.at("output");
        r.reject_unknown(o, "output.", {"path", "format"});
        r.string(o, "path", "output.", cfg.output_path);
        std::string fmt;
        if (r.string(o, "format", "output.", fmt)) {
            try {
                cfg.output_format = parse_format(fmt);
            } catch (const ConfigError& e) {
                r.problems.insert(r.problems.end(), e.problems.begin(), e.problems.end());
            }
        }
    }
    if (doc.contains("thresholds") && r.object(doc.at("thresholds"), "thresholds")) {
        const Json& t = doc.at("thresholds");
        r.reject_unknown(t, "thresholds.", {"population", "coherence", "tolerance", "coherence_measure"});
        r.number(t, "population", "thresholds.", cfg.thresholds.population);
        r.number(t, "coherence", "thresholds.", cfg.thresholds.coherence);
        r.number(t, "tolerance", "thresholds.", cfg.thresholds.tolerance);
        std::string measure;
        if (r.string(t, "coherence_measure", "thresholds.", measure)) {
            if (measure == "bloch_plane") {
                cfg.thresholds.measure = CoherenceMeasure::BlochPlane;
            } else if (measure == "abs_rho01") {
                cfg.thresholds.measure = CoherenceMeasure::AbsRho01;
            } else {
                r.problems.push_back("thresholds.coherence_measure must be bloch_plane or abs_rho01 (got '" + measure +
                                     "')");
            }
        }
    }

    // Fields that failed to parse keep their defaults, so the invariant report stays meaningful.
    for (auto& p : validate(cfg)) {
        r.problems.push_back(std::move(p));
    }
    if (!r.problems.empty()) {
        throw ConfigError(std::move(r.problems));
    }
    return cfg;
}

Json config_to_json(const SimulationConfig& cfg) {
    Json out;
    out["dimension"] = cfg.dimension;
    out["pulse"] = pulse_to_json(cfg.pulse);
    out["delta"] = cfg.detuning.delta;
    out["window"] = Json::array({cfg.t0, cfg.t1});
    out["dt"] = cfg.dt;
    out["time_scale"] = cfg.time_scale;
    switch (cfg.initial_state.kind) {
        case InitialStateKind::Ground:
            out["initial_state"] = "ground";
            break;
        case InitialStateKind::Excited:
            out["initial_state"] = "excited";
            break;
        case InitialStateKind::Mixed:
            out["initial_state"] = "mixed";
            break;
        case InitialStateKind::Explicit:
            out["initial_state"] = cfg.initial_state.components;
            break;
    }
    out["unchecked_initial_state"] = cfg.initial_state.unchecked;
    out["decimation"] = cfg.decimation;
    out["output"] = {{"path", cfg.output_path}, {"format", format_name(cfg.output_format)}};
    out["thresholds"] = {{"population", cfg.thresholds.population},
                         {"coherence", cfg.thresholds.coherence},
                         {"tolerance", cfg.thresholds.tolerance},
                         {"coherence_measure", measure_name(cfg.thresholds.measure)}};
    return out;
}

std::string serialize_config(const SimulationConfig& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read config file '" + path + "'");
    }
    return parse_config(text.str());
}

}  // namespace qfsm::cli

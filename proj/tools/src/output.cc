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


#include "output.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "io_error.h"
#include "qfsm/generators.h"
#include "qfsm/logic.h"

namespace qfsm::cli {

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> trajectory_columns(int dimension) {
    std::vector<std::string> cols{"t"};
    for (int j = 1; j < dimension * dimension; ++j) {
        cols.push_back("S" + std::to_string(j));
    }
    for (auto& name : density_observable_names(dimension)) {
        cols.push_back(std::move(name));
    }
    return cols;
}

Json trajectory_metadata(const SimulationConfig& cfg, const Trajectory& traj) {
    Json meta;
    meta["format"] = "qfsm-trajectory";
    meta["version"] = 1;
    meta["config"] = config_to_json(cfg);
    meta["steps"] = traj.steps;
    meta["samples"] = traj.times.size();
    meta["norm_drift"] = traj.norm_drift;
    return meta;
}

void write_trajectory_csv(std::ostream& out, const SimulationConfig& cfg, const Trajectory& traj) {
    out << "# " << trajectory_metadata(cfg, traj).dump() << '\n';
    const auto cols = trajectory_columns(traj.dimension);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out << (c ? "," : "") << cols[c];
    }
    out << '\n';
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out << format_number(traj.times[i]);
        for (Eigen::Index j = 0; j < traj.states[i].size(); ++j) {
            out << ',' << format_number(traj.states[i][j]);
        }
        for (double v : traj.observables[i]) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_trajectory_json(std::ostream& out, const SimulationConfig& cfg, const Trajectory& traj) {
    Json doc;
    doc["metadata"] = trajectory_metadata(cfg, traj);
    doc["columns"] = trajectory_columns(traj.dimension);
    Json rows = Json::array();
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        Json row = Json::array({traj.times[i]});
        for (Eigen::Index j = 0; j < traj.states[i].size(); ++j) {
            row.push_back(traj.states[i][j]);
        }
        for (double v : traj.observables[i]) {
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump() << '\n';
}

double transverse_coherence(const RealVector& s, int dimension) {
    // rho_01 = (S_sym(0,1) - i S_anti(0,1)) / 2; the antisymmetric block starts after N(N-1)/2 entries.
    const Eigen::Index anti = dimension * (dimension - 1) / 2;
    return std::hypot(s[0], s[anti]);
}

Json trajectory_summary(const SimulationConfig& cfg, const Trajectory& traj) {
    const int n = traj.dimension;
    const RealVector& s = traj.final_state();
    const auto& obs = traj.observables.back();
    Json out;
    out["dimension"] = n;
    out["final_time"] = traj.times.back();
    out["final_state"] = std::vector<double>(s.data(), s.data() + s.size());
    out["populations"] = std::vector<double>(obs.begin(), obs.begin() + n);
    out["coherence"] = transverse_coherence(s, n);
    out["abs_rho01"] = transverse_coherence(s, n) / 2.0;
    if (n == 2) {
        const Readout r = readout(CoherenceVector(2, s), cfg.thresholds);
        out["logic"] = {{"state_bit", r.state_bit}, {"coherence_bit", r.coherence_bit}};
    }
    out["norm_drift"] = traj.norm_drift;
    out["steps"] = traj.steps;
    out["samples"] = traj.times.size();
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace qfsm::cli

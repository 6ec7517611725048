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

#include "qfsm/logic.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace qfsm {

namespace {

void require_bit(int bit, const char* what) {
    if (bit != 0 && bit != 1) {
        throw DomainError(std::string(what) + " must be 0 or 1, got " + std::to_string(bit));
    }
}

std::string mismatch_message(const TransitionRecord& expected, const Readout& observed) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "encoding mismatch for (PS=" << expected.present_state << ", PI=" << expected.present_input
        << "): expected (NS=" << expected.next_state << ", PO=" << expected.coherence_bit << "), observed (NS="
        << observed.state_bit << ", PO=" << observed.coherence_bit << ") with rho00=" << observed.population0
        << " rho11=" << observed.population1 << " coherence=" << observed.coherence;
    return msg.str();
}

}  // namespace

EncodingMismatch::EncodingMismatch(TransitionRecord expected_in, Readout observed_in)
    : Error(mismatch_message(expected_in, observed_in)), expected(expected_in), observed(observed_in) {}

Readout readout(const CoherenceVector& s, const LogicThresholds& thresholds) {
    if (s.dimension() != 2) {
        throw DomainError("readout: needs a two-level coherence vector");
    }
    Readout r{};
    r.population0 = (1.0 + s[2]) / 2.0;
    r.population1 = (1.0 - s[2]) / 2.0;
    const double transverse = std::hypot(s[0], s[1]);
    r.coherence = thresholds.measure == CoherenceMeasure::BlochPlane ? transverse : transverse / 2.0;
    r.state_bit = r.population1 >= thresholds.population - thresholds.tolerance ? 1 : 0;
    r.coherence_bit = r.coherence >= thresholds.coherence - thresholds.tolerance ? 1 : 0;
    return r;
}

ParityMachine::ParityMachine(int start_state, ParityMode mode) : state_(start_state), mode_(std::move(mode)) {
    require_bit(start_state, "parity machine start state");
    if (const auto* physical = std::get_if<PhysicalMode>(&mode_)) {
        if (physical->config.dimension != 2) {
            throw DomainError("physical parity mode needs a two-level configuration");
        }
        require_valid(physical->config);
        if (auto problems = validate(physical->thresholds); !problems.empty()) {
            throw ConfigError(std::move(problems));
        }
    }
}

TransitionRecord ParityMachine::physical_transition(const PhysicalMode& mode, int input_bit) const {
    SimulationConfig cfg = mode.config;
    cfg.initial_state = InitialState{input_bit == 1 ? InitialStateKind::Excited : InitialStateKind::Ground, {}, false};
    cfg.decimation = std::numeric_limits<std::size_t>::max();

    const GeneratorBasis basis = make_basis(2);
    CoherenceVector final_state = initial_coherence(cfg, basis);
    const bool pulse_on = state_ == 1;
    if (pulse_on) {
        const Trajectory traj = integrate(cfg);
        final_state = CoherenceVector(2, traj.final_state());
    }
    const Readout r = readout(final_state, mode.thresholds);

    TransitionRecord expected{state_, input_bit, state_ ^ input_bit, state_ ^ input_bit, state_, std::nullopt};
    if (r.state_bit != expected.next_state || r.coherence_bit != expected.coherence_bit) {
        throw EncodingMismatch(expected, r);
    }
    TransitionRecord rec = expected;
    rec.observables = r;
    return rec;
}

int ParityMachine::step(int input_bit) {
    require_bit(input_bit, "parity input");
    TransitionRecord rec{};
    if (const auto* physical = std::get_if<PhysicalMode>(&mode_)) {
        rec = physical_transition(*physical, input_bit);
    } else {
        const int next = state_ ^ input_bit;
        rec = TransitionRecord{state_, input_bit, next, next, state_, std::nullopt};
    }
    state_ = rec.next_state;
    transcript_.push_back(rec);
    return rec.output;
}

std::pair<ParityMachine, int> parity_step(ParityMachine machine, int input_bit) {
    const int out = machine.step(input_bit);
    return {std::move(machine), out};
}

std::vector<int> parse_bits(std::string_view bits) {
    std::vector<int> out;
    out.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1') {
            throw ParseError("bit string has non-binary symbol '" + std::string(1, c) + "' at position " +
                             std::to_string(i));
        }
        out.push_back(c - '0');
    }
    return out;
}

ParityRun run_parity(const std::vector<int>& bits, int start_state, const ParityMode& mode) {
    ParityMachine machine(start_state, mode);
    ParityRun run;
    run.outputs.reserve(bits.size());
    for (int b : bits) {
        run.outputs.push_back(machine.step(b));
    }
    run.final_state = machine.state();
    run.transcript = machine.transcript();
    return run;
}

ParityRun run_parity(std::string_view bits, int start_state, const ParityMode& mode) {
    return run_parity(parse_bits(bits), start_state, mode);
}

std::vector<TransitionRecord> parity_truth_table(const ParityMode& mode) {
    std::vector<TransitionRecord> rows;
    for (int ps = 0; ps <= 1; ++ps) {
        for (int pi = 0; pi <= 1; ++pi) {
            ParityMachine machine(ps, mode);
            machine.step(pi);
            rows.push_back(machine.transcript().back());
        }
    }
    return rows;
}

std::string state_table_csv(const std::vector<TransitionRecord>& records) {
    std::ostringstream out;
    out << "PS,PI,NS,PO\n";
    for (const auto& r : records) {
        out << r.present_state << ',' << r.present_input << ',' << r.next_state << ',' << r.coherence_bit << '\n';
    }
    return out.str();
}

void validate(const LsmSpec& spec) {
    const auto n = spec.a.rows();
    const auto m = spec.b.cols();
    const auto p = spec.c.rows();
    if (spec.a.cols() != n || spec.b.rows() != n || spec.c.cols() != n || spec.d.rows() != p || spec.d.cols() != m) {
        std::ostringstream msg;
        msg << "LSM dimension mismatch: A " << spec.a.rows() << "x" << spec.a.cols() << ", B " << spec.b.rows() << "x"
            << spec.b.cols() << ", C " << spec.c.rows() << "x" << spec.c.cols() << ", D " << spec.d.rows() << "x"
            << spec.d.cols();
        throw DomainError(msg.str());
    }
}

namespace {

RealVector reduce_mod2(const RealVector& v) {
    RealVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const long long k = std::llround(v[i]);
        out[i] = static_cast<double>(((k % 2) + 2) % 2);
    }
    return out;
}

}  // namespace

LsmStep lsm_step(const LsmSpec& spec, const RealVector& state, const RealVector& input, LsmArithmetic arithmetic) {
    validate(spec);
    if (state.size() != spec.state_size() || input.size() != spec.input_size()) {
        throw DomainError("lsm_step: state or input vector has the wrong length");
    }
    LsmStep out{spec.a * state + spec.b * input, spec.c * state + spec.d * input};
    if (arithmetic == LsmArithmetic::Mod2) {
        out.next_state = reduce_mod2(out.next_state);
        out.output = reduce_mod2(out.output);
    }
    return out;
}

MachineClass classify_machine(const LsmSpec& spec) {
    return (spec.d.array() != 0.0).any() ? MachineClass::Mealy : MachineClass::Moore;
}

LsmSpec parity_lsm() {
    return LsmSpec{RealMatrix::Ones(1, 1), RealMatrix::Ones(1, 1), RealMatrix::Ones(1, 1), RealMatrix::Zero(1, 1)};
}

CoherenceVector short_time_step(const CoherenceVector& s, const RealMatrix& g, double dt) {
    if (!(dt > 0.0)) {
        throw DomainError("short_time_step: dt must be positive");
    }
    if (g.rows() != static_cast<Eigen::Index>(s.size()) || g.cols() != g.rows()) {
        throw DomainError("short_time_step: coefficient matrix size mismatch");
    }
    return CoherenceVector(s.dimension(), s.components() + dt * (g * s.components()));
}

}  // namespace qfsm

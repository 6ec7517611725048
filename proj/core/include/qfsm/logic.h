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

#ifndef QFSM_LOGIC_H
#define QFSM_LOGIC_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfsm/config.h"
#include "qfsm/dynamics.h"
#include "qfsm/errors.h"
#include "qfsm/linalg.h"
#include "qfsm/thresholds.h"

namespace qfsm {

/// Final two-level observables and the logic bits read from them.
struct Readout {
    int state_bit;
    int coherence_bit;
    double population0;
    double population1;
    /// The scalar compared against the coherence threshold (see CoherenceMeasure).
    double coherence;
};

/// state_bit = [rho11 >= population - tol], coherence_bit = [coherence >= coherence - tol].
/// Throws DomainError for anything but a two-level vector.
Readout readout(const CoherenceVector& s, const LogicThresholds& thresholds);

/// One transition of the parity checker.
///
/// Bit roles follow the state table: the machine state is carried by the pulse line (OFF = Even = 0,
/// ON = Odd = 1) and the input bit by the atom's initial level (|0> = 0, |1> = 1). `output` is the
/// parity after this bit. `coherence_bit` is the table's PO column, i.e. whether the drive left
/// coherence behind.
struct TransitionRecord {
    int present_state;
    int present_input;
    int next_state;
    int output;
    int coherence_bit;
    /// Physical mode only.
    std::optional<Readout> observables;
};

/// Thrown when the physical witness disagrees with the state table.
struct EncodingMismatch : Error {
    EncodingMismatch(TransitionRecord expected, Readout observed);
    TransitionRecord expected;
    Readout observed;
};

struct LogicalMode {};

/// Runs the two-level dynamics for every transition. `config` supplies the pulse, detuning, window and
/// step; its initial state is overridden by the input bit.
struct PhysicalMode {
    SimulationConfig config;
    LogicThresholds thresholds;
};

using ParityMode = std::variant<LogicalMode, PhysicalMode>;

/// Two-state serial parity checker. Single owner; the transcript grows by one record per input.
class ParityMachine {
   public:
    explicit ParityMachine(int start_state = 0, ParityMode mode = LogicalMode{});

    int state() const noexcept { return state_; }
    const ParityMode& mode() const noexcept { return mode_; }
    const std::vector<TransitionRecord>& transcript() const noexcept { return transcript_; }

    /// Consumes one bit and returns the output bit. Throws DomainError for a non-binary input and,
    /// in physical mode, EncodingMismatch when the readout contradicts the state table.
    int step(int input_bit);

   private:
    TransitionRecord physical_transition(const PhysicalMode& mode, int input_bit) const;

    int state_;
    ParityMode mode_;
    std::vector<TransitionRecord> transcript_;
};

/// Functional form of ParityMachine::step.
std::pair<ParityMachine, int> parity_step(ParityMachine machine, int input_bit);

struct ParityRun {
    int final_state;
    std::vector<int> outputs;
    std::vector<TransitionRecord> transcript;
};

/// Parses a string of '0'/'1'. Throws ParseError naming the first offending position.
std::vector<int> parse_bits(std::string_view bits);

ParityRun run_parity(const std::vector<int>& bits, int start_state, const ParityMode& mode = LogicalMode{});
ParityRun run_parity(std::string_view bits, int start_state, const ParityMode& mode = LogicalMode{});

/// All four (PS, PI) rows of the state table, evaluated in the given mode.
std::vector<TransitionRecord> parity_truth_table(const ParityMode& mode = LogicalMode{});

/// CSV with header "PS,PI,NS,PO", one line per record (PO is the coherence bit).
std::string state_table_csv(const std::vector<TransitionRecord>& records);

/// s(t+1) = A s(t) + B u(t), y(t) = C s(t) + D u(t).
struct LsmSpec {
    RealMatrix a;
    RealMatrix b;
    RealMatrix c;
    RealMatrix d;

    int state_size() const { return static_cast<int>(a.rows()); }
    int input_size() const { return static_cast<int>(b.cols()); }
    int output_size() const { return static_cast<int>(c.rows()); }
};

/// Throws DomainError unless A is n x n, B is n x m, C is p x n and D is p x m.
void validate(const LsmSpec& spec);

enum class LsmArithmetic {
    Real,
    /// Results reduced modulo 2 after rounding; entries are expected to be integers.
    Mod2,
};

struct LsmStep {
    RealVector next_state;
    RealVector output;
};

LsmStep lsm_step(const LsmSpec& spec, const RealVector& state, const RealVector& input,
                 LsmArithmetic arithmetic = LsmArithmetic::Real);

enum class MachineClass { Moore, Mealy };

/// Mealy iff some stored entry of D is non-zero.
MachineClass classify_machine(const LsmSpec& spec);

/// Parity checker as a one-dimensional LSM over GF(2): A = B = C = [1], D = [0].
LsmSpec parity_lsm();

/// First-order update S + g S dt, with local error O(dt^2). Throws DomainError for dt <= 0 or a size
/// mismatch.
CoherenceVector short_time_step(const CoherenceVector& s, const RealMatrix& g, double dt);

}  // namespace qfsm

#endif  // QFSM_LOGIC_H

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

#ifndef QFSM_PULSES_H
#define QFSM_PULSES_H

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qfsm {

// All quantities are in reduced units with hbar = 1: frequencies and times are dimensionless.

/// Omega(t) = omega0 * exp(-(t - tau)^2 / sigma^2)
struct GaussianPulse {
    double omega0;
    double tau;
    double sigma;

    bool operator==(const GaussianPulse&) const = default;
};

struct ConstantPulse {
    double omega0;

    bool operator==(const ConstantPulse&) const = default;
};

struct ZeroPulse {
    bool operator==(const ZeroPulse&) const = default;
};

class PulseProfile;

/// Sign-alternating copy of an inner pulse: (-1)^floor(t / interval) * inner(t).
struct DecoupledPulse {
    std::shared_ptr<const PulseProfile> inner;
    double interval;

    bool operator==(const DecoupledPulse& other) const;
};

/// Time-dependent Rabi frequency of the driving field. Immutable value type.
class PulseProfile {
   public:
    using Variant = std::variant<ZeroPulse, GaussianPulse, ConstantPulse, DecoupledPulse>;

    PulseProfile() = default;

    static PulseProfile zero();
    /// Throws DomainError unless sigma > 0 and all parameters are finite.
    static PulseProfile gaussian(double omega0, double tau, double sigma);
    static PulseProfile constant(double omega0);
    /// Throws DomainError unless interval > 0.
    static PulseProfile decoupled(PulseProfile inner, double interval);

    const Variant& variant() const noexcept { return variant_; }
    /// "zero", "gaussian", "constant" or "dd".
    std::string kind() const;

    bool operator==(const PulseProfile&) const = default;

   private:
    explicit PulseProfile(Variant v) : variant_(std::move(v)) {}

    Variant variant_{ZeroPulse{}};
};

double amplitude(const PulseProfile& pulse, double t);

/// Integral of Omega over [t0, t1]. Gaussian pulses use the erf closed form; sign-alternating pulses
/// are summed over their constant-sign segments. Throws DomainError when t0 > t1.
double pulse_area(const PulseProfile& pulse, double t0, double t1);

/// Times in (t0, t1) where a sign-alternating pulse jumps, sorted and without repeats. Empty for
/// continuous profiles.
std::vector<double> sign_flips(const PulseProfile& pulse, double t0, double t1);

/// Continuous profile that coincides with `pulse` on the open constant-sign segment containing t.
/// Sign alternation is folded into the amplitude, so the result is never "dd".
PulseProfile smooth_piece(const PulseProfile& pulse, double t);

/// Laser-atom detuning Delta = omega_L - omega_0, constant in time.
struct DetuningSpec {
    double delta = 0.0;

    bool operator==(const DetuningSpec&) const = default;
};

/// Delta * (t1 - t0). Throws DomainError when t0 > t1.
double detuning_integral(const DetuningSpec& detuning, double t0, double t1);

}  // namespace qfsm

#endif  // QFSM_PULSES_H

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

#include "qfsm/pulses.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfsm/errors.h"

namespace qfsm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string("pulse parameter ") + what + " must be finite");
    }
}

void require_interval(double t0, double t1, const char* op) {
    if (!(t0 <= t1)) {
        throw DomainError(std::string(op) + ": interval start must not exceed its end");
    }
}

// Sign of segment k of a decoupled pulse: +1 for even k, -1 for odd k.
double segment_sign(double segment) {
    return std::fmod(std::abs(segment), 2.0) == 0.0 ? 1.0 : -1.0;
}

}  // namespace

bool DecoupledPulse::operator==(const DecoupledPulse& other) const {
    if (interval != other.interval) {
        return false;
    }
    if (!inner || !other.inner) {
        return inner == other.inner;
    }
    return *inner == *other.inner;
}

PulseProfile PulseProfile::zero() { return PulseProfile(ZeroPulse{}); }

PulseProfile PulseProfile::gaussian(double omega0, double tau, double sigma) {
    require_finite(omega0, "omega0");
    require_finite(tau, "tau");
    require_finite(sigma, "sigma");
    if (sigma <= 0.0) {
        throw DomainError("gaussian pulse width sigma must be positive");
    }
    return PulseProfile(GaussianPulse{omega0, tau, sigma});
}

PulseProfile PulseProfile::constant(double omega0) {
    require_finite(omega0, "omega0");
    return PulseProfile(ConstantPulse{omega0});
}

PulseProfile PulseProfile::decoupled(PulseProfile inner, double interval) {
    require_finite(interval, "interval");
    if (interval <= 0.0) {
        throw DomainError("decoupling interval must be positive");
    }
    return PulseProfile(DecoupledPulse{std::make_shared<const PulseProfile>(std::move(inner)), interval});
}

std::string PulseProfile::kind() const {
    return std::visit(overloaded{
                          [](const ZeroPulse&) { return "zero"; },
                          [](const GaussianPulse&) { return "gaussian"; },
                          [](const ConstantPulse&) { return "constant"; },
                          [](const DecoupledPulse&) { return "dd"; },
                      },
                      variant_);
}

double amplitude(const PulseProfile& pulse, double t) {
    return std::visit(overloaded{
                          [](const ZeroPulse&) { return 0.0; },
                          [t](const GaussianPulse& g) {
                              const double x = (t - g.tau) / g.sigma;
                              return g.omega0 * std::exp(-x * x);
                          },
                          [](const ConstantPulse& c) { return c.omega0; },
                          [t](const DecoupledPulse& d) {
                              return segment_sign(std::floor(t / d.interval)) * amplitude(*d.inner, t);
                          },
                      },
                      pulse.variant());
}

double pulse_area(const PulseProfile& pulse, double t0, double t1) {
    require_interval(t0, t1, "pulse_area");
    return std::visit(overloaded{
                          [](const ZeroPulse&) { return 0.0; },
                          [=](const GaussianPulse& g) {
                              return g.omega0 * g.sigma * (std::sqrt(std::numbers::pi) / 2.0) *
                                     (std::erf((t1 - g.tau) / g.sigma) - std::erf((t0 - g.tau) / g.sigma));
                          },
                          [=](const ConstantPulse& c) { return c.omega0 * (t1 - t0); },
                          [=](const DecoupledPulse& d) {
                              double total = 0.0;
                              double a = t0;
                              double segment = std::floor(t0 / d.interval);
                              while (a < t1) {
                                  const double b = std::clamp((segment + 1.0) * d.interval, a, t1);
                                  total += segment_sign(segment) * pulse_area(*d.inner, a, b);
                                  a = b;
                                  segment += 1.0;
                              }
                              return total;
                          },
                      },
                      pulse.variant());
}

std::vector<double> sign_flips(const PulseProfile& pulse, double t0, double t1) {
    require_interval(t0, t1, "sign_flips");
    std::vector<double> out;
    const PulseProfile* p = &pulse;
    while (const auto* d = std::get_if<DecoupledPulse>(&p->variant())) {
        for (double k = std::floor(t0 / d->interval) + 1.0; k * d->interval < t1; k += 1.0) {
            if (k * d->interval > t0) {
                out.push_back(k * d->interval);
            }
        }
        p = d->inner.get();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PulseProfile smooth_piece(const PulseProfile& pulse, double t) {
    return std::visit(overloaded{
                          [](const ZeroPulse&) { return PulseProfile::zero(); },
                          [](const GaussianPulse& g) { return PulseProfile::gaussian(g.omega0, g.tau, g.sigma); },
                          [](const ConstantPulse& c) { return PulseProfile::constant(c.omega0); },
                          [t](const DecoupledPulse& d) {
                              const PulseProfile inner = smooth_piece(*d.inner, t);
                              if (segment_sign(std::floor(t / d.interval)) > 0.0) {
                                  return inner;
                              }
                              return std::visit(overloaded{
                                                    [](const GaussianPulse& g) {
                                                        return PulseProfile::gaussian(-g.omega0, g.tau, g.sigma);
                                                    },
                                                    [](const ConstantPulse& c) { return PulseProfile::constant(-c.omega0); },
                                                    [](const auto&) { return PulseProfile::zero(); },
                                                },
                                                inner.variant());
                          },
                      },
                      pulse.variant());
}

double detuning_integral(const DetuningSpec& detuning, double t0, double t1) {
    require_interval(t0, t1, "detuning_integral");
    return detuning.delta * (t1 - t0);
}

}  // namespace qfsm

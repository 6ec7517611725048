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

#ifndef QFSM_SYLVESTER_H
#define QFSM_SYLVESTER_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfsm/config.h"
#include "qfsm/dynamics.h"
#include "qfsm/linalg.h"

namespace qfsm {

/// G = integral of g(t) over [t0, t1], taken entry by entry.
struct IntegratedCoefficient {
    RealMatrix matrix;
    double t0 = 0.0;
    double t1 = 0.0;
    /// max over grid pairs (a, b) of || [g(t_a), g(t_b)] ||_max
    double commutativity_residual = 0.0;
};

/// Adaptive Gauss-Kronrod quadrature of every entry of g to ~1e-12 absolute, plus the commutator
/// residual sampled on `grid_points` equally spaced times. Throws DomainError when t0 > t1.
IntegratedCoefficient integrate_coefficient(const CoefficientFn& g, double t0, double t1, int grid_points = 16);

/// Eigenvalues of the two-level coefficient integral: (0, -i zeta, +i zeta), zeta = sqrt(dDelta^2 + dOmega^2).
struct TwoLevelSpectrum {
    std::array<Complex, 3> eigenvalues;
    double zeta;
    /// zeta below the degeneracy threshold: all three eigenvalues coincide.
    bool degenerate;
};

TwoLevelSpectrum eigenvalues_two_level(double delta_area, double omega_area);

enum class PropagatorMethod {
    /// G was (numerically) zero.
    Identity,
    /// Sylvester's formula over pairwise-distinct eigenvalues.
    Sylvester,
    /// Repeated eigenvalues; Pade scaling-and-squaring used instead.
    SeriesFallback,
};

/// Superevolution matrix exp(G) propagating a coherence vector: S(t1) = R S(t0).
struct Propagator {
    RealMatrix matrix;
    std::vector<Complex> eigenvalues;
    /// Set for 3 x 3 (two-level) propagators.
    std::optional<double> zeta;
    PropagatorMethod method = PropagatorMethod::Identity;
    /// Human-readable notes, e.g. "sylvester-degenerate".
    std::vector<std::string> diagnostics;

    /// || R^T R - I ||_max
    double orthogonality_residual() const;
    double determinant() const { return matrix.determinant(); }
    CoherenceVector apply(const CoherenceVector& s) const;
};

/// Eigenvalue gap at or below which Sylvester's formula is abandoned.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// exp(G) = sum_j e^{lambda_j} prod_{k != j} (G - lambda_k I) / (lambda_j - lambda_k) for a real
/// antisymmetric G. Eigenvalues come in closed form for 3 x 3 and from the Hermitian matrix iG
/// otherwise. Throws DomainError if G is not square and antisymmetric (to 1e-12 relative).
Propagator sylvester_expm(const RealMatrix& g_integral);
Propagator sylvester_expm(const IntegratedCoefficient& g_integral);

/// Which global sign the two-level closed form uses. The coefficient-matrix ODE started in the ground
/// state gives `Ode`; `Inverted` is its negation.
enum class SignConvention { Ode, Inverted };

/// Two-level solution after accumulated detuning and pulse areas. For S0 = (0, 0, +-1) this is the
/// explicit closed form; other vectors go through sylvester_expm. zeta = 0 returns S0.
CoherenceVector closed_form_two_level(double delta_area, double omega_area, const CoherenceVector& s0,
                                      SignConvention convention = SignConvention::Ode);

/// Analytic propagator from t0 to t1. Throws NonCommutingError if the sampled commutator residual
/// exceeds `commute_tolerance`; t0 == t1 gives the identity.
Propagator superevolution(const CoefficientFn& g, int size, double t0, double t1, double commute_tolerance = 1e-8);

/// Propagator over a configuration's window (in its time units).
Propagator superevolution(const SimulationConfig& cfg, double commute_tolerance = 1e-8);

}  // namespace qfsm

#endif  // QFSM_SYLVESTER_H

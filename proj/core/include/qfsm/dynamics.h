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

#ifndef QFSM_DYNAMICS_H
#define QFSM_DYNAMICS_H

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qfsm/config.h"
#include "qfsm/generators.h"
#include "qfsm/linalg.h"
#include "qfsm/pulses.h"

namespace qfsm {

/// Real vector S_j = Tr(rho s_j), j = 0 .. N^2 - 2, for an N-level system.
class CoherenceVector {
   public:
    /// Throws DomainError if the length is not N^2 - 1 or a component is not finite.
    CoherenceVector(int dimension, RealVector components);

    static CoherenceVector zero(int dimension);

    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(components_.size()); }
    const RealVector& components() const noexcept { return components_; }
    double operator[](std::size_t j) const { return components_[static_cast<Eigen::Index>(j)]; }
    double norm() const { return components_.norm(); }

   private:
    int dimension_;
    RealVector components_;
};

class DensityMatrix {
   public:
    /// Throws DomainError unless `rho` is square with N >= 2. Positivity is not enforced;
    /// see `nonpositive()`.
    explicit DensityMatrix(ComplexMatrix rho, bool nonpositive = false);

    /// |level><level|
    static DensityMatrix pure(int dimension, int level);
    /// I / N
    static DensityMatrix maximally_mixed(int dimension);

    int dimension() const noexcept { return static_cast<int>(rho_.rows()); }
    const ComplexMatrix& matrix() const noexcept { return rho_; }
    double population(int level) const { return rho_(level, level).real(); }
    Complex element(int m, int n) const { return rho_(m, n); }

    double trace_deviation() const { return std::abs(rho_.trace() - Complex(1.0)); }
    double hermiticity_residual() const { return max_abs(rho_ - rho_.adjoint()); }
    double min_eigenvalue() const;

    /// Set when the matrix was reconstructed from a coherence vector too long to describe a
    /// physical state (negative eigenvalue below -1e-12).
    bool nonpositive() const noexcept { return nonpositive_; }

   private:
    ComplexMatrix rho_;
    bool nonpositive_;
};

/// S_j = Tr(rho s_j). Throws DomainError on a dimension mismatch or a non-Hermitian / non-unit-trace rho.
CoherenceVector density_to_coherence(const DensityMatrix& rho, const GeneratorBasis& basis);

/// rho = I/N + 1/2 sum_j S_j s_j. Tr rho = 1 by construction; an over-long vector yields a
/// matrix flagged `nonpositive()`.
DensityMatrix coherence_to_density(const CoherenceVector& s, const GeneratorBasis& basis);

/// Populations rho_mm for every level, then (Re rho_mn, Im rho_mn) for every m < n. For N = 2 this is
/// (rho00, rho11, Re rho01, Im rho01).
std::vector<double> density_observables(const CoherenceVector& s, const GeneratorBasis& basis);
std::vector<std::string> density_observable_names(int dimension);

/// h_j(t) = Tr(H(t) s_j) with hbar = 1, plus the identity offset sum_k omega_k of H.
///
/// The identity part of H only contributes a global phase, so it is carried along for completeness
/// and never enters the coefficient matrix.
class HamiltonianCoeffs {
   public:
    using Fn = std::function<RealVector(double)>;

    HamiltonianCoeffs(int dimension, Fn coefficients, double identity_offset = 0.0);

    int dimension() const noexcept { return dimension_; }
    int size() const noexcept { return dimension_ * dimension_ - 1; }
    double identity_offset() const noexcept { return identity_offset_; }
    RealVector operator()(double t) const;

   private:
    int dimension_;
    Fn coefficients_;
    double identity_offset_;
};

/// Rotating-wave Hamiltonian H = Omega(t)/2 (|0><1| + |1><0|) + Delta |1><1| projected on the basis.
/// For N > 2 the drive couples levels 0 and 1 only and the remaining levels are spectators.
HamiltonianCoeffs hamiltonian_coeffs(const PulseProfile& pulse, const DetuningSpec& detuning,
                                     const GeneratorBasis& basis);

/// Projects a caller-supplied Hamiltonian. Each evaluation throws DomainError if H(t) is not Hermitian
/// or has the wrong shape.
HamiltonianCoeffs hamiltonian_coeffs(std::function<ComplexMatrix(double)> hamiltonian, const GeneratorBasis& basis);

/// g_kl(t) = sum_j f_jlk h_j(t). Antisymmetric whenever h is real.
RealMatrix adjoint_matrix(const HamiltonianCoeffs& h, const StructureConstants& f, double t);

/// Binds `adjoint_matrix` into a g(t) callable. Copies of `h` and `f` are held by the closure.
CoefficientFn coefficient_function(HamiltonianCoeffs h, StructureConstants f);

/// One classical fourth-order Runge-Kutta step of dS/dt = g(t) S. Throws DomainError for dt <= 0 and
/// NumericalError when a stage becomes non-finite.
CoherenceVector rk4_step(const CoherenceVector& s, const CoefficientFn& g, double t, double dt);

/// Fixed-step solution of one configuration.
struct Trajectory {
    int dimension = 2;
    std::vector<double> times;
    std::vector<RealVector> states;
    /// density_observables() of each sample.
    std::vector<std::vector<double>> observables;
    /// max over every step of | ||S(t)|| - ||S(t0)|| |
    double norm_drift = 0.0;
    std::size_t steps = 0;

    const RealVector& final_state() const { return states.back(); }
};

/// Builds S(t0) for the configured initial state. Throws ConfigError for an explicit vector of the
/// wrong length or, unless unchecked, one that is not a physical state.
CoherenceVector initial_coherence(const SimulationConfig& cfg, const GeneratorBasis& basis);

/// g(t) for a configuration, in the config's time units (scaled by cfg.time_scale).
CoefficientFn config_coefficients(const SimulationConfig& cfg);

/// Times strictly inside the window (config units) where g(t) jumps; empty unless the pulse alternates sign.
std::vector<double> coefficient_breakpoints(const SimulationConfig& cfg);

/// The smooth branch of g that agrees with config_coefficients(cfg) on the open segment containing t.
CoefficientFn segment_coefficients(const SimulationConfig& cfg, double t);

/// Integrates the configuration with fixed-step RK4 on the grid t0 + i dt; the final step is
/// shortened to land on t1. t0 == t1 gives a single-sample trajectory.
Trajectory integrate(const SimulationConfig& cfg);

/// Re-expresses `cfg` in reduced time t' = t / sigma, with sigma taken from the Gaussian pulse.
/// Throws DomainError if the pulse is not Gaussian.
SimulationConfig to_reduced_time(const SimulationConfig& cfg);
/// Throws DomainError unless sigma > 0.
SimulationConfig to_reduced_time(const SimulationConfig& cfg, double sigma);

}  // namespace qfsm

#endif  // QFSM_DYNAMICS_H

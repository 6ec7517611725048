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

#include "qfsm/dynamics.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "qfsm/errors.h"

namespace qfsm {

namespace {

constexpr double kPositivityTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-10;

void require_same_dimension(int a, int b, const char* op) {
    if (a != b) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DomainError(msg.str());
    }
}

void require_finite(const RealVector& v, double t, const char* stage) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        if (!std::isfinite(v[j])) {
            std::ostringstream msg;
            msg << "rk4_step: non-finite value in " << stage << " at t = " << t << ", component " << j;
            throw NumericalError(msg.str());
        }
    }
}

}  // namespace

CoherenceVector::CoherenceVector(int dimension, RealVector components)
    : dimension_(dimension), components_(std::move(components)) {
    if (dimension_ < 2) {
        throw DomainError("coherence vector dimension must be >= 2");
    }
    if (components_.size() != dimension_ * dimension_ - 1) {
        throw DomainError("coherence vector for N = " + std::to_string(dimension_) + " needs " +
                          std::to_string(dimension_ * dimension_ - 1) + " components, got " +
                          std::to_string(components_.size()));
    }
    if (!components_.allFinite()) {
        throw DomainError("coherence vector components must be finite");
    }
}

CoherenceVector CoherenceVector::zero(int dimension) {
    return CoherenceVector(dimension, RealVector::Zero(dimension * dimension - 1));
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, bool nonpositive) : rho_(std::move(rho)), nonpositive_(nonpositive) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
        throw DomainError("density matrix must be square with dimension >= 2");
    }
}

DensityMatrix DensityMatrix::pure(int dimension, int level) {
    return DensityMatrix(projector(level, level, dimension));
}

DensityMatrix DensityMatrix::maximally_mixed(int dimension) {
    if (dimension < 2) {
        throw DomainError("density matrix dimension must be >= 2");
    }
    return DensityMatrix(ComplexMatrix::Identity(dimension, dimension) / static_cast<double>(dimension));
}

double DensityMatrix::min_eigenvalue() const {
    const ComplexMatrix herm = (rho_ + rho_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

CoherenceVector density_to_coherence(const DensityMatrix& rho, const GeneratorBasis& basis) {
    require_same_dimension(rho.dimension(), basis.dimension(), "density_to_coherence");
    if (rho.hermiticity_residual() > kHermitianTolerance) {
        throw DomainError("density_to_coherence: density matrix is not Hermitian");
    }
    if (rho.trace_deviation() > kHermitianTolerance) {
        throw DomainError("density_to_coherence: density matrix trace is not 1");
    }
    RealVector s(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        // Tr(rho s_j) without forming the product.
        s[static_cast<Eigen::Index>(j)] = (rho.matrix().cwiseProduct(basis[j].transpose())).sum().real();
    }
    return CoherenceVector(basis.dimension(), std::move(s));
}

DensityMatrix coherence_to_density(const CoherenceVector& s, const GeneratorBasis& basis) {
    require_same_dimension(s.dimension(), basis.dimension(), "coherence_to_density");
    const int n = basis.dimension();
    ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        rho += 0.5 * s[j] * basis[j];
    }
    // Only the generators carry off-trace weight, so fix the trace exactly against round-off.
    const Complex excess = rho.trace() - Complex(1.0);
    rho.diagonal().array() -= excess / static_cast<double>(n);
    const bool nonpositive = DensityMatrix(rho).min_eigenvalue() < -kPositivityTolerance;
    return DensityMatrix(std::move(rho), nonpositive);
}

std::vector<double> density_observables(const CoherenceVector& s, const GeneratorBasis& basis) {
    const DensityMatrix rho = coherence_to_density(s, basis);
    const int n = rho.dimension();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (int m = 0; m < n; ++m) {
        out.push_back(rho.population(m));
    }
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            out.push_back(rho.element(m, k).real());
            out.push_back(rho.element(m, k).imag());
        }
    }
    return out;
}

std::vector<std::string> density_observable_names(int dimension) {
    std::vector<std::string> names;
    for (int m = 0; m < dimension; ++m) {
        names.push_back("rho" + std::to_string(m) + std::to_string(m));
    }
    for (int m = 0; m < dimension; ++m) {
        for (int k = m + 1; k < dimension; ++k) {
            const std::string idx = std::to_string(m) + (dimension > 10 ? "_" : "") + std::to_string(k);
            names.push_back("re_rho" + idx);
            names.push_back("im_rho" + idx);
        }
    }
    return names;
}

HamiltonianCoeffs::HamiltonianCoeffs(int dimension, Fn coefficients, double identity_offset)
    : dimension_(dimension), coefficients_(std::move(coefficients)), identity_offset_(identity_offset) {
    if (dimension_ < 2) {
        throw DomainError("Hamiltonian dimension must be >= 2");
    }
}

RealVector HamiltonianCoeffs::operator()(double t) const {
    RealVector h = coefficients_(t);
    if (h.size() != size()) {
        throw DomainError("Hamiltonian coefficient vector has wrong length");
    }
    return h;
}

namespace {

RealVector project(const ComplexMatrix& hamiltonian, const GeneratorBasis& basis) {
    RealVector h(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        h[static_cast<Eigen::Index>(j)] = (hamiltonian.cwiseProduct(basis[j].transpose())).sum().real();
    }
    return h;
}

}  // namespace

HamiltonianCoeffs hamiltonian_coeffs(const PulseProfile& pulse, const DetuningSpec& detuning,
                                     const GeneratorBasis& basis) {
    const int n = basis.dimension();
    auto shared = std::make_shared<const GeneratorBasis>(basis);
    const ComplexMatrix drive = 0.5 * (projector(0, 1, n) + projector(1, 0, n));
    const ComplexMatrix detune = detuning.delta * projector(1, 1, n);
    return HamiltonianCoeffs(n, [shared, pulse, drive, detune](double t) {
        return project(amplitude(pulse, t) * drive + detune, *shared);
    });
}

HamiltonianCoeffs hamiltonian_coeffs(std::function<ComplexMatrix(double)> hamiltonian, const GeneratorBasis& basis) {
    const int n = basis.dimension();
    auto shared = std::make_shared<const GeneratorBasis>(basis);
    return HamiltonianCoeffs(n, [shared, n, hamiltonian = std::move(hamiltonian)](double t) {
        const ComplexMatrix hm = hamiltonian(t);
        if (hm.rows() != n || hm.cols() != n) {
            throw DomainError("caller Hamiltonian has wrong shape");
        }
        const double scale = std::max(1.0, max_abs(hm));
        if (max_abs(hm - hm.adjoint()) > kHermitianTolerance * scale) {
            throw DomainError("caller Hamiltonian is not Hermitian at t = " + std::to_string(t));
        }
        return project(hm, *shared);
    });
}

RealMatrix adjoint_matrix(const HamiltonianCoeffs& h, const StructureConstants& f, double t) {
    require_same_dimension(h.dimension(), f.dimension(), "adjoint_matrix");
    const RealVector coeffs = h(t);
    RealMatrix g = RealMatrix::Zero(f.size(), f.size());
    // Entry (j, l, k) of f contributes f_jlk h_j to g_kl.
    for (const auto& e : f.nonzeros()) {
        g(e.k, e.j) += e.value * coeffs[e.i];
    }
    return g;
}

CoefficientFn coefficient_function(HamiltonianCoeffs h, StructureConstants f) {
    require_same_dimension(h.dimension(), f.dimension(), "coefficient_function");
    return [h = std::move(h), f = std::move(f)](double t) { return adjoint_matrix(h, f, t); };
}

CoherenceVector rk4_step(const CoherenceVector& s, const CoefficientFn& g, double t, double dt) {
    if (!(dt > 0.0)) {
        throw DomainError("rk4_step: dt must be positive");
    }
    const RealVector& y = s.components();
    const RealMatrix g_start = g(t);
    const RealMatrix g_mid = g(t + dt / 2.0);
    const RealMatrix g_end = g(t + dt);
    const RealVector k1 = g_start * y;
    require_finite(k1, t, "stage 1");
    const RealVector k2 = g_mid * (y + (dt / 2.0) * k1);
    require_finite(k2, t, "stage 2");
    const RealVector k3 = g_mid * (y + (dt / 2.0) * k2);
    require_finite(k3, t, "stage 3");
    const RealVector k4 = g_end * (y + dt * k3);
    require_finite(k4, t, "stage 4");
    RealVector next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    require_finite(next, t, "update");
    return CoherenceVector(s.dimension(), std::move(next));
}

CoherenceVector initial_coherence(const SimulationConfig& cfg, const GeneratorBasis& basis) {
    const int n = basis.dimension();
    switch (cfg.initial_state.kind) {
        case InitialStateKind::Ground:
            return density_to_coherence(DensityMatrix::pure(n, 0), basis);
        case InitialStateKind::Excited:
            return density_to_coherence(DensityMatrix::pure(n, 1), basis);
        case InitialStateKind::Mixed:
            return CoherenceVector::zero(n);
        case InitialStateKind::Explicit:
            break;
    }
    const auto& comps = cfg.initial_state.components;
    if (static_cast<int>(comps.size()) != n * n - 1) {
        throw ConfigError({"initial_state: explicit vector needs " + std::to_string(n * n - 1) + " components, got " +
                           std::to_string(comps.size())});
    }
    RealVector v = Eigen::Map<const RealVector>(comps.data(), static_cast<Eigen::Index>(comps.size()));
    if (!v.allFinite()) {
        throw ConfigError({"initial_state: components must be finite"});
    }
    CoherenceVector s(n, std::move(v));
    if (!cfg.initial_state.unchecked && coherence_to_density(s, basis).nonpositive()) {
        throw ConfigError({"initial_state: vector does not describe a valid density matrix"});
    }
    return s;
}

namespace {

CoefficientFn scaled(CoefficientFn g, double scale) {
    if (scale == 1.0) {
        return g;
    }
    return [g = std::move(g), scale](double t) -> RealMatrix { return scale * g(scale * t); };
}

}  // namespace

CoefficientFn config_coefficients(const SimulationConfig& cfg) {
    const GeneratorBasis basis = make_basis(cfg.dimension);
    return scaled(coefficient_function(hamiltonian_coeffs(cfg.pulse, cfg.detuning, basis), structure_constants(basis)),
                  cfg.time_scale);
}

std::vector<double> coefficient_breakpoints(const SimulationConfig& cfg) {
    std::vector<double> out = sign_flips(cfg.pulse, cfg.time_scale * cfg.t0, cfg.time_scale * cfg.t1);
    for (double& b : out) {
        b /= cfg.time_scale;
    }
    return out;
}

CoefficientFn segment_coefficients(const SimulationConfig& cfg, double t) {
    SimulationConfig piece = cfg;
    piece.pulse = smooth_piece(cfg.pulse, cfg.time_scale * t);
    return config_coefficients(piece);
}

Trajectory integrate(const SimulationConfig& cfg) {
    require_valid(cfg);
    const GeneratorBasis basis = make_basis(cfg.dimension);
    const std::vector<double> breaks = coefficient_breakpoints(cfg);
    CoefficientFn g = breaks.empty() ? config_coefficients(cfg) : CoefficientFn{};
    std::optional<PulseProfile> frozen;

    // Each RK4 stage must see one smooth branch of g, so steps are cut at the jumps.
    auto advance = [&](const CoherenceVector& s, double a, double b) {
        if (breaks.empty()) {
            return rk4_step(s, g, a, b - a);
        }
        const double mid = cfg.time_scale * (a + b) / 2.0;
        if (PulseProfile piece = smooth_piece(cfg.pulse, mid); !frozen || !(*frozen == piece)) {
            g = segment_coefficients(cfg, (a + b) / 2.0);
            frozen = std::move(piece);
        }
        return rk4_step(s, g, a, b - a);
    };

    Trajectory traj;
    traj.dimension = cfg.dimension;
    CoherenceVector s = initial_coherence(cfg, basis);
    const double norm0 = s.norm();

    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(s.components());
        traj.observables.push_back(density_observables(s, basis));
    };

    const double span = cfg.t1 - cfg.t0;
    // Guard against a spurious extra sliver step when span/dt is an integer up to round-off.
    const auto steps = span > 0.0 ? static_cast<std::size_t>(std::ceil(span / cfg.dt - 1e-9)) : std::size_t{0};
    traj.steps = steps;
    record(cfg.t0);
    auto next_break = breaks.begin();
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = cfg.t0 + static_cast<double>(i) * cfg.dt;
        const double t_next = (i + 1 == steps) ? cfg.t1 : cfg.t0 + static_cast<double>(i + 1) * cfg.dt;
        double a = t;
        for (; next_break != breaks.end() && *next_break < t_next; ++next_break) {
            if (*next_break > a) {
                s = advance(s, a, *next_break);
                a = *next_break;
            }
        }
        s = advance(s, a, t_next);
        traj.norm_drift = std::max(traj.norm_drift, std::abs(s.norm() - norm0));
        if ((i + 1) % cfg.decimation == 0 || i + 1 == steps) {
            record(t_next);
        }
    }
    return traj;
}

SimulationConfig to_reduced_time(const SimulationConfig& cfg) {
    const auto* gauss = std::get_if<GaussianPulse>(&cfg.pulse.variant());
    if (gauss == nullptr) {
        throw DomainError("to_reduced_time: pulse width is only defined for a Gaussian pulse");
    }
    return to_reduced_time(cfg, gauss->sigma);
}

SimulationConfig to_reduced_time(const SimulationConfig& cfg, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("to_reduced_time: sigma must be positive");
    }
    SimulationConfig out = cfg;
    out.t0 = cfg.t0 / sigma;
    out.t1 = cfg.t1 / sigma;
    out.dt = cfg.dt / sigma;
    out.time_scale = cfg.time_scale * sigma;
    return out;
}

}  // namespace qfsm

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

#include "qfsm/sylvester.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "qfsm/errors.h"

namespace qfsm {

namespace {

constexpr Complex kI{0.0, 1.0};

// Below this every entry of exp(G) - I is under double round-off.
constexpr double kZeroMatrix = 1e-15;
constexpr double kAntisymmetryTolerance = 1e-12;
constexpr double kImaginaryTolerance = 1e-10;
constexpr double kQuadratureRelTolerance = 1e-14;
constexpr unsigned kQuadratureMaxDepth = 18;

Propagator identity_propagator(Eigen::Index n) {
    Propagator p;
    p.matrix = RealMatrix::Identity(n, n);
    p.eigenvalues.assign(static_cast<std::size_t>(n), Complex(0.0));
    p.method = PropagatorMethod::Identity;
    if (n == 3) {
        p.zeta = 0.0;
    }
    return p;
}

RealMatrix two_level_integral(double delta_area, double omega_area) {
    RealMatrix g(3, 3);
    g << 0.0, delta_area, 0.0,  //
        -delta_area, 0.0, -omega_area,  //
        0.0, omega_area, 0.0;
    return g;
}

bool is_unit_population_vector(const CoherenceVector& s, double sign) {
    return s[0] == 0.0 && s[1] == 0.0 && s[2] == sign;
}

double sampled_commutator(const CoefficientFn& g, double t0, double t1, int grid_points) {
    std::vector<RealMatrix> samples;
    samples.reserve(static_cast<std::size_t>(grid_points));
    for (int a = 0; a < grid_points; ++a) {
        samples.push_back(g(t0 + (t1 - t0) * a / (grid_points - 1)));
    }
    double residual = 0.0;
    for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
            const RealMatrix comm = samples[a] * samples[b] - samples[b] * samples[a];
            residual = std::max(residual, max_abs(comm));
        }
    }
    return residual;
}

}  // namespace

IntegratedCoefficient integrate_coefficient(const CoefficientFn& g, double t0, double t1, int grid_points) {
    if (!(t0 <= t1)) {
        throw DomainError("integrate_coefficient: interval start must not exceed its end");
    }
    if (grid_points < 2) {
        throw DomainError("integrate_coefficient: commutator grid needs at least 2 points");
    }
    const RealMatrix g0 = g(t0);
    IntegratedCoefficient out;
    out.t0 = t0;
    out.t1 = t1;
    out.matrix = RealMatrix::Zero(g0.rows(), g0.cols());
    if (t0 == t1) {
        return out;
    }

    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
    for (Eigen::Index r = 0; r < g0.rows(); ++r) {
        for (Eigen::Index c = 0; c < g0.cols(); ++c) {
            auto entry = [&](double t) { return g(t)(r, c); };
            double error = 0.0;
            out.matrix(r, c) = Quadrature::integrate(entry, t0, t1, kQuadratureMaxDepth, kQuadratureRelTolerance, &error);
        }
    }

    out.commutativity_residual = sampled_commutator(g, t0, t1, grid_points);
    return out;
}

TwoLevelSpectrum eigenvalues_two_level(double delta_area, double omega_area) {
    const double zeta = std::hypot(delta_area, omega_area);
    return {{Complex(0.0), -kI * zeta, kI * zeta}, zeta, zeta <= kDegeneracyThreshold};
}

double Propagator::orthogonality_residual() const {
    return max_abs(matrix.transpose() * matrix - RealMatrix::Identity(matrix.rows(), matrix.cols()));
}

CoherenceVector Propagator::apply(const CoherenceVector& s) const {
    if (static_cast<Eigen::Index>(s.size()) != matrix.cols()) {
        throw DomainError("propagator size does not match coherence vector");
    }
    return CoherenceVector(s.dimension(), matrix * s.components());
}

Propagator sylvester_expm(const RealMatrix& g_integral) {
    const Eigen::Index n = g_integral.rows();
    if (n == 0 || g_integral.cols() != n) {
        throw DomainError("sylvester_expm: matrix must be square and non-empty");
    }
    const double scale = max_abs(g_integral);
    if (max_abs(g_integral + g_integral.transpose()) > kAntisymmetryTolerance * std::max(1.0, scale)) {
        throw DomainError("sylvester_expm: coefficient integral is not antisymmetric");
    }
    if (scale <= kZeroMatrix) {
        return identity_propagator(n);
    }

    Propagator p;
    if (n == 3) {
        const double zeta = std::sqrt(g_integral(0, 1) * g_integral(0, 1) + g_integral(0, 2) * g_integral(0, 2) +
                                      g_integral(1, 2) * g_integral(1, 2));
        p.zeta = zeta;
        p.eigenvalues = {Complex(0.0), -kI * zeta, kI * zeta};
    } else {
        // iG is Hermitian with real spectrum mu; G v = -i mu v.
        const ComplexMatrix herm = kI * g_integral.cast<Complex>();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
        for (Eigen::Index j = 0; j < n; ++j) {
            p.eigenvalues.push_back(-kI * solver.eigenvalues()[j]);
        }
    }

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
        for (std::size_t k = j + 1; k < p.eigenvalues.size(); ++k) {
            min_gap = std::min(min_gap, std::abs(p.eigenvalues[j] - p.eigenvalues[k]));
        }
    }
    if (min_gap <= kDegeneracyThreshold) {
        p.matrix = g_integral.exp();
        p.method = PropagatorMethod::SeriesFallback;
        std::ostringstream msg;
        msg << "sylvester-degenerate: eigenvalue gap " << min_gap << " <= " << kDegeneracyThreshold;
        p.diagnostics.push_back(msg.str());
        return p;
    }

    const ComplexMatrix g = g_integral.cast<Complex>();
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
        const Complex lj = p.eigenvalues[j];
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < p.eigenvalues.size(); ++k) {
            if (k != j) {
                others.push_back(k);
            }
        }
        // Distant eigenvalues first; the ill-conditioned near-pair factors are applied last.
        std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(lj - p.eigenvalues[a]) > std::abs(lj - p.eigenvalues[b]);
        });
        ComplexMatrix covariant = identity;
        for (std::size_t k : others) {
            const Complex lk = p.eigenvalues[k];
            covariant = covariant * ((g - lk * identity) / (lj - lk));
        }
        sum += std::exp(lj) * covariant;
    }
    if (const double imag = max_abs(sum.imag()); imag > kImaginaryTolerance) {
        std::ostringstream msg;
        msg << "sylvester-imaginary-residual: " << imag;
        p.diagnostics.push_back(msg.str());
    }
    p.matrix = sum.real();
    p.method = PropagatorMethod::Sylvester;
    return p;
}

Propagator sylvester_expm(const IntegratedCoefficient& g_integral) { return sylvester_expm(g_integral.matrix); }

CoherenceVector closed_form_two_level(double delta_area, double omega_area, const CoherenceVector& s0,
                                      SignConvention convention) {
    if (s0.dimension() != 2) {
        throw DomainError("closed_form_two_level: needs a two-level coherence vector");
    }
    const double zeta = std::hypot(delta_area, omega_area);
    if (zeta == 0.0) {
        return s0;
    }
    const double sign = convention == SignConvention::Inverted ? -1.0 : 1.0;

    const bool ground = is_unit_population_vector(s0, 1.0);
    const bool excited = is_unit_population_vector(s0, -1.0);
    if (ground || excited) {
        // 1 - cos(zeta) written as 2 sin^2(zeta / 2) to stay accurate for small zeta.
        const double one_minus_cos = 2.0 * std::pow(std::sin(zeta / 2.0), 2);
        const double z2 = zeta * zeta;
        RealVector excited_form(3);
        excited_form << delta_area * omega_area * one_minus_cos / z2,  //
            omega_area * std::sin(zeta) / zeta,  //
            -delta_area * delta_area / z2 - omega_area * omega_area * std::cos(zeta) / z2;
        // excited_form is the ODE solution started in the excited state.
        const double start = excited ? 1.0 : -1.0;
        return CoherenceVector(2, (sign * start) * excited_form);
    }

    const Propagator r = sylvester_expm(two_level_integral(delta_area, omega_area));
    return CoherenceVector(2, sign * (r.matrix * s0.components()));
}

Propagator superevolution(const CoefficientFn& g, int size, double t0, double t1, double commute_tolerance) {
    if (!(t0 <= t1)) {
        throw DomainError("superevolution: interval start must not exceed its end");
    }
    if (size < 1) {
        throw DomainError("superevolution: size must be positive");
    }
    if (t0 == t1) {
        return identity_propagator(size);
    }
    const IntegratedCoefficient ic = integrate_coefficient(g, t0, t1);
    if (ic.matrix.rows() != size) {
        throw DomainError("superevolution: coefficient matrix size mismatch");
    }
    if (ic.commutativity_residual > commute_tolerance) {
        throw NonCommutingError(ic.commutativity_residual, commute_tolerance);
    }
    return sylvester_expm(ic);
}

Propagator superevolution(const SimulationConfig& cfg, double commute_tolerance) {
    require_valid(cfg);
    const int size = cfg.dimension * cfg.dimension - 1;
    const std::vector<double> breaks = coefficient_breakpoints(cfg);
    if (breaks.empty()) {
        return superevolution(config_coefficients(cfg), size, cfg.t0, cfg.t1, commute_tolerance);
    }
    // Quadrature runs per smooth segment; the commutator grid still spans the whole window.
    IntegratedCoefficient total = integrate_coefficient(config_coefficients(cfg), cfg.t0, cfg.t0);
    total.t1 = cfg.t1;
    std::vector<double> edges{cfg.t0};
    edges.insert(edges.end(), breaks.begin(), breaks.end());
    edges.push_back(cfg.t1);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const CoefficientFn piece = segment_coefficients(cfg, (edges[k] + edges[k + 1]) / 2.0);
        const IntegratedCoefficient ic = integrate_coefficient(piece, edges[k], edges[k + 1]);
        total.matrix += ic.matrix;
        total.commutativity_residual = std::max(total.commutativity_residual, ic.commutativity_residual);
    }
    total.commutativity_residual =
        std::max(total.commutativity_residual, sampled_commutator(config_coefficients(cfg), cfg.t0, cfg.t1, 16));
    if (total.commutativity_residual > commute_tolerance) {
        throw NonCommutingError(total.commutativity_residual, commute_tolerance);
    }
    return sylvester_expm(total);
}

}  // namespace qfsm

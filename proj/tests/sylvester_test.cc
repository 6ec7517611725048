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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qfsm/errors.h"
#include "support/oracles.h"

using namespace qfsm;

namespace {

RealVector vec3(double a, double b, double c) {
    RealVector v(3);
    v << a, b, c;
    return v;
}

double max_diff(const RealMatrix& a, const RealMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(sylvester, integrate_coefficient_default_pulse_pattern) {
    SimulationConfig cfg;
    const IntegratedCoefficient ic = integrate_coefficient(config_coefficients(cfg), 0.0, 10.0);
    const double area = oracle::gaussian_area(1.0, 5.0, 1.0, 0.0, 10.0);
    ASSERT_LT(max_diff(ic.matrix, oracle::two_level_g(0.0, area)), 1e-12);
    ASSERT_NEAR(area, std::sqrt(std::numbers::pi), 1e-11);
    ASSERT_LT(ic.commutativity_residual, 1e-15);
}

TEST(sylvester, integrate_coefficient_zero_and_errors) {
    const CoefficientFn zero = [](double) { return RealMatrix(RealMatrix::Zero(3, 3)); };
    const IntegratedCoefficient ic = integrate_coefficient(zero, 0.0, 4.0);
    ASSERT_EQ(ic.matrix, RealMatrix::Zero(3, 3));
    ASSERT_EQ(ic.commutativity_residual, 0.0);
    ASSERT_THROW(integrate_coefficient(zero, 1.0, 0.0), DomainError);
    ASSERT_THROW(integrate_coefficient(zero, 0.0, 1.0, 1), DomainError);
}

TEST(sylvester, detuned_gaussian_reports_commutator) {
    SimulationConfig cfg;
    cfg.detuning.delta = 0.5;
    const IntegratedCoefficient ic = integrate_coefficient(config_coefficients(cfg), 0.0, 10.0);
    ASSERT_GT(ic.commutativity_residual, 1e-3);
    ASSERT_THROW(superevolution(cfg), NonCommutingError);
}

TEST(sylvester, constant_drive_with_detuning_commutes_exactly) {
    SimulationConfig cfg;
    cfg.pulse = PulseProfile::constant(0.8);
    cfg.detuning.delta = 0.6;
    const IntegratedCoefficient ic = integrate_coefficient(config_coefficients(cfg), 0.0, 10.0);
    ASSERT_EQ(ic.commutativity_residual, 0.0);
    const Propagator r = superevolution(cfg);
    ASSERT_LT(max_diff(r.matrix, oracle::rodrigues(6.0, 8.0)), 1e-12);
}

TEST(sylvester, two_level_eigenvalues) {
    const TwoLevelSpectrum a = eigenvalues_two_level(0.0, std::sqrt(std::numbers::pi));
    ASSERT_EQ(a.eigenvalues[0], Complex(0.0));
    ASSERT_NEAR(a.eigenvalues[1].imag(), -1.77245, 1e-5);
    ASSERT_NEAR(a.eigenvalues[2].imag(), 1.77245, 1e-5);
    ASSERT_EQ(a.zeta, std::sqrt(std::numbers::pi));
    ASSERT_FALSE(a.degenerate);

    const TwoLevelSpectrum b = eigenvalues_two_level(3.0, 4.0);
    ASSERT_EQ(b.eigenvalues[1], Complex(0.0, -5.0));
    ASSERT_EQ(b.eigenvalues[2], Complex(0.0, 5.0));

    const TwoLevelSpectrum c = eigenvalues_two_level(0.0, 0.0);
    ASSERT_TRUE(c.degenerate);
    ASSERT_EQ(c.eigenvalues[1], Complex(0.0));
}

TEST(sylvester, zeta_identity) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double d = u(rng), o = u(rng);
        const TwoLevelSpectrum s = eigenvalues_two_level(d, o);
        ASSERT_NEAR(s.zeta * s.zeta, d * d + o * o, 1e-13 * (d * d + o * o));
    }
}

TEST(sylvester, zero_matrix_gives_identity) {
    const Propagator p = sylvester_expm(RealMatrix(RealMatrix::Zero(3, 3)));
    ASSERT_EQ(p.matrix, RealMatrix::Identity(3, 3));
    ASSERT_EQ(p.method, PropagatorMethod::Identity);
    ASSERT_EQ(sylvester_expm(RealMatrix(RealMatrix::Zero(8, 8))).matrix, RealMatrix::Identity(8, 8));
}

TEST(sylvester, resonant_default_pulse_rotation) {
    const double area = std::sqrt(std::numbers::pi);
    const Propagator p = sylvester_expm(oracle::two_level_g(0.0, area));
    RealMatrix expected(3, 3);
    expected << 1, 0, 0,  //
        0, std::cos(area), -std::sin(area),  //
        0, std::sin(area), std::cos(area);
    ASSERT_EQ(p.method, PropagatorMethod::Sylvester);
    ASSERT_LT(max_diff(p.matrix, expected), 1e-12);
    ASSERT_LT(max_diff(p.matrix, oracle::series_expm(oracle::two_level_g(0.0, area))), 1e-12);
}

TEST(sylvester, random_three_by_three_matches_series) {
    std::mt19937_64 rng(43);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const RealMatrix g = oracle::random_antisymmetric(rng, 3, 5.0, 0.0);
        const Propagator p = sylvester_expm(g);
        worst = std::max(worst, max_diff(p.matrix, oracle::series_expm(g)));
    }
    ASSERT_LT(worst, 1e-10);
}

TEST(sylvester, random_eight_by_eight_matches_series) {
    std::mt19937_64 rng(47);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const RealMatrix g = oracle::random_antisymmetric(rng, 8, 5.0, 1e-3);
        const Propagator p = sylvester_expm(g);
        ASSERT_EQ(p.method, PropagatorMethod::Sylvester);
        worst = std::max(worst, max_diff(p.matrix, oracle::series_expm(g)));
    }
    ASSERT_LT(worst, 1e-10);
}

TEST(sylvester, propagators_are_rotations) {
    std::mt19937_64 rng(53);
    for (int n : {3, 4, 8}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Propagator p = sylvester_expm(oracle::random_antisymmetric(rng, n, 5.0, 1e-3));
            ASSERT_LT(p.orthogonality_residual(), 1e-10);
            ASSERT_NEAR(p.determinant(), 1.0, 1e-10);
        }
    }
}

TEST(sylvester, degenerate_spectrum_falls_back_with_diagnostic) {
    // Two copies of the same 2 x 2 rotation generator: eigenvalues +-i twice.
    RealMatrix g = RealMatrix::Zero(4, 4);
    g(0, 1) = g(2, 3) = 1.0;
    g(1, 0) = g(3, 2) = -1.0;
    const Propagator p = sylvester_expm(g);
    ASSERT_EQ(p.method, PropagatorMethod::SeriesFallback);
    ASSERT_FALSE(p.diagnostics.empty());
    ASSERT_EQ(p.diagnostics[0].rfind("sylvester-degenerate", 0), 0u);
    ASSERT_LT(max_diff(p.matrix, oracle::series_expm(g)), 1e-13);
}

TEST(sylvester, rejects_non_antisymmetric) {
    RealMatrix g = oracle::two_level_g(1.0, 2.0);
    g(0, 0) = 0.1;
    ASSERT_THROW(sylvester_expm(g), DomainError);
    ASSERT_THROW(sylvester_expm(RealMatrix(RealMatrix::Zero(2, 3))), DomainError);
}

TEST(sylvester, group_property_on_commuting_family) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix k = oracle::two_level_g(u(rng), u(rng));
        const double a = u(rng), b = u(rng);
        const RealMatrix lhs = sylvester_expm(RealMatrix(a * k)).matrix * sylvester_expm(RealMatrix(b * k)).matrix;
        ASSERT_LT(max_diff(lhs, sylvester_expm(RealMatrix((a + b) * k)).matrix), 1e-10);
    }
}

TEST(sylvester, closed_form_examples) {
    const CoherenceVector ground(2, vec3(0, 0, 1));
    const double w = 1.1;
    ASSERT_LT(max_diff(closed_form_two_level(0.0, w, ground, SignConvention::Inverted).components(),
                       vec3(0, std::sin(w), -std::cos(w))),
              1e-15);
    ASSERT_LT(max_diff(closed_form_two_level(0.0, w, ground).components(), vec3(0, -std::sin(w), std::cos(w))), 1e-15);
    ASSERT_EQ(closed_form_two_level(2.0, 0.0, ground, SignConvention::Inverted).components(), vec3(0, 0, -1));
    const CoherenceVector other(2, vec3(0.6, 0.0, 0.8));
    ASSERT_EQ(closed_form_two_level(0.0, 0.0, other).components(), other.components());
    ASSERT_THROW(closed_form_two_level(0.0, 1.0, CoherenceVector::zero(3)), DomainError);
}

TEST(sylvester, closed_form_agrees_with_propagator) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    const CoherenceVector ground(2, vec3(0, 0, 1));
    const CoherenceVector excited(2, vec3(0, 0, -1));
    for (int trial = 0; trial < 100; ++trial) {
        const double d = u(rng), o = u(rng);
        const RealMatrix r = sylvester_expm(oracle::two_level_g(d, o)).matrix;
        ASSERT_LT(max_diff(closed_form_two_level(d, o, ground, SignConvention::Inverted).components(), r * vec3(0, 0, -1)),
                  1e-12);
        ASSERT_LT(max_diff(closed_form_two_level(d, o, ground).components(), r * vec3(0, 0, 1)), 1e-12);
        ASSERT_LT(max_diff(closed_form_two_level(d, o, excited).components(), r * vec3(0, 0, -1)), 1e-12);
        ASSERT_LT(max_diff(closed_form_two_level(d, o, ground).components(), oracle::rodrigues(d, o) * vec3(0, 0, 1)),
                  1e-12);
    }
}

TEST(sylvester, superevolution_matches_rk4_on_default_pulse) {
    SimulationConfig cfg;
    const Propagator r = superevolution(cfg);
    const RealVector analytic = r.matrix * vec3(0, 0, 1);
    ASSERT_LT(max_diff(analytic, integrate(cfg).final_state()), 1e-8);
    ASSERT_TRUE(r.zeta.has_value());
    ASSERT_NEAR(*r.zeta, std::sqrt(std::numbers::pi), 1e-11);
}

TEST(sylvester, superevolution_empty_window_is_identity) {
    SimulationConfig cfg;
    cfg.t0 = cfg.t1 = 2.0;
    ASSERT_EQ(superevolution(cfg).matrix, RealMatrix::Identity(3, 3));
    ASSERT_THROW(superevolution(config_coefficients(cfg), 3, 2.0, 1.0), DomainError);
}

TEST(sylvester, apply_checks_size) {
    const Propagator p = sylvester_expm(oracle::two_level_g(1.0, 1.0));
    ASSERT_THROW(p.apply(CoherenceVector::zero(3)), DomainError);
}

TEST(sylvester, resonant_decoupled_drive_rotates_by_signed_area) {
    SimulationConfig cfg;
    cfg.pulse = PulseProfile::decoupled(PulseProfile::gaussian(1.0, 5.0, 1.0), 0.35);
    const Propagator r = superevolution(cfg);
    const RealMatrix exact = oracle::rodrigues(0.0, pulse_area(cfg.pulse, cfg.t0, cfg.t1));
    ASSERT_LT(max_diff(r.matrix, exact), 1e-12);
    ASSERT_LT(max_diff(r.matrix * vec3(0, 0, 1), integrate(cfg).final_state()), 1e-8);
}

TEST(sylvester, detuned_decoupled_drive_does_not_commute) {
    SimulationConfig cfg;
    cfg.pulse = PulseProfile::decoupled(PulseProfile::constant(1.0), 0.5);
    cfg.detuning.delta = 0.5;
    ASSERT_THROW(superevolution(cfg), NonCommutingError);
}

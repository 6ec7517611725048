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


#ifndef QFSM_TESTS_SUPPORT_ORACLES_H
#define QFSM_TESTS_SUPPORT_ORACLES_H

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qfsm/linalg.h"

namespace qfsm::oracle {

/// Composite Simpson rule with `intervals` (even) subintervals.
double simpson(const std::function<double(double)>& f, double a, double b, long intervals);

/// Truncated Taylor series (40 terms) after scaling G by 2^-s until its 1-norm is <= 1/2, then squared back.
RealMatrix series_expm(const RealMatrix& g);

/// Coefficient matrix of the two-level equation of motion, written out by hand.
RealMatrix two_level_g(double delta, double omega);

/// exp(two_level_g(delta_area, omega_area)) from Rodrigues' rotation formula.
RealMatrix rodrigues(double delta_area, double omega_area);

/// Area of Omega0 exp(-(t - tau)^2 / sigma^2) over [t0, t1] via erf.
double gaussian_area(double omega0, double tau, double sigma, double t0, double t1);

/// Standard Gell-Mann matrices lambda_1..lambda_8 (1-based).
ComplexMatrix gell_mann(int k);

/// Our su(3) index (0-based) holding the standard Gell-Mann matrix lambda_k (1-based).
int su3_index_of_lambda(int k);

/// Textbook su(3) structure constant f_{abc} for 1-based Gell-Mann labels.
double su3_structure_constant(int a, int b, int c);

/// Levi-Civita symbol on 0-based indices.
int levi_civita(int i, int j, int k);

int xor_fold(const std::vector<int>& bits);

std::vector<int> random_bits(std::mt19937_64& rng, std::size_t length);

/// Real antisymmetric n x n matrix with Frobenius norm uniform in (0, max_norm], redrawn until every pair
/// of eigenvalues of the matrix is separated by at least `min_gap`.
RealMatrix random_antisymmetric(std::mt19937_64& rng, int n, double max_norm, double min_gap);

/// Smallest distance between two eigenvalues of a real antisymmetric matrix.
double min_eigenvalue_gap(const RealMatrix& g);

/// Uniformly random point on the unit sphere.
RealVector random_unit_vector(std::mt19937_64& rng, int size);

/// Least-squares slope of log(error) against log(step).
double convergence_exponent(const std::vector<double>& steps, const std::vector<double>& errors);

}  // namespace qfsm::oracle

#endif  // QFSM_TESTS_SUPPORT_ORACLES_H

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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qfsm::oracle {

double simpson(const std::function<double(double)>& f, double a, double b, long intervals) {
    if (intervals % 2) {
        ++intervals;
    }
    const double h = (b - a) / static_cast<double>(intervals);
    double odd = 0.0;
    double even = 0.0;
    for (long i = 1; i < intervals; ++i) {
        (i % 2 ? odd : even) += f(a + h * static_cast<double>(i));
    }
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

RealMatrix series_expm(const RealMatrix& g) {
    int squarings = 0;
    double norm = g.cwiseAbs().colwise().sum().maxCoeff();
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    const RealMatrix a = g / std::ldexp(1.0, squarings);
    RealMatrix term = RealMatrix::Identity(g.rows(), g.cols());
    RealMatrix sum = term;
    for (int k = 1; k < 40; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

RealMatrix two_level_g(double delta, double omega) {
    RealMatrix g(3, 3);
    g << 0.0, delta, 0.0,  //
        -delta, 0.0, -omega,  //
        0.0, omega, 0.0;
    return g;
}

RealMatrix rodrigues(double delta_area, double omega_area) {
    const double angle = std::hypot(delta_area, omega_area);
    if (angle == 0.0) {
        return RealMatrix::Identity(3, 3);
    }
    const RealMatrix k = two_level_g(delta_area, omega_area) / angle;
    return RealMatrix::Identity(3, 3) + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

double gaussian_area(double omega0, double tau, double sigma, double t0, double t1) {
    return omega0 * sigma * std::sqrt(std::numbers::pi) / 2.0 * (std::erf((t1 - tau) / sigma) - std::erf((t0 - tau) / sigma));
}

ComplexMatrix gell_mann(int k) {
    const Complex i(0.0, 1.0);
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    switch (k) {
        case 1:
            m(0, 1) = m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case 4:
            m(0, 2) = m(2, 0) = 1.0;
            break;
        case 5:
            m(0, 2) = -i;
            m(2, 0) = i;
            break;
        case 6:
            m(1, 2) = m(2, 1) = 1.0;
            break;
        case 7:
            m(1, 2) = -i;
            m(2, 1) = i;
            break;
        case 8:
            m(0, 0) = m(1, 1) = 1.0 / std::sqrt(3.0);
            m(2, 2) = -2.0 / std::sqrt(3.0);
            break;
        default:
            break;
    }
    return m;
}

int su3_index_of_lambda(int k) {
    // Symmetric (01, 02, 12), antisymmetric (01, 02, 12), diagonal (l = 1, 2).
    static constexpr int kIndex[9] = {-1, 0, 3, 6, 1, 4, 2, 5, 7};
    return kIndex[k];
}

double su3_structure_constant(int a, int b, int c) {
    struct Row {
        int a, b, c;
        double f;
    };
    const double h = std::sqrt(3.0) / 2.0;
    const Row table[] = {{1, 2, 3, 1.0},  {1, 4, 7, 0.5}, {1, 5, 6, -0.5}, {2, 4, 6, 0.5}, {2, 5, 7, 0.5},
                         {3, 4, 5, 0.5},  {3, 6, 7, -0.5}, {4, 5, 8, h},    {6, 7, 8, h}};
    for (const Row& r : table) {
        const int p[3] = {r.a, r.b, r.c};
        const int q[3] = {a, b, c};
        // Find the permutation taking (r.a, r.b, r.c) to (a, b, c) and return its signed value.
        int perm[3];
        bool match = true;
        for (int x = 0; x < 3 && match; ++x) {
            perm[x] = -1;
            for (int y = 0; y < 3; ++y) {
                if (q[x] == p[y]) {
                    perm[x] = y;
                }
            }
            match = perm[x] >= 0;
        }
        if (!match || perm[0] == perm[1] || perm[1] == perm[2] || perm[0] == perm[2]) {
            continue;
        }
        return levi_civita(perm[0], perm[1], perm[2]) * r.f;
    }
    return 0.0;
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) {
        return 0;
    }
    return (j - i) * (k - i) * (k - j) > 0 ? 1 : -1;
}

int xor_fold(const std::vector<int>& bits) {
    int acc = 0;
    for (int b : bits) {
        acc ^= b;
    }
    return acc;
}

std::vector<int> random_bits(std::mt19937_64& rng, std::size_t length) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int> out(length);
    for (auto& b : out) {
        b = coin(rng) ? 1 : 0;
    }
    return out;
}

double min_eigenvalue_gap(const RealMatrix& g) {
    const auto ev = g.cast<Complex>().eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < ev.size(); ++a) {
        for (Eigen::Index b = a + 1; b < ev.size(); ++b) {
            gap = std::min(gap, std::abs(ev[a] - ev[b]));
        }
    }
    return gap;
}

RealMatrix random_antisymmetric(std::mt19937_64& rng, int n, double max_norm, double min_gap) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.0, 1.0);
    for (;;) {
        RealMatrix m(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                m(r, c) = entry(rng);
            }
        }
        RealMatrix g = m - m.transpose();
        const double s = scale(rng);
        if (s == 0.0) {
            continue;
        }
        g *= max_norm * s / g.norm();
        if (min_eigenvalue_gap(g) >= min_gap) {
            return g;
        }
    }
}

RealVector random_unit_vector(std::mt19937_64& rng, int size) {
    std::normal_distribution<double> normal;
    RealVector v(size);
    do {
        for (int i = 0; i < size; ++i) {
            v[i] = normal(rng);
        }
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

double convergence_exponent(const std::vector<double>& steps, const std::vector<double>& errors) {
    const auto n = static_cast<double>(steps.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const double x = std::log(steps[i]);
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qfsm::oracle

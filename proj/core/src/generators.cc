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

#include "qfsm/generators.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "qfsm/errors.h"

namespace qfsm {

namespace {

constexpr Complex kI{0.0, 1.0};

// Values this small are round-off from the trace computation, not genuine structure constants.
constexpr double kStructureZero = 1e-13;
constexpr double kBasisTolerance = 1e-10;

}  // namespace

ComplexMatrix projector(int m, int n, int dim) {
    if (dim < 1 || m < 0 || n < 0 || m >= dim || n >= dim) {
        throw DomainError("projector: level indices (" + std::to_string(m) + ", " + std::to_string(n) +
                          ") out of range for dimension " + std::to_string(dim));
    }
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    p(m, n) = 1.0;
    return p;
}

GeneratorBasis::GeneratorBasis(int dimension, std::vector<ComplexMatrix> generators,
                               std::vector<GeneratorLabel> labels)
    : dimension_(dimension), generators_(std::move(generators)), labels_(std::move(labels)) {}

GeneratorBasis GeneratorBasis::from_matrices(int dimension, std::vector<ComplexMatrix> generators,
                                             std::vector<GeneratorLabel> labels) {
    if (dimension < 2) {
        throw DomainError("generator basis dimension must be >= 2");
    }
    for (const auto& g : generators) {
        if (g.rows() != dimension || g.cols() != dimension) {
            throw DomainError("generator has wrong shape for dimension " + std::to_string(dimension));
        }
    }
    if (!labels.empty() && labels.size() != generators.size()) {
        throw DomainError("generator label count does not match generator count");
    }
    return GeneratorBasis(dimension, std::move(generators), std::move(labels));
}

double GeneratorBasis::orthonormality_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            Complex tr = (generators_[i] * generators_[j]).trace();
            worst = std::max(worst, std::abs(tr - Complex(i == j ? 2.0 : 0.0)));
        }
    }
    return worst;
}

double GeneratorBasis::hermiticity_residual() const {
    double worst = 0.0;
    for (const auto& g : generators_) {
        worst = std::max(worst, max_abs(g - g.adjoint()));
    }
    return worst;
}

double GeneratorBasis::trace_residual() const {
    double worst = 0.0;
    for (const auto& g : generators_) {
        worst = std::max(worst, std::abs(g.trace()));
    }
    return worst;
}

GeneratorBasis make_basis(int dimension) {
    if (dimension < 2) {
        throw DomainError("make_basis: dimension must be >= 2, got " + std::to_string(dimension));
    }
    const int n = dimension;
    std::vector<ComplexMatrix> gens;
    std::vector<GeneratorLabel> labels;
    gens.reserve(static_cast<std::size_t>(n * n - 1));
    labels.reserve(gens.capacity());

    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            gens.push_back(projector(m, k, n) + projector(k, m, n));
            labels.push_back({GeneratorKind::Symmetric, m, k});
        }
    }
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            gens.push_back(-kI * (projector(m, k, n) - projector(k, m, n)));
            labels.push_back({GeneratorKind::Antisymmetric, m, k});
        }
    }
    for (int l = 1; l < n; ++l) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < l; ++k) {
            d(k, k) = 1.0;
        }
        d(l, l) = -static_cast<double>(l);
        gens.push_back(std::sqrt(2.0 / (l * (l + 1.0))) * d);
        labels.push_back({GeneratorKind::Diagonal, l, l});
    }
    return GeneratorBasis::from_matrices(n, std::move(gens), std::move(labels));
}

StructureConstants::StructureConstants(int dimension, std::vector<Entry> nonzeros)
    : dimension_(dimension), size_(dimension * dimension - 1), nonzeros_(std::move(nonzeros)) {
    if (dimension_ <= kDenseMaxDimension) {
        dense_.assign(static_cast<std::size_t>(size_) * size_ * size_, 0.0);
        for (const auto& e : nonzeros_) {
            dense_[static_cast<std::size_t>(key(e.i, e.j, e.k))] = e.value;
        }
    } else {
        sparse_.reserve(nonzeros_.size());
        for (const auto& e : nonzeros_) {
            sparse_.emplace(key(e.i, e.j, e.k), e.value);
        }
    }
}

double StructureConstants::operator()(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= size_ || j >= size_ || k >= size_) {
        throw DomainError("structure constant index out of range");
    }
    if (dense()) {
        return dense_[static_cast<std::size_t>(key(i, j, k))];
    }
    auto it = sparse_.find(key(i, j, k));
    return it == sparse_.end() ? 0.0 : it->second;
}

double StructureConstants::antisymmetry_residual() const {
    double worst = 0.0;
    const auto& f = *this;
    // Every violated swap involves at least one stored entry, so scanning the non-zeros suffices.
    for (const auto& e : nonzeros_) {
        worst = std::max(worst, std::abs(e.value + f(e.j, e.i, e.k)));
        worst = std::max(worst, std::abs(e.value + f(e.i, e.k, e.j)));
        worst = std::max(worst, std::abs(e.value + f(e.k, e.j, e.i)));
    }
    return worst;
}

StructureConstants structure_constants(const GeneratorBasis& basis) {
    const int n = basis.dimension();
    const int count = n * n - 1;
    if (static_cast<int>(basis.size()) != count) {
        throw InvariantViolation("basis holds " + std::to_string(basis.size()) + " generators, expected " +
                                 std::to_string(count));
    }
    if (basis.hermiticity_residual() > kBasisTolerance || basis.trace_residual() > kBasisTolerance) {
        throw InvariantViolation("basis generators must be traceless and Hermitian");
    }
    if (double r = basis.orthonormality_residual(); r > kBasisTolerance) {
        throw InvariantViolation("non-orthonormal basis: max |Tr(s_i s_j) - 2 delta_ij| = " + std::to_string(r));
    }

    std::vector<StructureConstants::Entry> entries;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const ComplexMatrix comm = basis[i] * basis[j] - basis[j] * basis[i];
            for (int l = 0; l < count; ++l) {
                const Complex v = (comm * basis[l]).trace() / (4.0 * kI);
                if (std::abs(v.imag()) > kBasisTolerance) {
                    throw InvariantViolation("structure constant f(" + std::to_string(i) + "," + std::to_string(j) +
                                             "," + std::to_string(l) + ") is not real");
                }
                if (std::abs(v.real()) > kStructureZero) {
                    entries.push_back({i, j, l, v.real()});
                    entries.push_back({j, i, l, -v.real()});
                }
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return StructureConstants(n, std::move(entries));
}

double commutator_residual(const GeneratorBasis& basis, const StructureConstants& f) {
    const int count = f.size();
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            ComplexMatrix rebuilt = ComplexMatrix::Zero(basis.dimension(), basis.dimension());
            for (int k = 0; k < count; ++k) {
                if (double v = f(i, j, k); v != 0.0) {
                    rebuilt += 2.0 * kI * v * basis[k];
                }
            }
            const ComplexMatrix comm = basis[i] * basis[j] - basis[j] * basis[i];
            worst = std::max(worst, max_abs(comm - rebuilt));
        }
    }
    return worst;
}

BasisCheck check_basis(const GeneratorBasis& basis, const StructureConstants& f) {
    return {
        basis.orthonormality_residual(),
        basis.hermiticity_residual(),
        basis.trace_residual(),
        commutator_residual(basis, f),
        f.antisymmetry_residual(),
    };
}

}  // namespace qfsm

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

#ifndef QFSM_GENERATORS_H
#define QFSM_GENERATORS_H

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qfsm/linalg.h"

namespace qfsm {

/// |m><n| as a dense dim x dim matrix.
ComplexMatrix projector(int m, int n, int dim);

enum class GeneratorKind { Symmetric, Antisymmetric, Diagonal };

/// Which projector combination a generator was built from. For diagonal generators `m == n == l`,
/// the highest level carrying weight.
struct GeneratorLabel {
    GeneratorKind kind;
    int m;
    int n;

    bool operator==(const GeneratorLabel&) const = default;
};

/// The N^2 - 1 traceless Hermitian generators of su(N), normalized so that Tr(s_i s_j) = 2 delta_ij.
///
/// Generators are indexed from 0. The order is part of the public contract because every coherence
/// vector and every coefficient matrix is expressed in it:
///   1. symmetric   |m><n| + |n><m|       for m < n, lexicographic in (m, n)
///   2. antisymmetric -i(|m><n| - |n><m|) for m < n, lexicographic in (m, n)
///   3. diagonal    sqrt(2/(l(l+1))) (sum_{k<l} |k><k| - l |l><l|) for l = 1 .. N-1
/// For N = 2 this is exactly (sigma_x, sigma_y, sigma_z).
class GeneratorBasis {
   public:
    /// Wraps an arbitrary generator list without validating it. `structure_constants` rejects
    /// lists that are not orthonormal.
    static GeneratorBasis from_matrices(int dimension, std::vector<ComplexMatrix> generators,
                                        std::vector<GeneratorLabel> labels = {});

    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const ComplexMatrix& operator[](std::size_t i) const { return generators_[i]; }
    const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
    const std::vector<GeneratorLabel>& labels() const noexcept { return labels_; }

    /// max_{i,j} |Tr(s_i s_j) - 2 delta_ij|
    double orthonormality_residual() const;
    /// max_i ||s_i - s_i^dagger||_max
    double hermiticity_residual() const;
    /// max_i |Tr s_i|
    double trace_residual() const;

   private:
    GeneratorBasis(int dimension, std::vector<ComplexMatrix> generators, std::vector<GeneratorLabel> labels);

    int dimension_;
    std::vector<ComplexMatrix> generators_;
    std::vector<GeneratorLabel> labels_;
};

GeneratorBasis make_basis(int dimension);

/// Structure constants f_ijk of su(N) in a given generator basis: [s_i, s_j] = 2i sum_k f_ijk s_k.
///
/// Dense storage is used up to N = 4, a hash map above. Both modes keep a list of non-zero entries,
/// which is what the coefficient-matrix assembly iterates over.
class StructureConstants {
   public:
    struct Entry {
        int i;
        int j;
        int k;
        double value;
    };

    StructureConstants(int dimension, std::vector<Entry> nonzeros);

    int dimension() const noexcept { return dimension_; }
    int size() const noexcept { return size_; }
    bool dense() const noexcept { return !dense_.empty(); }
    double operator()(int i, int j, int k) const;
    const std::vector<Entry>& nonzeros() const noexcept { return nonzeros_; }

    /// Largest deviation from total antisymmetry over all index swaps.
    double antisymmetry_residual() const;

    static constexpr int kDenseMaxDimension = 4;

   private:
    std::int64_t key(int i, int j, int k) const {
        return (static_cast<std::int64_t>(i) * size_ + j) * size_ + k;
    }

    int dimension_;
    int size_;
    std::vector<Entry> nonzeros_;
    std::vector<double> dense_;
    std::unordered_map<std::int64_t, double> sparse_;
};

/// f_ijl = Tr([s_i, s_j] s_l) / (4i). Throws InvariantViolation for a basis that is not traceless,
/// Hermitian and orthonormal.
StructureConstants structure_constants(const GeneratorBasis& basis);

/// max_{i,j} || [s_i, s_j] - 2i sum_k f_ijk s_k ||_max
double commutator_residual(const GeneratorBasis& basis, const StructureConstants& f);

struct BasisCheck {
    double orthonormality;
    double hermiticity;
    double trace;
    double commutator;
    double antisymmetry;
};

BasisCheck check_basis(const GeneratorBasis& basis, const StructureConstants& f);

}  // namespace qfsm

#endif  // QFSM_GENERATORS_H

// Copyright 2026 The QECI Authors
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

#ifndef QECI_DENSITY_H
#define QECI_DENSITY_H

#include <vector>

#include "qeci/linalg.h"

namespace qeci {

inline constexpr double kDensityTol = 1e-9;
/// Conditioning on an outcome whose probability is at or below this is refused.
inline constexpr double kProbTol = 1e-12;

/// A Hermitian, positive semidefinite, unit-trace matrix together with the
/// dimensions of the subsystems it is defined over.
///
/// Only `validate_density` produces instances, so holding one is proof that
/// the invariants were checked.
class DensityMatrix {
   public:
    const ComplexMatrix &mat() const noexcept {
        return mat_;
    }
    const std::vector<size_t> &dims() const noexcept {
        return dims_;
    }
    size_t dim() const noexcept {
        return mat_.rows();
    }
    bool is_bipartite() const noexcept {
        return dims_.size() == 2;
    }
    /// Reduced density of one factor of a bipartite state.
    DensityMatrix reduced(Side keep) const;

   private:
    friend DensityMatrix validate_density(const ComplexMatrix &m, std::vector<size_t> dims, double tol);
    DensityMatrix(ComplexMatrix mat, std::vector<size_t> dims) : mat_(std::move(mat)), dims_(std::move(dims)) {
    }

    ComplexMatrix mat_;
    std::vector<size_t> dims_;
};

/// Unit-norm ket.
class PureState {
   public:
    /// Throws NotNormalized when | ||ket|| - 1 | > tol.
    explicit PureState(std::vector<Complex> amplitudes, double tol = kDensityTol);

    /// |index> in a `dim`-dimensional space.
    static PureState basis(size_t dim, size_t index);

    size_t dim() const noexcept {
        return ket_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return ket_;
    }
    ComplexMatrix column() const;
    /// |psi><psi|.
    ComplexMatrix projector() const;

   private:
    std::vector<Complex> ket_;
};

/// Checks Hermiticity, unit trace and positive semidefiniteness at `tol`.
///
/// Eigenvalues in [-tol, 0) are clamped to zero and the matrix re-normalized.
/// Throws NotHermitian / TraceNotOne / NotPSD naming the measured residual, or
/// DimensionMismatch when `dims` does not multiply out to the matrix size.
DensityMatrix validate_density(const ComplexMatrix &m, std::vector<size_t> dims, double tol = kDensityTol);

/// -sum lambda log2 lambda over the spectrum, in bits.
double von_neumann_entropy(const DensityMatrix &rho);
/// Entropy (bits) of a probability spectrum, skipping entries below kProbTol.
double spectrum_entropy(std::span<const double> spectrum);

/// M * N = (N^{1/2} (x) I) M (N^{1/2} (x) I), the identity sized so the
/// product matches M. N must be Hermitian PSD.
ComplexMatrix star_product(const ComplexMatrix &m, const ComplexMatrix &n);

/// Tr_cond(ordered * |c><c|): the unnormalized conditional state of the other
/// subsystem. Its trace is the probability of observing `condition`.
ComplexMatrix instance_numerator(const DensityMatrix &joint, const PureState &condition, Side conditioned_side);

/// Reduced state of the other subsystem after observing `condition` on
/// `conditioned_side`. The conditioned subsystem is moved to the first slot,
/// projected with the star product, then traced out and the result normalized.
///
/// Throws ZeroProbabilityCondition when the outcome has probability <= kProbTol.
DensityMatrix instance_conditional(const DensityMatrix &joint, const PureState &condition, Side conditioned_side);

/// Normalized singlet (|01> - |10>)/sqrt(2) as a 2x2 bipartite density.
DensityMatrix spin_singlet();

}  // namespace qeci

#endif

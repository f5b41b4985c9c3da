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

#ifndef QECI_LINALG_H
#define QECI_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qeci {

using Complex = std::complex<double>;

/// Which factor of a bipartite space an operation acts on. Composite indices
/// are always `a * dim_b + b`, i.e. |a>|b> ordering.
enum class Side { A, B };

/// Dense row-major complex matrix.
///
/// Entries supplied from outside (constructors taking data) are checked for
/// finiteness; arithmetic results are trusted.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);
    /// Column vector (n x 1).
    static ComplexMatrix column(std::span<const Complex> values);
    static ComplexMatrix column(std::initializer_list<Complex> values);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept {
        return data_;
    }

    Complex trace() const;
    double frobenius_norm() const;
    /// Column c as an n x 1 matrix.
    ComplexMatrix col(size_t c) const;
    std::vector<Complex> col_values(size_t c) const;
    /// Real parts of the main diagonal.
    std::vector<double> real_diagonal() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// |v><v| for a column vector v.
ComplexMatrix outer(const ComplexMatrix &ket);

/// ||a - b||_F.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);
/// ||a - a^dagger||_F.
double hermiticity_residual(const ComplexMatrix &a);

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr int kDefaultMaxSweeps = 100;
/// Relative Hermiticity tolerance accepted by `hermitian_eig`.
inline constexpr double kHermTol = 1e-9;

struct EigenDecomposition {
    /// Non-increasing.
    std::vector<double> eigenvalues;
    /// Column i is the unit eigenvector for eigenvalues[i]; its
    /// largest-magnitude component is real and positive.
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius mass is at most
/// `eig_tol * ||a||_F`. Throws NotHermitian when the input is not Hermitian
/// to `kHermTol` (relative) and NoConvergence when `max_sweeps` is exhausted.
EigenDecomposition hermitian_eig(
    const ComplexMatrix &a, double eig_tol = kDefaultEigTol, int max_sweeps = kDefaultMaxSweeps);

/// Reduced matrix after tracing out `traced_side` of a (dim_a*dim_b) square matrix.
ComplexMatrix partial_trace(const ComplexMatrix &rho, size_t dim_a, size_t dim_b, Side traced_side);

/// Reorders an A(x)B operator into B(x)A ordering. Pure permutation.
ComplexMatrix swap_subsystems(const ComplexMatrix &rho_ab, size_t dim_a, size_t dim_b);

}  // namespace qeci

#endif

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

#include "qeci/density.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "qeci/error.h"

namespace qeci {

namespace {

std::string fmt_residual(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

void require_bipartite(const DensityMatrix &rho) {
    if (!rho.is_bipartite()) {
        throw QeciError(
            ErrorKind::DimensionMismatch,
            "expected a bipartite density, got " + std::to_string(rho.dims().size()) + " subsystems");
    }
}

}  // namespace

DensityMatrix DensityMatrix::reduced(Side keep) const {
    require_bipartite(*this);
    Side traced = keep == Side::A ? Side::B : Side::A;
    size_t kept_dim = keep == Side::A ? dims_[0] : dims_[1];
    return validate_density(partial_trace(mat_, dims_[0], dims_[1], traced), {kept_dim});
}

PureState::PureState(std::vector<Complex> amplitudes, double tol) : ket_(std::move(amplitudes)) {
    double norm2 = 0;
    for (const auto &z : ket_) {
        norm2 += std::norm(z);
    }
    double norm = std::sqrt(norm2);
    if (!(std::abs(norm - 1) <= tol)) {
        throw QeciError(ErrorKind::NotNormalized, "ket norm " + std::to_string(norm) + " is not 1");
    }
}

PureState PureState::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw QeciError(ErrorKind::InvalidParameter, "basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1;
    return PureState(std::move(amps));
}

ComplexMatrix PureState::column() const {
    return ComplexMatrix::column(ket_);
}

ComplexMatrix PureState::projector() const {
    return outer(column());
}

DensityMatrix validate_density(const ComplexMatrix &m, std::vector<size_t> dims, double tol) {
    if (!m.is_square()) {
        throw QeciError(ErrorKind::DimensionMismatch, "density matrix must be square");
    }
    if (dims.empty()) {
        dims = {m.rows()};
    }
    size_t product = std::accumulate(dims.begin(), dims.end(), size_t{1}, std::multiplies<>());
    if (product != m.rows()) {
        throw QeciError(ErrorKind::DimensionMismatch, "subsystem dims do not multiply to matrix dimension");
    }
    if (!m.all_finite()) {
        throw QeciError(ErrorKind::InvalidParameter, "matrix contains non-finite entries");
    }

    double herm = hermiticity_residual(m);
    if (herm > tol) {
        throw QeciError(ErrorKind::NotHermitian, "||M - M^dagger||_F = " + fmt_residual(herm));
    }
    double trace_err = std::abs(m.trace() - Complex{1});
    if (trace_err > tol) {
        throw QeciError(
            ErrorKind::TraceNotOne,
            "trace = " + std::to_string(m.trace().real()) + ", |trace - 1| = " + fmt_residual(trace_err));
    }
    EigenDecomposition eig = hermitian_eig(m);
    double min_eig = eig.eigenvalues.empty() ? 0 : eig.eigenvalues.back();
    if (min_eig < -tol) {
        throw QeciError(ErrorKind::NotPSD, "minimum eigenvalue " + fmt_residual(min_eig));
    }
    if (min_eig >= 0) {
        return DensityMatrix(m, std::move(dims));
    }

    for (auto &lambda : eig.eigenvalues) {
        lambda = std::max(lambda, 0.0);
    }
    double total = std::accumulate(eig.eigenvalues.begin(), eig.eigenvalues.end(), 0.0);
    for (auto &lambda : eig.eigenvalues) {
        lambda /= total;
    }
    ComplexMatrix repaired = eig.reconstruct();
    repaired = 0.5 * (repaired + dagger(repaired));
    return DensityMatrix(std::move(repaired), std::move(dims));
}

double spectrum_entropy(std::span<const double> spectrum) {
    double total = 0;
    for (double lambda : spectrum) {
        if (lambda > kProbTol) {
            total -= lambda * std::log2(lambda);
        }
    }
    return std::max(total, 0.0);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return spectrum_entropy(hermitian_eig(rho.mat()).eigenvalues);
}

ComplexMatrix star_product(const ComplexMatrix &m, const ComplexMatrix &n) {
    if (!m.is_square() || !n.is_square() || n.rows() == 0 || m.rows() % n.rows() != 0) {
        throw QeciError(ErrorKind::DimensionMismatch, "star product needs dim(N) dividing dim(M)");
    }
    EigenDecomposition eig = hermitian_eig(n);
    double scale = std::max(1.0, n.frobenius_norm());
    for (auto &lambda : eig.eigenvalues) {
        if (lambda < -kDensityTol * scale) {
            throw QeciError(ErrorKind::NotPSD, "star product factor has eigenvalue " + fmt_residual(lambda));
        }
        lambda = std::sqrt(std::max(lambda, 0.0));
    }
    ComplexMatrix root = eig.reconstruct();
    ComplexMatrix lift = kron(root, ComplexMatrix::identity(m.rows() / n.rows()));
    return matmul(matmul(lift, m), lift);
}

ComplexMatrix instance_numerator(const DensityMatrix &joint, const PureState &condition, Side conditioned_side) {
    require_bipartite(joint);
    size_t dim_a = joint.dims()[0];
    size_t dim_b = joint.dims()[1];
    size_t cond_dim = conditioned_side == Side::A ? dim_a : dim_b;
    size_t rest_dim = conditioned_side == Side::A ? dim_b : dim_a;
    if (condition.dim() != cond_dim) {
        throw QeciError(ErrorKind::DimensionMismatch, "condition ket does not match the conditioned subsystem");
    }

    ComplexMatrix ordered = conditioned_side == Side::A ? joint.mat() : swap_subsystems(joint.mat(), dim_a, dim_b);
    // A rank-one projector is its own square root, so it is applied directly
    // rather than through the eigensolver inside star_product.
    ComplexMatrix lift = kron(condition.projector(), ComplexMatrix::identity(rest_dim));
    return partial_trace(matmul(matmul(lift, ordered), lift), cond_dim, rest_dim, Side::A);
}

DensityMatrix instance_conditional(const DensityMatrix &joint, const PureState &condition, Side conditioned_side) {
    ComplexMatrix numerator = instance_numerator(joint, condition, conditioned_side);
    size_t rest_dim = numerator.rows();

    double probability = numerator.trace().real();
    if (!(probability > kProbTol)) {
        throw QeciError(
            ErrorKind::ZeroProbabilityCondition,
            "conditioning outcome has probability " + fmt_residual(probability));
    }
    numerator *= 1.0 / probability;
    numerator = 0.5 * (numerator + dagger(numerator));
    return validate_density(numerator, {rest_dim});
}

DensityMatrix spin_singlet() {
    ComplexMatrix rho{
        {0, 0, 0, 0},
        {0, 0.5, -0.5, 0},
        {0, -0.5, 0.5, 0},
        {0, 0, 0, 0},
    };
    return validate_density(rho, {2, 2});
}

}  // namespace qeci

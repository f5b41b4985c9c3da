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

#include "qeci/coupling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qeci/error.h"

namespace qeci {

namespace {

constexpr double kNegativeClamp = 1e-12;
constexpr double kRowSumTol = 1e-9;

}  // namespace

MarginalSet::MarginalSet(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw QeciError(ErrorKind::InvalidMarginals, "no marginal rows");
    }
    size_t width = 0;
    for (const auto &row : rows_) {
        width = std::max(width, row.size());
    }
    if (width == 0) {
        throw QeciError(ErrorKind::InvalidMarginals, "marginal rows are empty");
    }
    for (size_t r = 0; r < rows_.size(); r++) {
        auto &row = rows_[r];
        row.resize(width, 0.0);
        for (double &x : row) {
            if (!std::isfinite(x) || x < -kNegativeClamp) {
                throw QeciError(
                    ErrorKind::InvalidMarginals, "row " + std::to_string(r) + " has entry " + std::to_string(x));
            }
            x = std::max(x, 0.0);
        }
        double total = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(total - 1) > kRowSumTol) {
            throw QeciError(
                ErrorKind::InvalidMarginals, "row " + std::to_string(r) + " sums to " + std::to_string(total));
        }
    }
}

std::vector<double> CouplingResult::marginal(size_t row, size_t width) const {
    std::vector<double> out(width, 0.0);
    for (const auto &placement : placements) {
        out.at(placement.coords.at(row)) += placement.mass;
    }
    return out;
}

double shannon_entropy(std::span<const double> p) {
    double total = 0;
    for (double x : p) {
        if (x < -kNegativeClamp) {
            throw QeciError(ErrorKind::InvalidDistribution, "negative probability " + std::to_string(x));
        }
        if (x > 0) {
            total -= x * std::log2(x);
        }
    }
    return std::max(total, 0.0);
}

CouplingResult greedy_min_entropy_coupling(const MarginalSet &marginals) {
    if (marginals.num_rows() < 2) {
        throw QeciError(ErrorKind::InvalidMarginals, "coupling needs at least two rows");
    }
    std::vector<std::vector<double>> residual = marginals.rows();
    size_t m = residual.size();

    CouplingResult result;
    std::vector<size_t> argmax(m);
    while (true) {
        double r = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < m; k++) {
            const auto &row = residual[k];
            // First maximal element wins ties.
            argmax[k] = static_cast<size_t>(std::max_element(row.begin(), row.end()) - row.begin());
            r = std::min(r, row[argmax[k]]);
        }
        if (r <= kCouplingMassTol) {
            break;
        }
        for (size_t k = 0; k < m; k++) {
            residual[k][argmax[k]] -= r;
        }
        result.placements.push_back({argmax, r});
    }

    double placed = 0;
    for (const auto &placement : result.placements) {
        placed += placement.mass;
    }
    for (auto &placement : result.placements) {
        placement.mass /= placed;
        result.entropy_bits -= placement.mass * std::log2(placement.mass);
    }
    result.entropy_bits = std::max(result.entropy_bits, 0.0);
    return result;
}

DensityMatrix coupling_to_joint_density(
    const CouplingResult &result, std::span<const ComplexMatrix> eigvecs_per_marginal) {
    if (eigvecs_per_marginal.empty()) {
        throw QeciError(ErrorKind::DimensionMismatch, "no eigenvector sets");
    }
    std::vector<size_t> dims;
    size_t total_dim = 1;
    for (const auto &vecs : eigvecs_per_marginal) {
        dims.push_back(vecs.rows());
        total_dim *= vecs.rows();
    }

    ComplexMatrix rho(total_dim, total_dim);
    for (const auto &placement : result.placements) {
        if (placement.coords.size() != eigvecs_per_marginal.size()) {
            throw QeciError(ErrorKind::DimensionMismatch, "placement arity differs from eigenvector set count");
        }
        ComplexMatrix ket = ComplexMatrix::column({Complex{1}});
        for (size_t k = 0; k < placement.coords.size(); k++) {
            const auto &vecs = eigvecs_per_marginal[k];
            if (placement.coords[k] >= vecs.cols()) {
                throw QeciError(ErrorKind::DimensionMismatch, "placement coordinate outside eigenvector set");
            }
            ket = kron(ket, vecs.col(placement.coords[k]));
        }
        rho += Complex{placement.mass} * outer(ket);
    }
    return validate_density(rho, std::move(dims));
}

double bruteforce_coupling_2rows(std::array<double, 2> p, std::array<double, 2> q, size_t grid_steps) {
    double lo = std::max(0.0, p[0] + q[0] - 1);
    double hi = std::min(p[0], q[0]);
    double best = std::numeric_limits<double>::infinity();
    size_t steps = std::max<size_t>(grid_steps, 1);
    for (size_t k = 0; k <= steps; k++) {
        double t = k == steps ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
        std::array<double, 4> joint{t, p[0] - t, q[0] - t, 1 - p[0] - q[0] + t};
        for (double &x : joint) {
            x = std::max(x, 0.0);
        }
        best = std::min(best, shannon_entropy(joint));
    }
    return best;
}

}  // namespace qeci

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

#ifndef QECI_COUPLING_H
#define QECI_COUPLING_H

#include <array>
#include <span>
#include <vector>

#include "qeci/density.h"
#include "qeci/linalg.h"

namespace qeci {

/// Placed masses at or below this end the greedy loop.
inline constexpr double kCouplingMassTol = 1e-12;

/// Probability vectors to be coupled, zero-padded to a common length.
class MarginalSet {
   public:
    /// Entries >= -1e-12 are clamped to zero; each row must sum to 1 within
    /// 1e-9. Throws InvalidMarginals otherwise, or when `rows` is empty.
    explicit MarginalSet(std::vector<std::vector<double>> rows);

    const std::vector<std::vector<double>> &rows() const noexcept {
        return rows_;
    }
    size_t num_rows() const noexcept {
        return rows_.size();
    }
    size_t width() const noexcept {
        return rows_.empty() ? 0 : rows_[0].size();
    }

   private:
    std::vector<std::vector<double>> rows_;
};

struct Placement {
    /// One index per marginal row.
    std::vector<size_t> coords;
    double mass;
};

struct CouplingResult {
    double entropy_bits = 0;
    std::vector<Placement> placements;

    /// Sum of placement masses grouped by coordinate `row` (width entries).
    std::vector<double> marginal(size_t row, size_t width) const;
};

/// Shannon entropy in bits, 0 log 0 = 0. Throws InvalidDistribution on an
/// entry below -1e-12.
double shannon_entropy(std::span<const double> p);

/// Greedy minimum-entropy coupling: repeatedly place the smallest of the
/// row maxima at every row's argmax and subtract it, until the placed mass
/// drops to kCouplingMassTol. Requires at least two rows.
CouplingResult greedy_min_entropy_coupling(const MarginalSet &marginals);

/// Joint density sum_k mass_k |v_{c1}><v_{c1}| (x) |w_{c2}><w_{c2}| (x) ...
/// where column c of `eigvecs_per_marginal[r]` is the vector for coordinate c
/// of row r.
DensityMatrix coupling_to_joint_density(
    const CouplingResult &result, std::span<const ComplexMatrix> eigvecs_per_marginal);

/// Minimum joint entropy over the one-parameter family of 2x2 couplings of p
/// and q, scanning `grid_steps + 1` evenly spaced values of the (0,0) mass.
double bruteforce_coupling_2rows(std::array<double, 2> p, std::array<double, 2> q, size_t grid_steps);

}  // namespace qeci

#endif

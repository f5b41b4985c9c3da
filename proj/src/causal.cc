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

#include "qeci/causal.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qeci/error.h"

namespace qeci {

namespace {

constexpr double kNegativeClamp = 1e-12;
constexpr double kTableSumTol = 1e-9;

std::string side_name(Side side) {
    return side == Side::A ? "A" : "B";
}

void check_degeneracy(const std::vector<double> &eigenvalues, Side side, std::vector<std::string> &warnings) {
    for (size_t k = 0; k + 1 < eigenvalues.size(); k++) {
        double gap = eigenvalues[k] - eigenvalues[k + 1];
        if (gap < kDegeneracyGap) {
            std::ostringstream msg;
            msg << "DegeneracyWarning: reduced density of " << side_name(side) << " has eigenvalues " << k << " and "
                << k + 1 << " within " << gap << "; eigenbasis (and verdict) is basis dependent";
            warnings.push_back(msg.str());
            return;
        }
    }
}

CausalVerdict make_verdict(double cause_fwd, double exo_fwd, double cause_bwd, double exo_bwd, double tie_tol) {
    CausalVerdict verdict;
    verdict.s_cause_fwd = cause_fwd;
    verdict.s_exo_fwd = exo_fwd;
    verdict.s_cause_bwd = cause_bwd;
    verdict.s_exo_bwd = exo_bwd;
    verdict.s_forward = cause_fwd + exo_fwd;
    verdict.s_backward = cause_bwd + exo_bwd;
    verdict.direction = compare_entropies(verdict.s_forward, verdict.s_backward, tie_tol);
    return verdict;
}

/// Rows p(Y | X = x_i) for every x_i with p(x_i) > kProbTol.
std::vector<std::vector<double>> conditional_rows(const JointDistribution &joint) {
    std::vector<double> px = joint.row_marginal();
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < joint.num_rows(); i++) {
        if (px[i] <= kProbTol) {
            continue;
        }
        std::vector<double> row(joint.num_cols());
        for (size_t j = 0; j < joint.num_cols(); j++) {
            row[j] = joint.table()[i][j] / px[i];
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw QeciError(ErrorKind::InvalidDistribution, "degenerate table: marginal is entirely zero");
    }
    return rows;
}

}  // namespace

JointDistribution::JointDistribution(std::vector<std::vector<double>> table) : table_(std::move(table)) {
    if (table_.empty() || table_[0].empty()) {
        throw QeciError(ErrorKind::InvalidDistribution, "empty table");
    }
    double total = 0;
    for (auto &row : table_) {
        if (row.size() != table_[0].size()) {
            throw QeciError(ErrorKind::InvalidDistribution, "ragged table");
        }
        for (double &x : row) {
            if (!std::isfinite(x) || x < -kNegativeClamp) {
                throw QeciError(ErrorKind::InvalidDistribution, "negative or non-finite entry " + std::to_string(x));
            }
            x = std::max(x, 0.0);
            total += x;
        }
    }
    if (std::abs(total - 1) > kTableSumTol) {
        throw QeciError(ErrorKind::InvalidDistribution, "table sums to " + std::to_string(total));
    }
}

std::vector<double> JointDistribution::row_marginal() const {
    std::vector<double> out(num_rows(), 0.0);
    for (size_t i = 0; i < num_rows(); i++) {
        for (size_t j = 0; j < num_cols(); j++) {
            out[i] += table_[i][j];
        }
    }
    return out;
}

std::vector<double> JointDistribution::col_marginal() const {
    std::vector<double> out(num_cols(), 0.0);
    for (size_t i = 0; i < num_rows(); i++) {
        for (size_t j = 0; j < num_cols(); j++) {
            out[j] += table_[i][j];
        }
    }
    return out;
}

JointDistribution JointDistribution::transposed() const {
    std::vector<std::vector<double>> t(num_cols(), std::vector<double>(num_rows()));
    for (size_t i = 0; i < num_rows(); i++) {
        for (size_t j = 0; j < num_cols(); j++) {
            t[j][i] = table_[i][j];
        }
    }
    return JointDistribution(std::move(t));
}

std::string_view direction_name(Direction direction) {
    switch (direction) {
        case Direction::AtoB:
            return "A->B";
        case Direction::BtoA:
            return "B->A";
        case Direction::Tie:
            return "Tie";
    }
    return "?";
}

Direction compare_entropies(double s_forward, double s_backward, double tie_tol) {
    if (std::abs(s_forward - s_backward) <= tie_tol) {
        return Direction::Tie;
    }
    return s_forward < s_backward ? Direction::AtoB : Direction::BtoA;
}

CouplingResult couple_rows(const MarginalSet &rows) {
    if (rows.num_rows() >= 2) {
        return greedy_min_entropy_coupling(rows);
    }
    CouplingResult result;
    const auto &row = rows.rows()[0];
    for (size_t k = 0; k < row.size(); k++) {
        if (row[k] > kCouplingMassTol) {
            result.placements.push_back({{k}, row[k]});
        }
    }
    result.entropy_bits = shannon_entropy(row);
    return result;
}

DirectionalAnalysis analyze_direction(const DensityMatrix &rho_ab, Side cause, double eig_tol) {
    if (!rho_ab.is_bipartite()) {
        throw QeciError(ErrorKind::DimensionMismatch, "causal inference needs a bipartite density");
    }
    DirectionalAnalysis out;
    out.cause = cause;
    out.cause_density = rho_ab.reduced(cause).mat();
    out.cause_eig = hermitian_eig(out.cause_density, eig_tol);
    out.cause_entropy = spectrum_entropy(out.cause_eig.eigenvalues);
    check_degeneracy(out.cause_eig.eigenvalues, cause, out.warnings);

    for (size_t k = 0; k < out.cause_eig.eigenvalues.size(); k++) {
        // Branches the cause essentially never occupies have an undefined conditional.
        if (out.cause_eig.eigenvalues[k] <= kProbTol) {
            continue;
        }
        PureState ket(out.cause_eig.eigenvectors.col_values(k));
        ComplexMatrix numerator = instance_numerator(rho_ab, ket, cause);
        if (numerator.trace().real() <= kProbTol) {
            continue;
        }
        DensityMatrix conditional = instance_conditional(rho_ab, ket, cause);
        out.branches.push_back(k);
        out.numerators.push_back(std::move(numerator));
        out.spectra.push_back(hermitian_eig(conditional.mat(), eig_tol).eigenvalues);
        out.conditionals.push_back(conditional.mat());
    }
    if (out.spectra.empty()) {
        throw QeciError(ErrorKind::ZeroProbabilityCondition, "no eigenbranch of the cause has positive probability");
    }
    out.coupling = couple_rows(MarginalSet(out.spectra));
    out.exogenous_entropy = out.coupling.entropy_bits;
    return out;
}

MarginalSet conditional_spectra(const DensityMatrix &rho_ab, Side cause, double eig_tol) {
    return MarginalSet(analyze_direction(rho_ab, cause, eig_tol).spectra);
}

CausalVerdict qeci_infer(const DensityMatrix &rho_ab, double tie_tol) {
    DirectionalAnalysis forward = analyze_direction(rho_ab, Side::A);
    DirectionalAnalysis backward = analyze_direction(rho_ab, Side::B);
    CausalVerdict verdict = make_verdict(
        forward.cause_entropy, forward.exogenous_entropy, backward.cause_entropy, backward.exogenous_entropy, tie_tol);
    verdict.warnings = forward.warnings;
    verdict.warnings.insert(verdict.warnings.end(), backward.warnings.begin(), backward.warnings.end());
    return verdict;
}

CausalVerdict classical_eci(const JointDistribution &joint, double tie_tol) {
    JointDistribution flipped = joint.transposed();
    double hx = shannon_entropy(joint.row_marginal());
    double hy = shannon_entropy(joint.col_marginal());
    double exo_fwd = couple_rows(MarginalSet(conditional_rows(joint))).entropy_bits;
    double exo_bwd = couple_rows(MarginalSet(conditional_rows(flipped))).entropy_bits;
    return make_verdict(hx, exo_fwd, hy, exo_bwd, tie_tol);
}

}  // namespace qeci

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

#ifndef QECI_CAUSAL_H
#define QECI_CAUSAL_H

#include <string>
#include <string_view>
#include <vector>

#include "qeci/coupling.h"
#include "qeci/density.h"
#include "qeci/linalg.h"

namespace qeci {

inline constexpr double kDefaultTieTol = 1e-9;
/// Reduced-density eigenvalues closer than this trigger a degeneracy warning.
inline constexpr double kDegeneracyGap = 1e-8;

/// Classical joint probability table p(X = row, Y = col).
class JointDistribution {
   public:
    /// Entries >= -1e-12 are clamped to zero; the table must be rectangular,
    /// non-empty and sum to 1 within 1e-9. Throws InvalidDistribution.
    explicit JointDistribution(std::vector<std::vector<double>> table);

    const std::vector<std::vector<double>> &table() const noexcept {
        return table_;
    }
    size_t num_rows() const noexcept {
        return table_.size();
    }
    size_t num_cols() const noexcept {
        return table_[0].size();
    }
    std::vector<double> row_marginal() const;
    std::vector<double> col_marginal() const;
    JointDistribution transposed() const;

   private:
    std::vector<std::vector<double>> table_;
};

enum class Direction { AtoB, BtoA, Tie };

/// "A->B", "B->A" or "Tie".
std::string_view direction_name(Direction direction);

struct CausalVerdict {
    Direction direction = Direction::Tie;
    /// S(A->B) = s_cause_fwd + s_exo_fwd.
    double s_forward = 0;
    /// S(A<-B) = s_cause_bwd + s_exo_bwd.
    double s_backward = 0;
    double s_cause_fwd = 0;
    double s_exo_fwd = 0;
    double s_cause_bwd = 0;
    double s_exo_bwd = 0;
    /// DegeneracyWarning messages; the verdict is basis dependent when present.
    std::vector<std::string> warnings;
};

/// AtoB iff forward < backward - tie_tol, Tie iff |forward - backward| <= tie_tol.
Direction compare_entropies(double s_forward, double s_backward, double tie_tol);

/// Everything computed while scoring one causal direction of a bipartite state.
struct DirectionalAnalysis {
    Side cause;
    ComplexMatrix cause_density;
    EigenDecomposition cause_eig;
    /// Indices into cause_eig of the branches that were conditioned on
    /// (eigenvalue above kProbTol).
    std::vector<size_t> branches;
    /// Unnormalized effect-side states, one per branch.
    std::vector<ComplexMatrix> numerators;
    /// Normalized effect-side instance conditionals, one per branch.
    std::vector<ComplexMatrix> conditionals;
    /// Spectrum (descending) of each conditional.
    std::vector<std::vector<double>> spectra;
    CouplingResult coupling;
    double cause_entropy = 0;
    double exogenous_entropy = 0;
    std::vector<std::string> warnings;
};

/// Scores the model "effect = f(cause, E)" for `cause` in {A, B}.
DirectionalAnalysis analyze_direction(const DensityMatrix &rho_ab, Side cause, double eig_tol = kDefaultEigTol);

/// Spectra of the instance conditionals of the effect side, one row per
/// non-negligible eigenbranch of the cause side. Forward means cause = A.
MarginalSet conditional_spectra(const DensityMatrix &rho_ab, Side cause, double eig_tol = kDefaultEigTol);

/// Entropy of the greedy coupling of `rows`; a single row couples to itself.
CouplingResult couple_rows(const MarginalSet &rows);

/// Quantum entropic causal inference on a bipartite density.
CausalVerdict qeci_infer(const DensityMatrix &rho_ab, double tie_tol = kDefaultTieTol);

/// Classical entropic causal inference on a joint table (X = rows = A).
CausalVerdict classical_eci(const JointDistribution &joint, double tie_tol = kDefaultTieTol);

}  // namespace qeci

#endif

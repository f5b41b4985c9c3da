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

#ifndef QECI_CLASSICAL_MAP_H
#define QECI_CLASSICAL_MAP_H

#include <string>
#include <vector>

#include "qeci/causal.h"
#include "qeci/density.h"

namespace qeci {

/// Diagonal density with p(x_i, y_j) at slot i * n + j, dims [m, n].
DensityMatrix diag_embed(const JointDistribution &joint);

/// Rotates rho_AB into the product eigenbasis of its marginals,
/// U = V_A (x) V_B, and reads the diagonal of U^dagger rho U as a table.
///
/// Rows and columns follow descending eigenvalue order of rho_A and rho_B.
/// When a marginal spectrum is degenerate the table depends on the chosen
/// eigenbasis; a DegeneracyWarning is appended to `warnings` if given.
JointDistribution rotate_to_classical(const DensityMatrix &rho_ab, std::vector<std::string> *warnings = nullptr);

}  // namespace qeci

#endif

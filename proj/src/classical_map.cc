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

#include "qeci/classical_map.h"

#include <algorithm>

#include "qeci/error.h"

namespace qeci {

DensityMatrix diag_embed(const JointDistribution &joint) {
    size_t m = joint.num_rows();
    size_t n = joint.num_cols();
    std::vector<double> diagonal;
    diagonal.reserve(m * n);
    for (const auto &row : joint.table()) {
        diagonal.insert(diagonal.end(), row.begin(), row.end());
    }
    return validate_density(ComplexMatrix::diagonal(diagonal), {m, n});
}

JointDistribution rotate_to_classical(const DensityMatrix &rho_ab, std::vector<std::string> *warnings) {
    if (!rho_ab.is_bipartite()) {
        throw QeciError(ErrorKind::DimensionMismatch, "rotation needs a bipartite density");
    }
    size_t m = rho_ab.dims()[0];
    size_t n = rho_ab.dims()[1];
    EigenDecomposition eig_a = hermitian_eig(rho_ab.reduced(Side::A).mat());
    EigenDecomposition eig_b = hermitian_eig(rho_ab.reduced(Side::B).mat());

    if (warnings != nullptr) {
        for (const auto *eig : {&eig_a, &eig_b}) {
            for (size_t k = 0; k + 1 < eig->eigenvalues.size(); k++) {
                if (eig->eigenvalues[k] - eig->eigenvalues[k + 1] < kDegeneracyGap) {
                    warnings->push_back(
                        std::string("DegeneracyWarning: reduced density of ") + (eig == &eig_a ? "A" : "B") +
                        " is degenerate; rotated table is basis dependent");
                    break;
                }
            }
        }
    }

    ComplexMatrix u = kron(eig_a.eigenvectors, eig_b.eigenvectors);
    ComplexMatrix rotated = matmul(matmul(dagger(u), rho_ab.mat()), u);

    std::vector<double> diagonal = rotated.real_diagonal();
    double total = 0;
    for (double &x : diagonal) {
        x = std::max(x, 0.0);
        total += x;
    }
    std::vector<std::vector<double>> table(m, std::vector<double>(n));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            table[i][j] = diagonal[i * n + j] / total;
        }
    }
    return JointDistribution(std::move(table));
}

}  // namespace qeci

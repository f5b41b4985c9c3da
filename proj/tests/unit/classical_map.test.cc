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

#include <cmath>

#include "gtest/gtest.h"
#include "qeci/channels.h"
#include "qeci/error.h"
#include "test_util.h"

using namespace qeci;

namespace {

void expect_table_near(const JointDistribution &got, const std::vector<std::vector<double>> &want, double tol) {
    ASSERT_EQ(got.num_rows(), want.size());
    for (size_t i = 0; i < want.size(); i++) {
        ASSERT_EQ(got.table()[i].size(), want[i].size());
        for (size_t j = 0; j < want[i].size(); j++) {
            EXPECT_NEAR(got.table()[i][j], want[i][j], tol) << i << "," << j;
        }
    }
}

}  // namespace

TEST(classical_map, diag_embed_examples) {
    JointDistribution joint({{1 / 16.0, 3 / 16.0}, {5 / 16.0, 7 / 16.0}});
    DensityMatrix rho = diag_embed(joint);
    ASSERT_EQ(rho.mat(), ComplexMatrix::diagonal({1 / 16.0, 3 / 16.0, 5 / 16.0, 7 / 16.0}));
    ASSERT_EQ(rho.dims(), (std::vector<size_t>{2, 2}));
    ASSERT_EQ(rho.reduced(Side::A).mat(), ComplexMatrix::diagonal({4 / 16.0, 12 / 16.0}));

    DensityMatrix point = diag_embed(JointDistribution({{1, 0}, {0, 0}}));
    ASSERT_EQ(point.mat(), outer(ComplexMatrix::column({1, 0, 0, 0})));
}

TEST(classical_map, diag_embed_rectangular) {
    test::Rng rng(83);
    JointDistribution joint(test::random_table_nondegenerate(2, 3, rng));
    DensityMatrix rho = diag_embed(joint);
    ASSERT_EQ(rho.dims(), (std::vector<size_t>{2, 3}));
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 3; j++) {
            ASSERT_EQ(rho.mat()(i * 3 + j, i * 3 + j).real(), joint.table()[i][j]);
        }
    }
    std::vector<double> rows = joint.row_marginal();
    ASSERT_LT(frobenius_distance(rho.reduced(Side::A).mat(), ComplexMatrix::diagonal(rows)), 1e-15);
}

TEST(classical_map, rotate_round_trip) {
    JointDistribution joint({{1 / 16.0, 3 / 16.0}, {5 / 16.0, 7 / 16.0}});
    std::vector<std::string> warnings;
    JointDistribution back = rotate_to_classical(diag_embed(joint), &warnings);
    // Labels follow descending marginal eigenvalues, which reverses both axes here.
    expect_table_near(back, {{7 / 16.0, 5 / 16.0}, {3 / 16.0, 1 / 16.0}}, 1e-15);
    ASSERT_TRUE(warnings.empty());
}

TEST(classical_map, rotate_diagonal_recovers_permuted_table) {
    test::Rng rng(89);
    for (int trial = 0; trial < 20; trial++) {
        JointDistribution joint(test::random_table_nondegenerate(3, 3, rng));
        JointDistribution back = rotate_to_classical(diag_embed(joint));
        // Oracle: sort each axis by descending marginal.
        auto order = [](std::vector<double> marginal) {
            std::vector<size_t> idx(marginal.size());
            for (size_t k = 0; k < idx.size(); k++) {
                idx[k] = k;
            }
            std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                return marginal[a] > marginal[b];
            });
            return idx;
        };
        std::vector<size_t> rows = order(joint.row_marginal());
        std::vector<size_t> cols = order(joint.col_marginal());
        std::vector<std::vector<double>> expected(3, std::vector<double>(3));
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = 0; j < 3; j++) {
                expected[i][j] = joint.table()[rows[i]][cols[j]];
            }
        }
        expect_table_near(back, expected, 1e-12);
    }
}

TEST(classical_map, rotate_output_is_valid_distribution) {
    test::Rng rng(97);
    for (int trial = 0; trial < 50; trial++) {
        DensityMatrix rho = test::random_bipartite(2, 3, rng);
        JointDistribution table = rotate_to_classical(rho);
        double total = 0;
        for (const auto &row : table.table()) {
            for (double x : row) {
                ASSERT_GE(x, 0);
                total += x;
            }
        }
        ASSERT_NEAR(total, 1, 1e-12);
    }
}

TEST(classical_map, rotate_invariant_under_local_unitaries) {
    test::Rng rng(101);
    for (int trial = 0; trial < 10; trial++) {
        DensityMatrix rho = test::random_bipartite(2, 2, rng);
        ComplexMatrix u = kron(test::random_unitary(2, rng), test::random_unitary(2, rng));
        ComplexMatrix rotated = matmul(matmul(u, rho.mat()), dagger(u));
        rotated = 0.5 * (rotated + dagger(rotated));
        JointDistribution a = rotate_to_classical(rho);
        JointDistribution b = rotate_to_classical(validate_density(rotated, {2, 2}));
        expect_table_near(b, a.table(), 1e-8);
    }
}

TEST(classical_map, rotate_warns_on_degenerate_marginals) {
    std::vector<std::string> warnings;
    rotate_to_classical(spin_singlet(), &warnings);
    ASSERT_EQ(warnings.size(), 2u);
    ASSERT_NE(warnings[0].find("DegeneracyWarning"), std::string::npos);
}

TEST(classical_map, rotate_requires_bipartite) {
    ASSERT_THROW(rotate_to_classical(validate_density(0.5 * ComplexMatrix::identity(2), {2})), QeciError);
}

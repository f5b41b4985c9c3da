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

#include <cmath>

#include "gtest/gtest.h"
#include "qeci/classical_map.h"
#include "qeci/error.h"
#include "test_util.h"

using namespace qeci;

namespace {

DensityMatrix qsc(double q, double p) {
    return validate_density(
        ComplexMatrix::diagonal({q * (1 - p), q * p, (1 - q) * p, (1 - q) * (1 - p)}), {2, 2});
}

DensityMatrix product(const ComplexMatrix &a, const ComplexMatrix &b) {
    return validate_density(kron(a, b), {a.rows(), b.rows()});
}

}  // namespace

TEST(causal, compare_entropies) {
    ASSERT_EQ(compare_entropies(1.0, 2.0, 1e-9), Direction::AtoB);
    ASSERT_EQ(compare_entropies(2.0, 1.0, 1e-9), Direction::BtoA);
    ASSERT_EQ(compare_entropies(1.0, 1.0 + 5e-10, 1e-9), Direction::Tie);
    ASSERT_EQ(direction_name(Direction::AtoB), "A->B");
    ASSERT_EQ(direction_name(Direction::BtoA), "B->A");
    ASSERT_EQ(direction_name(Direction::Tie), "Tie");
}

TEST(causal, joint_distribution_validation) {
    ASSERT_THROW(JointDistribution({}), QeciError);
    ASSERT_THROW(JointDistribution({{0.5}, {0.25, 0.25}}), QeciError);
    ASSERT_THROW(JointDistribution({{0.5, 0.4}}), QeciError);
    ASSERT_THROW(JointDistribution({{1.5, -0.5}}), QeciError);
    JointDistribution joint({{0.1, 0.2}, {0.3, 0.4}});
    ASSERT_EQ(joint.row_marginal()[1], 0.3 + 0.4);
    ASSERT_EQ(joint.col_marginal()[0], 0.1 + 0.3);
    ASSERT_EQ(joint.transposed().table()[0][1], 0.3);
}

TEST(causal, conditional_spectra_worked_example) {
    DensityMatrix rho = qsc(0.4, 0.05);
    MarginalSet forward = conditional_spectra(rho, Side::A);
    ASSERT_EQ(forward.num_rows(), 2u);
    for (const auto &row : forward.rows()) {
        ASSERT_NEAR(row[0], 0.95, 1e-12);
        ASSERT_NEAR(row[1], 0.05, 1e-12);
    }
    MarginalSet backward = conditional_spectra(rho, Side::B);
    ASSERT_EQ(backward.num_rows(), 2u);
    std::vector<std::vector<double>> expected{{0.9268, 0.0732}, {0.9661, 0.0339}};
    // Rows are ordered by the cause's eigenvalues, largest first.
    std::vector<std::vector<double>> got = backward.rows();
    std::sort(got.begin(), got.end());
    for (size_t r = 0; r < 2; r++) {
        ASSERT_NEAR(got[r][0], expected[r][0], 5e-5);
        ASSERT_NEAR(got[r][1], expected[r][1], 5e-5);
    }
}

TEST(causal, conditional_spectra_product_state) {
    test::Rng rng(67);
    ComplexMatrix a = test::random_density_matrix(2, rng);
    ComplexMatrix b = test::random_density_matrix(3, rng);
    std::vector<double> spectrum_b = hermitian_eig(b).eigenvalues;
    MarginalSet forward = conditional_spectra(product(a, b), Side::A);
    ASSERT_EQ(forward.num_rows(), 2u);
    for (const auto &row : forward.rows()) {
        for (size_t k = 0; k < 3; k++) {
            ASSERT_NEAR(row[k], spectrum_b[k], 1e-10);
        }
    }
}

TEST(causal, qeci_worked_example) {
    CausalVerdict v = qeci_infer(qsc(0.4, 0.05));
    ASSERT_EQ(v.direction, Direction::AtoB);
    ASSERT_NEAR(v.s_forward, 1.2573, 5e-4);
    ASSERT_NEAR(v.s_backward, 1.4270, 5e-4);
    ASSERT_NEAR(v.s_cause_fwd, 0.9710, 5e-5);
    ASSERT_NEAR(v.s_exo_fwd, 0.2864, 5e-5);
    ASSERT_NEAR(v.s_exo_bwd, 0.4505, 5e-5);
    ASSERT_NEAR(v.s_cause_bwd, test::entropy_bits_oracle({0.41, 0.59}), 1e-12);
    ASSERT_TRUE(v.warnings.empty());
}

TEST(causal, qeci_product_state_ties) {
    ComplexMatrix a = ComplexMatrix::diagonal({0.9, 0.1});
    ComplexMatrix b = ComplexMatrix::diagonal({0.7, 0.3});
    CausalVerdict v = qeci_infer(product(a, b));
    double ha = test::entropy_bits_oracle({0.9, 0.1});
    double hb = test::entropy_bits_oracle({0.7, 0.3});
    ASSERT_NEAR(v.s_forward, ha + hb, 1e-12);
    ASSERT_NEAR(v.s_backward, ha + hb, 1e-12);
    ASSERT_EQ(v.direction, Direction::Tie);
}

TEST(causal, qeci_pure_entangled_state_skips_null_branches) {
    // (|00> + |11>)/sqrt(2) weighted unevenly: reduced states are rank 2 but
    // the joint is pure, so every conditional is pure.
    double c0 = std::sqrt(0.8);
    double c1 = std::sqrt(0.2);
    ComplexMatrix psi = ComplexMatrix::column({c0, 0, 0, c1});
    CausalVerdict v = qeci_infer(validate_density(outer(psi), {2, 2}));
    ASSERT_NEAR(v.s_exo_fwd, 0, 1e-9);
    ASSERT_NEAR(v.s_exo_bwd, 0, 1e-9);
    ASSERT_EQ(v.direction, Direction::Tie);

    // Rank-deficient cause: the null eigenbranch is skipped, not an error.
    CausalVerdict skew = qeci_infer(validate_density(ComplexMatrix::diagonal({0.6, 0.4, 0, 0}), {2, 2}));
    ASSERT_NEAR(skew.s_cause_fwd, 0, 1e-12);
    ASSERT_NEAR(skew.s_exo_fwd, test::entropy_bits_oracle({0.6, 0.4}), 1e-12);
}

TEST(causal, qeci_requires_bipartite) {
    ASSERT_THROW(qeci_infer(validate_density(ComplexMatrix::diagonal({0.5, 0.5}), {2})), QeciError);
}

TEST(causal, degeneracy_warning) {
    CausalVerdict v = qeci_infer(validate_density(0.25 * ComplexMatrix::identity(4), {2, 2}));
    ASSERT_EQ(v.direction, Direction::Tie);
    ASSERT_EQ(v.warnings.size(), 2u);
    ASSERT_NE(v.warnings[0].find("DegeneracyWarning"), std::string::npos);
    ASSERT_TRUE(qeci_infer(qsc(0.4, 0.05)).warnings.empty());
}

TEST(causal, classical_examples) {
    CausalVerdict worked = classical_eci(JointDistribution({{0.38, 0.02}, {0.03, 0.57}}));
    ASSERT_EQ(worked.direction, Direction::AtoB);
    ASSERT_NEAR(worked.s_forward, 1.2573, 5e-4);
    ASSERT_NEAR(worked.s_backward, 1.4270, 5e-4);

    CausalVerdict uniform = classical_eci(JointDistribution({{0.25, 0.25}, {0.25, 0.25}}));
    ASSERT_EQ(uniform.direction, Direction::Tie);

    CausalVerdict copy = classical_eci(JointDistribution({{0.3, 0}, {0, 0.7}}));
    ASSERT_NEAR(copy.s_exo_fwd, 0, 1e-15);
    ASSERT_NEAR(copy.s_forward, test::entropy_bits_oracle({0.3, 0.7}), 1e-12);
}

TEST(causal, classical_skips_empty_rows) {
    CausalVerdict v = classical_eci(JointDistribution({{0.5, 0.5}, {0, 0}}));
    ASSERT_NEAR(v.s_cause_fwd, 0, 1e-15);
    ASSERT_NEAR(v.s_exo_fwd, 1, 1e-15);
}

TEST(causal, classical_reduction_property) {
    test::Rng rng(71);
    for (size_t n : {2, 3}) {
        for (int trial = 0; trial < 50; trial++) {
            JointDistribution joint(test::random_table_nondegenerate(n, n, rng));
            CausalVerdict c = classical_eci(joint);
            CausalVerdict q = qeci_infer(diag_embed(joint));
            ASSERT_NEAR(c.s_cause_fwd, q.s_cause_fwd, 1e-9);
            ASSERT_NEAR(c.s_exo_fwd, q.s_exo_fwd, 1e-9);
            ASSERT_NEAR(c.s_cause_bwd, q.s_cause_bwd, 1e-9);
            ASSERT_NEAR(c.s_exo_bwd, q.s_exo_bwd, 1e-9);
            ASSERT_EQ(c.direction, q.direction);
        }
    }
}

TEST(causal, rotational_invariance_property) {
    test::Rng rng(73);
    for (int trial = 0; trial < 30; trial++) {
        DensityMatrix rho = test::random_bipartite(2, 3, rng);
        ComplexMatrix u = kron(test::random_unitary(2, rng), test::random_unitary(3, rng));
        ComplexMatrix rotated = matmul(matmul(u, rho.mat()), dagger(u));
        rotated = 0.5 * (rotated + dagger(rotated));
        CausalVerdict before = qeci_infer(rho);
        CausalVerdict after = qeci_infer(validate_density(rotated, {2, 3}));
        ASSERT_NEAR(before.s_forward, after.s_forward, 1e-6);
        ASSERT_NEAR(before.s_backward, after.s_backward, 1e-6);
        ASSERT_EQ(before.direction, after.direction);
    }
}

TEST(causal, swap_antisymmetry_is_exact) {
    test::Rng rng(79);
    for (int trial = 0; trial < 30; trial++) {
        DensityMatrix rho = test::random_bipartite(2, 3, rng);
        DensityMatrix swapped = validate_density(swap_subsystems(rho.mat(), 2, 3), {3, 2});
        CausalVerdict v = qeci_infer(rho);
        CausalVerdict w = qeci_infer(swapped);
        ASSERT_EQ(v.s_forward, w.s_backward);
        ASSERT_EQ(v.s_backward, w.s_forward);
    }
}

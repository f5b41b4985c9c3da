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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qeci/causal.h"
#include "qeci/channels.h"
#include "qeci/cli/commands.h"

namespace qeci::cli {

namespace {

std::string fixed4(double x) {
    char buf[32];
    // Avoid printing "-0.0000" for values that round to zero.
    std::snprintf(buf, sizeof(buf), "%.4f", std::abs(x) < 5e-5 ? 0.0 : x);
    return buf;
}

std::string format_matrix(const ComplexMatrix &m) {
    bool diagonal = m.is_square();
    for (size_t r = 0; r < m.rows() && diagonal; r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (r != c && std::abs(m(r, c)) >= 5e-5) {
                diagonal = false;
                break;
            }
        }
    }
    std::string out;
    if (diagonal) {
        out = "diag(";
        for (size_t k = 0; k < m.rows(); k++) {
            out += (k ? ", " : "") + fixed4(m(k, k).real());
        }
        return out + ")";
    }
    out = "[";
    for (size_t r = 0; r < m.rows(); r++) {
        out += r ? "; " : "";
        for (size_t c = 0; c < m.cols(); c++) {
            out += (c ? " " : "") + fixed4(m(r, c).real());
            if (std::abs(m(r, c).imag()) >= 5e-5) {
                out += (m(r, c).imag() < 0 ? "-" : "+") + fixed4(std::abs(m(r, c).imag())) + "i";
            }
        }
    }
    return out + "]";
}

std::string format_row(const std::vector<double> &row) {
    std::string out = "[";
    for (size_t k = 0; k < row.size(); k++) {
        out += (k ? ", " : "") + fixed4(row[k]);
    }
    return out + "]";
}

std::string step(int number, const std::string &text) {
    return "step " + std::to_string(number) + ": " + text;
}

/// Lines for steps first..first+8 of one direction. Eigenpairs are listed
/// smallest first, as are the conditional spectra.
void trace_direction(
    const DirectionalAnalysis &analysis,
    int first,
    const std::string &cause,
    const std::string &effect,
    const std::string &ket,
    std::vector<std::string> &lines) {
    size_t n = analysis.cause_eig.eigenvalues.size();
    std::vector<double> ascending(analysis.cause_eig.eigenvalues.rbegin(), analysis.cause_eig.eigenvalues.rend());
    ComplexMatrix v(n, n);
    for (size_t k = 0; k < n; k++) {
        for (size_t r = 0; r < n; r++) {
            v(r, k) = analysis.cause_eig.eigenvectors(r, n - 1 - k);
        }
    }
    lines.push_back(step(
        first,
        "eig(rho_" + cause + "): V = " + format_matrix(v) + ", D = " +
            format_matrix(ComplexMatrix::diagonal(ascending))));

    // Branch b of the analysis belongs to eigen index analysis.branches[b];
    // walk them in ascending eigenvalue order.
    std::vector<size_t> order(analysis.branches.size());
    for (size_t b = 0; b < order.size(); b++) {
        order[b] = b;
    }
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return analysis.branches[x] > analysis.branches[y];
    });

    std::string for_line = "for";
    for (size_t i = 0; i < order.size(); i++) {
        for_line += (i ? ", d_" : " d_") + std::to_string(i) + " = " +
                    fixed4(analysis.cause_eig.eigenvalues[analysis.branches[order[i]]]);
    }
    lines.push_back(step(first + 1, for_line + " do"));

    std::string projectors;
    std::string numerators;
    std::string conditionals;
    std::string spectra;
    std::vector<std::vector<double>> m_rows;
    for (size_t i = 0; i < order.size(); i++) {
        size_t b = order[i];
        std::string idx = std::to_string(i);
        std::string sep = i ? ", " : "";
        projectors += sep + ket + "_" + idx + " = " +
                      format_matrix(outer(analysis.cause_eig.eigenvectors.col(analysis.branches[b])));
        numerators += sep + "rho_" + idx + " = " + format_matrix(analysis.numerators[b]);
        conditionals += sep + "rho_" + effect + "|" + ket + "_" + idx + " = " + format_matrix(analysis.conditionals[b]);
        std::vector<double> row(analysis.spectra[b].rbegin(), analysis.spectra[b].rend());
        spectra += sep + std::string(effect == "B" ? "B" : "A") + "_" + idx + " = " + format_row(row);
        m_rows.push_back(row);
    }
    lines.push_back(step(first + 2, "projectors " + projectors));
    lines.push_back(step(first + 3, "instance conditionals " + numerators));
    lines.push_back(step(first + 4, "normalized " + conditionals));
    lines.push_back(step(first + 5, "spectra " + spectra));
    std::string m = "M = [";
    for (size_t i = 0; i < m_rows.size(); i++) {
        m += (i ? "; " : "") + format_row(m_rows[i]);
    }
    lines.push_back(step(first + 6, m + "]"));
    lines.push_back(step(first + 7, "end for"));
}

}  // namespace

std::vector<std::string> worked_example_trace() {
    DensityMatrix rho_ab = qsc_computational(0.4, 0.05);
    DirectionalAnalysis forward = analyze_direction(rho_ab, Side::A);
    DirectionalAnalysis backward = analyze_direction(rho_ab, Side::B);
    double s_forward = forward.cause_entropy + forward.exogenous_entropy;
    double s_backward = backward.cause_entropy + backward.exogenous_entropy;

    std::vector<std::string> lines;
    lines.push_back("rho_AB = " + format_matrix(rho_ab.mat()) + "  (QSC, q = 0.4, p = 0.05)");
    lines.push_back(step(1, "rho_A = Tr_B(rho_AB) = " + format_matrix(forward.cause_density)));
    lines.push_back(step(2, "rho_B = Tr_A(rho_AB) = " + format_matrix(backward.cause_density)));
    lines.push_back(step(3, "rho_BA = " + format_matrix(swap_subsystems(rho_ab.mat(), 2, 2))));

    trace_direction(forward, 4, "A", "B", "a", lines);
    lines.push_back(step(12, "S(rho_E) ~ " + fixed4(forward.exogenous_entropy)));
    lines.push_back(step(
        13,
        "S(A->B) = S(rho_A) + S(rho_E) = " + fixed4(forward.cause_entropy) + " + " +
            fixed4(forward.exogenous_entropy) + " = " + fixed4(s_forward)));

    trace_direction(backward, 14, "B", "A", "b", lines);
    lines.push_back(step(22, "S(rho_E') ~ " + fixed4(backward.exogenous_entropy)));
    lines.push_back(step(
        23,
        "S(A<-B) = S(rho_B) + S(rho_E') = " + fixed4(backward.cause_entropy) + " + " +
            fixed4(backward.exogenous_entropy) + " = " + fixed4(s_backward)));

    Direction direction = compare_entropies(s_forward, s_backward, kDefaultTieTol);
    std::string relation = direction == Direction::AtoB ? "<" : direction == Direction::BtoA ? ">" : "=";
    lines.push_back(step(24, "compare: S(A->B) " + relation + " S(A<-B)"));
    lines.push_back(step(25, "return " + std::string(direction_name(direction))));
    return lines;
}

}  // namespace qeci::cli

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

#ifndef QECI_CLI_FILE_IO_H
#define QECI_CLI_FILE_IO_H

#include <stdexcept>
#include <string>
#include <vector>

#include "qeci/causal.h"
#include "qeci/density.h"
#include "qeci/linalg.h"

// Text formats read and written by the qeci tool.
//
// Density file (JSON):
//     {"dims": [2, 2], "matrix": [[[re, im], ...], ...]}
// Joint table: CSV with a mandatory header row (`y0,y1,...`), or JSON
//     {"table": [[...], ...]} / a bare nested array of numbers.
// Marginals: JSON {"rows": [[...], ...]} or a bare nested array.

namespace qeci::cli {

/// Malformed input text (as opposed to well-formed data violating an invariant).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct DensityFile {
    std::vector<size_t> dims;
    ComplexMatrix matrix;
};

enum class InputKind { Density, Table };

/// Sniffs whether `text` holds a density file or a joint table.
InputKind detect_input_kind(const std::string &text);

DensityFile parse_density_file(const std::string &text);
std::string format_density_file(const ComplexMatrix &matrix, const std::vector<size_t> &dims);

std::vector<std::vector<double>> parse_table(const std::string &text);
/// CSV, header `y0,...,y{n-1}`, values at round-trip precision, LF endings.
std::string format_table_csv(const JointDistribution &joint);

std::vector<std::vector<double>> parse_marginals(const std::string &text);

/// Whole file contents; "-" reads `in` to exhaustion.
std::string read_input(const std::string &path, std::istream &in);

}  // namespace qeci::cli

#endif

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

#include "qeci/cli/file_io.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace qeci::cli {

using nlohmann::json;

namespace {

size_t first_non_space(const std::string &text) {
    size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
        k++;
    }
    return k;
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::vector<double>> numeric_rows(const json &node, const char *what) {
    if (!node.is_array()) {
        throw ParseError(std::string(what) + " must be an array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const auto &row : node) {
        if (!row.is_array()) {
            throw ParseError(std::string(what) + " rows must be arrays");
        }
        std::vector<double> values;
        for (const auto &x : row) {
            if (!x.is_number()) {
                throw ParseError(std::string(what) + " entries must be numbers");
            }
            values.push_back(x.get<double>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

bool parse_double(std::string_view token, double &out) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
        token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
        token.remove_suffix(1);
    }
    if (token.empty()) {
        return false;
    }
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && end == token.data() + token.size();
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string round_trip(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

InputKind detect_input_kind(const std::string &text) {
    size_t k = first_non_space(text);
    if (k < text.size() && text[k] == '{') {
        json doc = parse_json(text);
        if (doc.contains("matrix")) {
            return InputKind::Density;
        }
        if (doc.contains("table")) {
            return InputKind::Table;
        }
        throw ParseError("JSON input has neither \"matrix\" nor \"table\"");
    }
    return InputKind::Table;
}

DensityFile parse_density_file(const std::string &text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
        throw ParseError("density file needs \"dims\" and \"matrix\"");
    }
    DensityFile file;
    if (!doc["dims"].is_array() || doc["dims"].empty()) {
        throw ParseError("\"dims\" must be a non-empty array");
    }
    for (const auto &d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() <= 0) {
            throw ParseError("\"dims\" entries must be positive integers");
        }
        file.dims.push_back(d.get<size_t>());
    }
    const json &rows = doc["matrix"];
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("\"matrix\" must be a non-empty array of rows");
    }
    size_t n = rows.size();
    std::vector<Complex> entries;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError("\"matrix\" must be square");
        }
        for (const auto &z : row) {
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ParseError("matrix entries must be [re, im] pairs");
            }
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    file.matrix = ComplexMatrix(n, n, std::move(entries));
    return file;
}

std::string format_density_file(const ComplexMatrix &matrix, const std::vector<size_t> &dims) {
    std::ostringstream out;
    out << "{\n  \"dims\": [";
    for (size_t k = 0; k < dims.size(); k++) {
        out << (k ? ", " : "") << dims[k];
    }
    out << "],\n  \"matrix\": [\n";
    for (size_t r = 0; r < matrix.rows(); r++) {
        out << "    [";
        for (size_t c = 0; c < matrix.cols(); c++) {
            out << (c ? ", " : "") << "[" << round_trip(matrix(r, c).real()) << ", " << round_trip(matrix(r, c).imag())
                << "]";
        }
        out << "]" << (r + 1 < matrix.rows() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

std::vector<std::vector<double>> parse_table(const std::string &text) {
    size_t k = first_non_space(text);
    if (k < text.size() && (text[k] == '{' || text[k] == '[')) {
        json doc = parse_json(text);
        if (doc.is_object()) {
            if (!doc.contains("table")) {
                throw ParseError("JSON table needs a \"table\" key");
            }
            return numeric_rows(doc["table"], "table");
        }
        return numeric_rows(doc, "table");
    }

    std::vector<std::vector<double>> rows;
    std::istringstream stream(text);
    std::string line;
    bool first = true;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::vector<std::string> cells = split(line, ',');
        std::vector<double> values;
        bool numeric = true;
        for (const auto &cell : cells) {
            double x;
            if (!parse_double(cell, x)) {
                numeric = false;
                break;
            }
            values.push_back(x);
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;
            }
            throw ParseError("non-numeric CSV row: " + line);
        }
        first = false;
        rows.push_back(std::move(values));
    }
    if (rows.empty()) {
        throw ParseError("table has no data rows");
    }
    return rows;
}

std::string format_table_csv(const JointDistribution &joint) {
    std::string out;
    for (size_t j = 0; j < joint.num_cols(); j++) {
        out += (j ? ",y" : "y") + std::to_string(j);
    }
    out += "\n";
    for (const auto &row : joint.table()) {
        for (size_t j = 0; j < row.size(); j++) {
            out += (j ? "," : "") + round_trip(row[j]);
        }
        out += "\n";
    }
    return out;
}

std::vector<std::vector<double>> parse_marginals(const std::string &text) {
    json doc = parse_json(text);
    if (doc.is_object()) {
        if (!doc.contains("rows")) {
            throw ParseError("marginals file needs a \"rows\" key");
        }
        return numeric_rows(doc["rows"], "rows");
    }
    return numeric_rows(doc, "rows");
}

std::string read_input(const std::string &path, std::istream &in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ParseError("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

}  // namespace qeci::cli

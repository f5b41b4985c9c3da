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

#include "qeci/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qeci/classical_map.h"
#include "qeci/cli/file_io.h"
#include "qeci/coupling.h"
#include "qeci/error.h"

namespace qeci::cli {

namespace {

constexpr const char *kTolEnv = "QECI_TOL";

std::string fixed(double x, int digits) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

std::string short_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

bool parse_tolerance(const char *text, double &out) {
    if (text == nullptr) {
        return false;
    }
    char *end = nullptr;
    double value = std::strtod(text, &end);
    if (end == text || *end != '\0' || !(value > 0) || !std::isfinite(value)) {
        return false;
    }
    out = value;
    return true;
}

void report_warnings(const std::vector<std::string> &warnings, std::ostream &err) {
    for (const auto &w : warnings) {
        err << "warning: " << w << "\n";
    }
}

/// Validates at the caller's tolerance, then removes the admitted trace and
/// hermiticity slack so downstream checks at the default tolerance hold.
DensityMatrix load_density(const DensityFile &file, double tol) {
    DensityMatrix checked = validate_density(file.matrix, file.dims, tol);
    ComplexMatrix m = checked.mat();
    m = 0.5 * (m + dagger(m));
    m *= 1.0 / m.trace().real();
    return validate_density(m, file.dims, tol);
}

int infer_command(const std::string &input, double tol, bool as_json, std::istream &in, std::ostream &out,
                  std::ostream &err) {
    std::string text = read_input(input, in);
    CausalVerdict verdict;
    bool classical = detect_input_kind(text) == InputKind::Table;
    if (classical) {
        verdict = classical_eci(JointDistribution(parse_table(text)), tol);
    } else {
        DensityFile file = parse_density_file(text);
        if (file.dims.size() != 2) {
            throw ParseError("infer needs exactly two subsystem dims, got " + std::to_string(file.dims.size()));
        }
        verdict = qeci_infer(load_density(file, tol), tol);
    }
    report_warnings(verdict.warnings, err);
    out << (as_json ? format_verdict_json(verdict, classical) : format_verdict(verdict, classical));
    return kExitOk;
}

int coupling_command(const std::string &input, std::istream &in, std::ostream &out) {
    MarginalSet marginals(parse_marginals(read_input(input, in)));
    if (marginals.num_rows() < 2) {
        throw QeciError(ErrorKind::InvalidMarginals, "need at least two rows");
    }
    CouplingResult result = greedy_min_entropy_coupling(marginals);
    for (const auto &placement : result.placements) {
        out << "placement (";
        for (size_t k = 0; k < placement.coords.size(); k++) {
            out << (k ? "," : "") << placement.coords[k];
        }
        out << ") mass " << fixed(placement.mass, 4) << "\n";
    }
    out << "entropy " << fixed(result.entropy_bits, 4) << "\n";
    return kExitOk;
}

int map_classical_command(const std::string &input, const std::string &mode, double tol, std::istream &in,
                          std::ostream &out, std::ostream &err) {
    std::string text = read_input(input, in);
    if (mode == "embed") {
        DensityMatrix rho = diag_embed(JointDistribution(parse_table(text)));
        out << format_density_file(rho.mat(), rho.dims());
        return kExitOk;
    }
    DensityFile file = parse_density_file(text);
    if (file.dims.size() != 2) {
        throw ParseError("rotate needs exactly two subsystem dims");
    }
    std::vector<std::string> warnings;
    JointDistribution table = rotate_to_classical(load_density(file, tol), &warnings);
    report_warnings(warnings, err);
    out << format_table_csv(table);
    return kExitOk;
}

int sweep_command(SweepConfig config, const std::string &out_path, std::ostream &out, std::ostream &err) {
    if (config.steps == 0) {
        throw ParseError("--steps must be at least 1");
    }
    for (double p : {config.p_start, config.p_end}) {
        if (!(p >= 0 && p <= 1)) {
            throw ParseError("p range must lie in [0, 1]");
        }
    }
    if (!(config.channel.q >= 0 && config.channel.q <= 1)) {
        throw ParseError("--q must lie in [0, 1]");
    }
    if (config.channel.kind == ChannelKind::Depolarizing) {
        for (auto c : {config.channel.c1, config.channel.c2}) {
            if (std::abs(c.gamma * c.gamma + c.lambda * c.lambda - 1) > 1e-9) {
                throw ParseError("gamma^2 + lambda^2 must equal 1");
            }
        }
    }

    std::vector<SweepRow> rows = run_sweep(config);
    for (const auto &row : rows) {
        if (row.p == 0 || row.p == 1) {
            err << "note: p = " << short_g(row.p)
                << " is a symmetric endpoint; the causal direction is not identifiable there\n";
        }
    }
    std::string csv = format_sweep_csv(rows);
    if (out_path.empty() || out_path == "-") {
        out << csv;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw ParseError("cannot write '" + out_path + "'");
        }
        file << csv;
    }
    return kExitOk;
}

}  // namespace

double default_tolerance() {
    double tol = kDensityTol;
    parse_tolerance(std::getenv(kTolEnv), tol);
    return tol;
}

std::vector<double> sweep_grid(double p_start, double p_end, size_t steps) {
    std::vector<double> grid;
    if (steps == 0) {
        return grid;
    }
    if (steps == 1) {
        return {p_start};
    }
    for (size_t k = 0; k < steps; k++) {
        // Index-based so grid values do not accumulate rounding drift.
        double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        grid.push_back(k + 1 == steps ? p_end : p_start + (p_end - p_start) * t);
    }
    return grid;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    std::vector<double> grid = sweep_grid(config.p_start, config.p_end, config.steps);
    std::vector<SweepRow> rows(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < grid.size(); k = next++) {
            SweepRow &row = rows[k];
            row.p = grid[k];
            try {
                CausalVerdict verdict = qeci_infer(config.channel.joint(row.p), config.tie_tol);
                row.s_forward = verdict.s_forward;
                row.s_backward = verdict.s_backward;
                row.delta = verdict.s_backward - verdict.s_forward;
                row.direction = direction_name(verdict.direction);
            } catch (const QeciError &) {
                row.s_forward = row.s_backward = row.delta = std::numeric_limits<double>::quiet_NaN();
                row.direction = "error";
            }
        }
    };
    size_t workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), grid.size());
    std::vector<std::thread> pool;
    for (size_t k = 1; k < workers; k++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "p,s_forward,s_backward,delta,direction\n";
    for (const auto &row : rows) {
        out += short_g(row.p) + "," + fixed(row.s_forward, 8) + "," + fixed(row.s_backward, 8) + "," +
               fixed(row.delta, 8) + "," + row.direction + "\n";
    }
    return out;
}

std::string format_verdict(const CausalVerdict &verdict, bool classical) {
    const char *h = classical ? "H" : "S";
    std::string out = std::string(direction_name(verdict.direction)) + "  " + h + "(A->B)=" +
                      fixed(verdict.s_forward, 4) + "  " + h + "(A<-B)=" + fixed(verdict.s_backward, 4) + "\n";
    if (classical) {
        out += "  H(A)=" + fixed(verdict.s_cause_fwd, 4) + "  H(E)=" + fixed(verdict.s_exo_fwd, 4) +
               "  H(B)=" + fixed(verdict.s_cause_bwd, 4) + "  H(E')=" + fixed(verdict.s_exo_bwd, 4) + "\n";
    } else {
        out += "  S(rho_A)=" + fixed(verdict.s_cause_fwd, 4) + "  S(rho_E)=" + fixed(verdict.s_exo_fwd, 4) +
               "  S(rho_B)=" + fixed(verdict.s_cause_bwd, 4) + "  S(rho_E')=" + fixed(verdict.s_exo_bwd, 4) + "\n";
    }
    return out;
}

std::string format_verdict_json(const CausalVerdict &verdict, bool classical) {
    nlohmann::ordered_json doc;
    doc["mode"] = classical ? "classical" : "quantum";
    doc["direction"] = direction_name(verdict.direction);
    doc["s_forward"] = verdict.s_forward;
    doc["s_backward"] = verdict.s_backward;
    doc["s_cause_fwd"] = verdict.s_cause_fwd;
    doc["s_exo_fwd"] = verdict.s_exo_fwd;
    doc["s_cause_bwd"] = verdict.s_cause_bwd;
    doc["s_exo_bwd"] = verdict.s_exo_bwd;
    doc["warnings"] = verdict.warnings;
    return doc.dump() + "\n";
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    const char *env_tol = std::getenv(kTolEnv);
    double tol = kDensityTol;
    if (env_tol != nullptr && !parse_tolerance(env_tol, tol)) {
        err << "error: " << kTolEnv << "='" << env_tol << "' is not a positive number\n";
        return kExitParseError;
    }

    CLI::App app{"Quantum entropic causal inference on joint density matrices."};
    app.name("qeci");
    app.require_subcommand(1);

    std::string infer_input;
    bool infer_json = false;
    auto *infer = app.add_subcommand("infer", "Infer the causal direction of a density file (or joint table).");
    infer->add_option("--input", infer_input, "Density file, CSV/JSON joint table, or - for stdin")->required();
    infer->add_option("--tol", tol, "Validation and tie tolerance");
    infer->add_flag("--json", infer_json, "Emit a single-line JSON record");

    SweepConfig sweep_config;
    sweep_config.tie_tol = tol;
    std::string channel_name;
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "Sweep a channel's error probability and write CSV.");
    sweep->add_option("--channel", channel_name, "qsc | gqsc | depolarizing | bitflip")
        ->required()
        ->check(CLI::IsMember({"qsc", "gqsc", "depolarizing", "bitflip"}));
    sweep->add_option("--q", sweep_config.channel.q, "Source mixing probability");
    sweep->add_option("--p-start", sweep_config.p_start);
    sweep->add_option("--p-end", sweep_config.p_end);
    sweep->add_option("--steps", sweep_config.steps, "Number of grid points, endpoints included");
    sweep->add_option("--gamma1", sweep_config.channel.c1.gamma);
    sweep->add_option("--lambda1", sweep_config.channel.c1.lambda);
    sweep->add_option("--gamma2", sweep_config.channel.c2.gamma);
    sweep->add_option("--lambda2", sweep_config.channel.c2.lambda);
    sweep->add_option("--out", sweep_out, "CSV destination (default stdout)");

    std::string marginals_input;
    auto *coupling = app.add_subcommand("coupling", "Greedy minimum-entropy coupling of probability rows.");
    coupling->add_option("--marginals", marginals_input, "JSON rows file, or - for stdin")->required();

    std::string map_input;
    std::string map_mode;
    auto *map = app.add_subcommand("map-classical", "Convert between density files and joint tables.");
    map->add_option("--input", map_input)->required();
    map->add_option("--mode", map_mode)->required()->check(CLI::IsMember({"rotate", "embed"}));

    std::string example = "worked-example";
    auto *demo = app.add_subcommand("demo", "Print the step-by-step trace of a worked example.");
    demo->add_option("example", example)->check(CLI::IsMember({"worked-example"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (*infer) {
            return infer_command(infer_input, tol, infer_json, in, out, err);
        }
        if (*sweep) {
            sweep_config.channel.kind = parse_channel_kind(channel_name);
            return sweep_command(sweep_config, sweep_out, out, err);
        }
        if (*coupling) {
            return coupling_command(marginals_input, in, out);
        }
        if (*map) {
            return map_classical_command(map_input, map_mode, tol, in, out, err);
        }
        if (*demo) {
            for (const auto &line : worked_example_trace()) {
                out << line << "\n";
            }
            return kExitOk;
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const QeciError &e) {
        err << "error: " << e.what() << "\n";
        return is_invariant_violation(e.kind()) ? kExitInvariantViolation : kExitNumericFailure;
    }
    return kExitParseError;
}

}  // namespace qeci::cli

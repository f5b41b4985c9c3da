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

#ifndef QECI_CLI_COMMANDS_H
#define QECI_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "qeci/causal.h"
#include "qeci/channels.h"

namespace qeci::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitParseError = 2,
    kExitInvariantViolation = 3,
    kExitNumericFailure = 4,
};

/// 1e-9 unless the QECI_TOL environment variable holds a positive number.
double default_tolerance();

struct SweepConfig {
    ChannelSpec channel;
    double p_start = 0.05;
    double p_end = 0.95;
    size_t steps = 19;
    double tie_tol = kDefaultTieTol;
};

struct SweepRow {
    double p = 0;
    double s_forward = 0;
    double s_backward = 0;
    /// s_backward - s_forward.
    double delta = 0;
    /// "A->B", "B->A", "Tie" or "error".
    std::string direction;
};

/// `steps` evenly spaced points, endpoints included; one point means p_start.
std::vector<double> sweep_grid(double p_start, double p_end, size_t steps);

/// Evaluates every grid point (concurrently); rows come back ordered by p.
/// A point whose evaluation throws becomes a row with direction "error".
std::vector<SweepRow> run_sweep(const SweepConfig &config);

/// Header `p,s_forward,s_backward,delta,direction`, one line per row.
std::string format_sweep_csv(const std::vector<SweepRow> &rows);

/// "A->B  S(A->B)=1.2573  S(A<-B)=1.4270" plus a line of component entropies.
std::string format_verdict(const CausalVerdict &verdict, bool classical = false);
/// Single-line JSON record with full-precision entropies.
std::string format_verdict_json(const CausalVerdict &verdict, bool classical = false);

/// Trace of the inference on qsc_computational(0.4, 0.05): a line showing
/// the input, then one line per numbered step 1..25 ("step N: ...").
std::vector<std::string> worked_example_trace();

/// Entry point shared by the `qeci` binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace qeci::cli

#endif

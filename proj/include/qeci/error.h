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

#ifndef QECI_ERROR_H
#define QECI_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeci {

enum class ErrorKind {
    DimensionMismatch,
    NotHermitian,
    NotPSD,
    TraceNotOne,
    NotNormalized,
    ZeroProbabilityCondition,
    NoConvergence,
    InvalidMarginals,
    InvalidDistribution,
    InvalidParameter,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto exit codes without parsing messages.
class QeciError : public std::runtime_error {
   public:
    QeciError(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// True for kinds that describe a violated data invariant rather than a
/// numerical breakdown.
bool is_invariant_violation(ErrorKind kind);

}  // namespace qeci

#endif

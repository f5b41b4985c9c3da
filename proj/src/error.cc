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

#include "qeci/error.h"

namespace qeci {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::TraceNotOne:
            return "TraceNotOne";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::ZeroProbabilityCondition:
            return "ZeroProbabilityCondition";
        case ErrorKind::NoConvergence:
            return "NoConvergence";
        case ErrorKind::InvalidMarginals:
            return "InvalidMarginals";
        case ErrorKind::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorKind::InvalidParameter:
            return "InvalidParameter";
    }
    return "Unknown";
}

QeciError::QeciError(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

bool is_invariant_violation(ErrorKind kind) {
    return kind != ErrorKind::NoConvergence;
}

}  // namespace qeci

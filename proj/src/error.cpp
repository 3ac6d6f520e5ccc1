// Copyright 2026 The gnl Authors
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

#include "gnl/error.hpp"

namespace gnl {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IncompatibleOrder:
            return "incompatible-order";
        case ErrorKind::IndexOutOfRange:
            return "index-out-of-range";
        case ErrorKind::ZeroVector:
            return "zero-vector";
        case ErrorKind::DimensionMismatch:
            return "dimension-mismatch";
        case ErrorKind::InvalidPartition:
            return "invalid-partition";
        case ErrorKind::NotStrippable:
            return "not-strippable";
        case ErrorKind::Inadmissible:
            return "inadmissible-dims";
        case ErrorKind::ConstructionDrift:
            return "construction-drift";
        case ErrorKind::NonOrthogonal:
            return "non-orthogonal";
        case ErrorKind::Parse:
            return "parse-error";
        case ErrorKind::Io:
            return "io-error";
        case ErrorKind::Internal:
            return "internal-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace gnl

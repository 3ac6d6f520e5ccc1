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

#ifndef GNL_ERROR_HPP
#define GNL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gnl {

enum class ErrorKind {
    IncompatibleOrder,
    IndexOutOfRange,
    ZeroVector,
    DimensionMismatch,
    InvalidPartition,
    NotStrippable,
    Inadmissible,
    ConstructionDrift,
    NonOrthogonal,
    Parse,
    Io,
    Internal,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace gnl

#endif

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

#ifndef GNL_DETAIL_FIELD_OPS_HPP
#define GNL_DETAIL_FIELD_OPS_HPP

#include "gnl/cyclotomic.hpp"

namespace gnl::detail {

/// Product of the nontrivial Galois conjugates of a nonzero element. Its
/// product with the element is the (rational) field norm.
struct NormAdjoint {
    Cyclotomic adjoint;
    Rational norm;
};

NormAdjoint norm_adjoint(const Cyclotomic &a);

/// a / b for b != 0, computed as a * adjoint(b) / norm(b). Only ring
/// operations and one rational division are involved.
Cyclotomic exact_quotient(const Cyclotomic &a, const Cyclotomic &b);
Cyclotomic exact_quotient(const Cyclotomic &a, const NormAdjoint &b);

}  // namespace gnl::detail

#endif

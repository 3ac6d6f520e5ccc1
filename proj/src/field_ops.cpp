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

#include "gnl/detail/field_ops.hpp"

#include <numeric>

#include "gnl/error.hpp"

namespace gnl::detail {

NormAdjoint norm_adjoint(const Cyclotomic &a) {
    if (a.is_zero()) {
        throw Error(ErrorKind::Internal, "norm-adjoint of zero");
    }
    int n = a.order();
    if (a.is_rational()) {
        return {Cyclotomic(n, Rational(1)), a.rational_value()};
    }
    Cyclotomic adjoint(n, Rational(1));
    for (int k = 2; k < n; k++) {
        if (std::gcd(k, n) == 1) {
            adjoint *= a.galois(k);
        }
    }
    Cyclotomic product = a * adjoint;
    if (!product.is_rational() || product.is_zero()) {
        throw Error(ErrorKind::Internal, "field norm of " + a.to_literal() + " is not a nonzero rational");
    }
    return {std::move(adjoint), product.rational_value()};
}

Cyclotomic exact_quotient(const Cyclotomic &a, const NormAdjoint &b) {
    Cyclotomic out = a * b.adjoint;
    out *= Rational(1) / b.norm;
    return out;
}

Cyclotomic exact_quotient(const Cyclotomic &a, const Cyclotomic &b) {
    return exact_quotient(a, norm_adjoint(b));
}

}  // namespace gnl::detail

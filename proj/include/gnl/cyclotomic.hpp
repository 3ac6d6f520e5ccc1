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

#ifndef GNL_CYCLOTOMIC_HPP
#define GNL_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gnl {

using Rational = mpq_class;

/// Euler's totient; equals the degree of the n-th cyclotomic polynomial.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed once per order and cached per thread.
const std::vector<long> &cyclotomic_polynomial(int n);

/**
 * An exact element of the cyclotomic field Q(zeta_N).
 *
 * The element is stored as a polynomial in zeta_N of degree < phi(N),
 * i.e. reduced modulo the N-th cyclotomic polynomial, with trailing zero
 * coefficients trimmed. That form is unique, so equality is coefficient-wise
 * and `is_zero` is a size check.
 *
 * Field division is intentionally absent from the public surface.
 */
class Cyclotomic {
   public:
    Cyclotomic();
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const Rational &value);
    Cyclotomic(int order, long value);

    /// zeta_order^exponent, exponent taken modulo the order.
    static Cyclotomic zeta_power(int order, long long exponent);

    /// Builds sum_k raw[k] * zeta^k for arbitrary raw length and canonicalizes.
    static Cyclotomic from_coefficients(int order, std::vector<Rational> raw);

    /// Parses the `<rational>*w^<k>` sum format. Exponents must be < order.
    static Cyclotomic parse(std::string_view text, int order);

    int order() const noexcept {
        return order_;
    }
    const std::vector<Rational> &coeffs() const noexcept {
        return coeffs_;
    }
    Rational coefficient(size_t k) const;

    bool is_zero() const noexcept {
        return coeffs_.empty();
    }
    bool is_one() const;
    bool is_rational() const noexcept {
        return coeffs_.size() <= 1;
    }
    /// Value of a rational element; throws if the element is not rational.
    Rational rational_value() const;

    Cyclotomic conj() const;
    /// The Galois automorphism zeta -> zeta^k; k must be coprime to the order.
    Cyclotomic galois(long long k) const;
    /// Same field element expressed in Q(zeta_{new_order}); order must divide new_order.
    Cyclotomic lift(int new_order) const;

    std::complex<double> to_complex() const;
    std::string to_literal() const;

    Cyclotomic operator-() const;
    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Rational &scale);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        return a += b;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
        return a -= b;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational &b) {
        return a *= b;
    }

    /// Field equality. Elements of different ambient orders compare equal
    /// when they denote the same complex number.
    bool operator==(const Cyclotomic &other) const;
    bool operator!=(const Cyclotomic &other) const {
        return !(*this == other);
    }

   private:
    void require_same_order(const Cyclotomic &other, const char *op) const;
    void canonicalize();

    int order_;
    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &out, const Cyclotomic &value);

enum class ArithOp { Add, Sub, Mul };

/// omega_d^s = zeta_N^{(N/d) s}; d must divide N.
Cyclotomic root_of_unity(int d, long long s, int ambient);
Cyclotomic arith(const Cyclotomic &a, const Cyclotomic &b, ArithOp op);
bool is_zero(const Cyclotomic &a);
Cyclotomic order_lift(const Cyclotomic &a, int target_order);
std::complex<double> to_complex(const Cyclotomic &a);

}  // namespace gnl

#endif

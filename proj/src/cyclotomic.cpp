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

#include "gnl/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>

#include "gnl/error.hpp"

namespace gnl {

namespace {

// Quotient of integer polynomials by a monic divisor; the division must be exact.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long> &den) {
    size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t d = num.size(); d-- > dn;) {
        long c = num[d];
        q[d - dn] = c;
        if (c != 0) {
            for (size_t i = 0; i <= dn; i++) {
                num[d - dn + i] -= c * den[i];
            }
        }
    }
    for (long r : num) {
        if (r != 0) {
            throw Error(ErrorKind::Internal, "cyclotomic polynomial division left a remainder");
        }
    }
    return q;
}

void check_order(int order) {
    if (order < 1) {
        throw Error(ErrorKind::IncompatibleOrder, "cyclotomic order must be positive, got " + std::to_string(order));
    }
}

long long floor_mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

const std::vector<long> &cyclotomic_polynomial(int n) {
    thread_local std::map<int, std::vector<long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    check_order(n);
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; d++) {
        if (n % d == 0) {
            poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
        }
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1) {
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
    check_order(order);
}

Cyclotomic::Cyclotomic(int order, const Rational &value) : order_(order) {
    check_order(order);
    if (value != 0) {
        coeffs_.push_back(value);
    }
}

Cyclotomic::Cyclotomic(int order, long value) : Cyclotomic(order, Rational(value)) {
}

Cyclotomic Cyclotomic::zeta_power(int order, long long exponent) {
    check_order(order);
    std::vector<Rational> raw(static_cast<size_t>(floor_mod(exponent, order)) + 1);
    raw.back() = 1;
    return from_coefficients(order, std::move(raw));
}

Cyclotomic Cyclotomic::from_coefficients(int order, std::vector<Rational> raw) {
    Cyclotomic out(order);
    out.coeffs_ = std::move(raw);
    out.canonicalize();
    return out;
}

void Cyclotomic::canonicalize() {
    const auto &phi = cyclotomic_polynomial(order_);
    size_t deg = phi.size() - 1;
    Rational c;
    for (size_t d = coeffs_.size(); d-- > deg;) {
        if (coeffs_[d] == 0) {
            continue;
        }
        c = coeffs_[d];
        for (size_t i = 0; i < deg; i++) {
            if (phi[i] != 0) {
                coeffs_[d - deg + i] -= c * phi[i];
            }
        }
        coeffs_[d] = 0;
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Cyclotomic::coefficient(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

bool Cyclotomic::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) {
        throw Error(ErrorKind::Internal, "element " + to_literal() + " is not rational");
    }
    return coefficient(0);
}

Cyclotomic Cyclotomic::galois(long long k) const {
    if (std::gcd(floor_mod(k, order_), static_cast<long long>(order_)) != 1) {
        throw Error(ErrorKind::IncompatibleOrder, "galois exponent " + std::to_string(k) +
                                                      " is not a unit modulo " + std::to_string(order_));
    }
    if (coeffs_.empty()) {
        return *this;
    }
    std::vector<Rational> raw(order_);
    for (size_t e = 0; e < coeffs_.size(); e++) {
        if (coeffs_[e] != 0) {
            raw[floor_mod(static_cast<long long>(e) * k, order_)] += coeffs_[e];
        }
    }
    return from_coefficients(order_, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
    return galois(order_ - 1 == 0 ? 1 : order_ - 1);
}

Cyclotomic Cyclotomic::lift(int new_order) const {
    check_order(new_order);
    if (new_order % order_ != 0) {
        throw Error(ErrorKind::IncompatibleOrder,
                    "cannot lift order " + std::to_string(order_) + " to " + std::to_string(new_order));
    }
    if (new_order == order_) {
        return *this;
    }
    size_t step = static_cast<size_t>(new_order / order_);
    std::vector<Rational> raw(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * step + 1);
    for (size_t e = 0; e < coeffs_.size(); e++) {
        raw[e * step] = coeffs_[e];
    }
    return from_coefficients(new_order, std::move(raw));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> total(0.0, 0.0);
    for (size_t k = 0; k < coeffs_.size(); k++) {
        if (coeffs_[k] != 0) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
            total += coeffs_[k].get_d() * std::polar(1.0, angle);
        }
    }
    return total;
}

std::string Cyclotomic::to_literal() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); k++) {
        const Rational &c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        std::string magnitude = Rational(abs(c)).get_str();
        if (out.empty()) {
            out = c < 0 ? "-" + magnitude : magnitude;
        } else {
            out += c < 0 ? " - " : " + ";
            out += magnitude;
        }
        if (k > 0) {
            out += "*w^" + std::to_string(k);
        }
    }
    return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, int order) {
    check_order(order);
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    auto fail = [&](const std::string &why) {
        return Error(ErrorKind::Parse, "bad cyclotomic literal '" + std::string(text) + "': " + why);
    };
    if (s.empty()) {
        throw fail("empty");
    }
    std::vector<Rational> raw(order);
    size_t pos = 0;
    auto read_digits = [&]() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            pos++;
        }
        return s.substr(start, pos - start);
    };
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            pos++;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        std::string num = read_digits();
        if (!num.empty()) {
            have_coeff = true;
            std::string den = "1";
            if (pos < s.size() && s[pos] == '/') {
                pos++;
                den = read_digits();
                if (den.empty()) {
                    throw fail("missing denominator");
                }
            }
            coeff = Rational(mpz_class(num), mpz_class(den));
            if (coeff.get_den() == 0) {
                throw fail("zero denominator");
            }
            coeff.canonicalize();
        }
        long long exponent = 0;
        bool have_w = false;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_coeff) {
                throw fail("dangling '*'");
            }
            pos++;
            if (pos >= s.size() || s[pos] != 'w') {
                throw fail("expected 'w' after '*'");
            }
        }
        if (pos < s.size() && s[pos] == 'w') {
            have_w = true;
            pos++;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                pos++;
                std::string e = read_digits();
                if (e.empty() || e.size() > 9) {
                    throw fail("bad exponent");
                }
                exponent = std::stoll(e);
            }
        }
        if (!have_coeff && !have_w) {
            throw fail("expected a term at offset " + std::to_string(pos));
        }
        if (exponent >= order) {
            throw fail("exponent " + std::to_string(exponent) + " is not below the ambient order " +
                       std::to_string(order));
        }
        raw[exponent] += sign * coeff;
    }
    return from_coefficients(order, std::move(raw));
}

void Cyclotomic::require_same_order(const Cyclotomic &other, const char *op) const {
    if (order_ != other.order_) {
        throw Error(ErrorKind::IncompatibleOrder, std::string(op) + " of elements with orders " +
                                                      std::to_string(order_) + " and " +
                                                      std::to_string(other.order_));
    }
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    require_same_order(other, "addition");
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (size_t k = 0; k < other.coeffs_.size(); k++) {
        coeffs_[k] += other.coeffs_[k];
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
    require_same_order(other, "subtraction");
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (size_t k = 0; k < other.coeffs_.size(); k++) {
        coeffs_[k] -= other.coeffs_[k];
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    return *this;
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    a.require_same_order(b, "multiplication");
    Cyclotomic out(a.order_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return out;
    }
    if (a.coeffs_.size() == 1) {
        out = b;
        return out *= a.coeffs_[0];
    }
    if (b.coeffs_.size() == 1) {
        out = a;
        return out *= b.coeffs_[0];
    }
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); i++) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < b.coeffs_.size(); j++) {
            if (b.coeffs_[j] != 0) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    out.canonicalize();
    return out;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other) {
    *this = *this * other;
    return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Rational &scale) {
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &c : coeffs_) {
        c *= scale;
    }
    return *this;
}

bool Cyclotomic::operator==(const Cyclotomic &other) const {
    if (order_ == other.order_) {
        return coeffs_ == other.coeffs_;
    }
    int common = std::lcm(order_, other.order_);
    return lift(common).coeffs_ == other.lift(common).coeffs_;
}

std::ostream &operator<<(std::ostream &out, const Cyclotomic &value) {
    return out << value.to_literal() << " (N=" << value.order() << ")";
}

Cyclotomic root_of_unity(int d, long long s, int ambient) {
    check_order(ambient);
    if (d < 1 || ambient % d != 0) {
        throw Error(ErrorKind::IncompatibleOrder,
                    "root order " + std::to_string(d) + " does not divide ambient order " + std::to_string(ambient));
    }
    return Cyclotomic::zeta_power(ambient, floor_mod(static_cast<long long>(ambient / d) * floor_mod(s, d), ambient));
}

Cyclotomic arith(const Cyclotomic &a, const Cyclotomic &b, ArithOp op) {
    switch (op) {
        case ArithOp::Add:
            return a + b;
        case ArithOp::Sub:
            return a - b;
        case ArithOp::Mul:
            return a * b;
    }
    throw Error(ErrorKind::Internal, "unknown arithmetic op");
}

bool is_zero(const Cyclotomic &a) {
    return a.is_zero();
}

Cyclotomic order_lift(const Cyclotomic &a, int target_order) {
    return a.lift(target_order);
}

std::complex<double> to_complex(const Cyclotomic &a) {
    return a.to_complex();
}

}  // namespace gnl

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

#ifndef GNL_MATRIX_HPP
#define GNL_MATRIX_HPP

#include <complex>
#include <vector>

#include "gnl/cyclotomic.hpp"

namespace gnl {

/// Dense row-major matrix over Q(zeta_N).
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols, int order);
    static Matrix identity(int dim, int order);
    /// Reshapes a length rows*cols vector, row-major.
    static Matrix from_flat(int rows, int cols, std::vector<Cyclotomic> flat);

    int rows() const noexcept {
        return rows_;
    }
    int cols() const noexcept {
        return cols_;
    }
    int order() const noexcept {
        return order_;
    }
    Cyclotomic &operator()(int r, int c) {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    const Cyclotomic &operator()(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    const std::vector<Cyclotomic> &flat() const noexcept {
        return data_;
    }

    Matrix adjoint() const;
    Matrix lift(int order) const;
    bool is_hermitian() const;
    /// True for lambda * I, including the zero matrix.
    bool is_scalar() const;
    bool is_zero() const;
    std::vector<std::vector<std::complex<double>>> to_complex() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(const Cyclotomic &scale);
    Matrix &operator*=(const Rational &scale);
    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator*(Matrix a, const Cyclotomic &s) {
        return a *= s;
    }
    friend Matrix operator*(Matrix a, const Rational &s) {
        return a *= s;
    }
    bool operator==(const Matrix &other) const = default;

   private:
    int rows_ = 0;
    int cols_ = 0;
    int order_ = 1;
    std::vector<Cyclotomic> data_;
};

struct NullspaceResult {
    int rank = 0;
    std::vector<int> pivot_columns;
    /// Index (into the input rows) of the row that supplied each pivot.
    std::vector<size_t> pivot_rows;
    /// One vector per non-pivot column, with a 1 in that column.
    std::vector<std::vector<Cyclotomic>> basis;
};

/**
 * Exact nullspace of a row system over Q(zeta_N) by fraction-free (Bareiss)
 * elimination.
 *
 * Rows are either empty (identically zero) or of length `cols`. The pivot in
 * each column is the row with the fewest nonzero entries, ties broken by input
 * position, so the result is deterministic. Division only ever happens by the
 * previous pivot, computed through its Galois norm.
 */
NullspaceResult bareiss_nullspace(const std::vector<std::vector<Cyclotomic>> &rows, int cols, int order);

}  // namespace gnl

#endif

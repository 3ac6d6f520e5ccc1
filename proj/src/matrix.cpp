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

#include "gnl/matrix.hpp"

#include <algorithm>

#include "gnl/detail/field_ops.hpp"
#include "gnl/error.hpp"

namespace gnl {

Matrix::Matrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(static_cast<size_t>(rows) * cols, Cyclotomic(order)) {
}

Matrix Matrix::identity(int dim, int order) {
    Matrix m(dim, dim, order);
    for (int k = 0; k < dim; k++) {
        m(k, k) = Cyclotomic(order, 1L);
    }
    return m;
}

Matrix Matrix::from_flat(int rows, int cols, std::vector<Cyclotomic> flat) {
    if (flat.size() != static_cast<size_t>(rows) * cols) {
        throw Error(ErrorKind::DimensionMismatch, "flat matrix data has the wrong length");
    }
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.order_ = flat.empty() ? 1 : flat.front().order();
    m.data_ = std::move(flat);
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_, order_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

Matrix Matrix::lift(int order) const {
    Matrix out(rows_, cols_, order);
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = data_[k].lift(order);
    }
    return out;
}

bool Matrix::is_hermitian() const {
    return rows_ == cols_ && *this == adjoint();
}

bool Matrix::is_scalar() const {
    if (rows_ != cols_) {
        return false;
    }
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            if (r != c && !(*this)(r, c).is_zero()) {
                return false;
            }
        }
        if ((*this)(r, r) != (*this)(0, 0)) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Cyclotomic &x) { return x.is_zero(); });
}

std::vector<std::vector<std::complex<double>>> Matrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out[r][c] = (*this)(r, c).to_complex();
        }
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(const Cyclotomic &scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

Matrix &Matrix::operator*=(const Rational &scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

namespace {

struct WorkRow {
    size_t origin;
    std::vector<Cyclotomic> v;
    size_t nonzeros = 0;

    void count() {
        nonzeros = static_cast<size_t>(std::count_if(v.begin(), v.end(), [](const Cyclotomic &x) { return !x.is_zero(); }));
    }
};

}  // namespace

NullspaceResult bareiss_nullspace(const std::vector<std::vector<Cyclotomic>> &rows, int cols, int order) {
    std::vector<WorkRow> work;
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].empty()) {
            continue;
        }
        if (static_cast<int>(rows[i].size()) != cols) {
            throw Error(ErrorKind::DimensionMismatch, "constraint row has the wrong length");
        }
        WorkRow w{i, rows[i]};
        w.count();
        if (w.nonzeros > 0) {
            work.push_back(std::move(w));
        }
    }

    NullspaceResult result;
    detail::NormAdjoint previous{Cyclotomic(order, 1L), Rational(1)};
    bool previous_is_one = true;
    size_t r = 0;
    for (int c = 0; c < cols && r < work.size(); c++) {
        size_t best = work.size();
        for (size_t i = r; i < work.size(); i++) {
            if (work[i].v[c].is_zero()) {
                continue;
            }
            if (best == work.size() || work[i].nonzeros < work[best].nonzeros ||
                (work[i].nonzeros == work[best].nonzeros && work[i].origin < work[best].origin)) {
                best = i;
            }
        }
        if (best == work.size()) {
            continue;
        }
        std::swap(work[r], work[best]);
        const WorkRow &pivot_row = work[r];
        const Cyclotomic pivot = pivot_row.v[c];

        for (size_t i = r + 1; i < work.size(); i++) {
            auto &v = work[i].v;
            Cyclotomic factor = v[c];
            for (int j = c + 1; j < cols; j++) {
                bool own = !v[j].is_zero();
                bool cross = !factor.is_zero() && !pivot_row.v[j].is_zero();
                if (!own && !cross) {
                    continue;
                }
                Cyclotomic updated = own ? pivot * v[j] : Cyclotomic(order);
                if (cross) {
                    updated -= factor * pivot_row.v[j];
                }
                v[j] = previous_is_one ? std::move(updated) : detail::exact_quotient(updated, previous);
            }
            v[c] = Cyclotomic(order);
            work[i].count();
        }
        // Rows reduced to zero carry no further information.
        work.erase(std::remove_if(work.begin() + static_cast<std::ptrdiff_t>(r) + 1, work.end(),
                                  [](const WorkRow &w) { return w.nonzeros == 0; }),
                   work.end());

        result.pivot_columns.push_back(c);
        result.pivot_rows.push_back(work[r].origin);
        previous = detail::norm_adjoint(pivot);
        previous_is_one = pivot.is_one();
        r++;
    }
    result.rank = static_cast<int>(r);

    std::vector<detail::NormAdjoint> pivots;
    pivots.reserve(r);
    for (size_t k = 0; k < r; k++) {
        pivots.push_back(detail::norm_adjoint(work[k].v[result.pivot_columns[k]]));
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : result.pivot_columns) {
        is_pivot[c] = true;
    }
    for (int f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Cyclotomic> x(cols, Cyclotomic(order));
        x[f] = Cyclotomic(order, 1L);
        for (size_t k = r; k-- > 0;) {
            int pc = result.pivot_columns[k];
            Cyclotomic sum(order);
            for (int j = pc + 1; j < cols; j++) {
                if (!work[k].v[j].is_zero() && !x[j].is_zero()) {
                    sum += work[k].v[j] * x[j];
                }
            }
            if (!sum.is_zero()) {
                x[pc] = -detail::exact_quotient(sum, pivots[k]);
            }
        }
        result.basis.push_back(std::move(x));
    }
    return result;
}

}  // namespace gnl

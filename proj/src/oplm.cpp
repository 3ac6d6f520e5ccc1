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

#include "gnl/oplm.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <set>

#include "gnl/error.hpp"

namespace gnl {

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_hermitian()) {
        throw Error(ErrorKind::Internal, "operator is not Hermitian");
    }
}

bool ConstraintRow::is_zero() const {
    for (const auto &c : coefficients) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

const ConstraintRow &ConstraintSystem::row(size_t first, size_t second) const {
    size_t n = labels.size();
    if (first >= n || second >= n || first == second) {
        throw Error(ErrorKind::IndexOutOfRange, "no constraint row for pair (" + std::to_string(first) + ", " +
                                                    std::to_string(second) + ")");
    }
    return rows[first * (n - 1) + (second < first ? second : second - 1)];
}

namespace {

void check_group(const StateSet &set, const std::vector<int> &group) {
    if (group.empty()) {
        throw Error(ErrorKind::InvalidPartition, "party group is empty");
    }
    std::set<int> seen;
    for (int p : group) {
        if (p < 0 || p >= set.party_count() || !seen.insert(p).second) {
            throw Error(ErrorKind::InvalidPartition, "bad party group entry " + std::to_string(p));
        }
    }
}

}  // namespace

ConstraintSystem assemble(const StateSet &set, const std::vector<int> &party_group) {
    check_group(set, party_group);
    auto ortho = check_mutual_orthogonality(set);
    if (!ortho.orthogonal()) {
        const auto &v = ortho.violations.front();
        throw Error(ErrorKind::NonOrthogonal, "cannot assemble constraints: " + set[v.first].label + " and " +
                                                  set[v.second].label + " are not orthogonal");
    }
    const size_t n = set.size();
    const int order = set.ambient_order();
    std::vector<int> others;
    for (int p = 0; p < set.party_count(); p++) {
        if (std::find(party_group.begin(), party_group.end(), p) == party_group.end()) {
            others.push_back(p);
        }
    }

    std::vector<LocalFactor> grouped;
    std::vector<std::vector<Cyclotomic>> grouped_conj;
    grouped.reserve(n);
    for (const auto &st : set.states()) {
        LocalFactor f = st.factors[party_group.front()];
        for (size_t b = 1; b < party_group.size(); b++) {
            f = kron(f, st.factors[party_group[b]]);
        }
        std::vector<Cyclotomic> fc;
        fc.reserve(f.amplitudes.size());
        for (const auto &a : f.amplitudes) {
            fc.push_back(a.conj());
        }
        grouped.push_back(std::move(f));
        grouped_conj.push_back(std::move(fc));
    }
    const int dim = grouped.empty() ? 1 : grouped.front().dim;

    // Product of inner products on the parties outside the group.
    std::vector<std::vector<Cyclotomic>> rest(n, std::vector<Cyclotomic>(n, Cyclotomic(order)));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            Cyclotomic s(order, 1L);
            for (int p : others) {
                s *= factor_inner(set[i].factors[p], set[j].factors[p]);
                if (s.is_zero()) {
                    break;
                }
            }
            rest[j][i] = s.conj();
            rest[i][j] = std::move(s);
        }
    }

    ConstraintSystem cs;
    cs.party_group = party_group;
    cs.unknown_dim = dim;
    cs.order = order;
    for (const auto &st : set.states()) {
        cs.labels.push_back(st.label);
    }
    cs.rows.reserve(n * (n > 0 ? n - 1 : 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i == j) {
                continue;
            }
            ConstraintRow row{i, j, std::vector<Cyclotomic>(static_cast<size_t>(dim) * dim, Cyclotomic(order))};
            const Cyclotomic &s = rest[i][j];
            if (!s.is_zero()) {
                for (int r = 0; r < dim; r++) {
                    if (grouped_conj[i][r].is_zero()) {
                        continue;
                    }
                    Cyclotomic left = grouped_conj[i][r] * s;
                    for (int c = 0; c < dim; c++) {
                        if (!grouped[j].amplitudes[c].is_zero()) {
                            row.coefficients[static_cast<size_t>(r) * dim + c] = left * grouped[j].amplitudes[c];
                        }
                    }
                }
            }
            cs.rows.push_back(std::move(row));
        }
    }
    return cs;
}

bool satisfies(const ConstraintSystem &system, const Matrix &e) {
    if (e.rows() != system.unknown_dim || e.cols() != system.unknown_dim) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension does not match the constraint system");
    }
    int common = std::lcm(system.order, e.order());
    Matrix lifted = e.order() == common ? e : e.lift(common);
    for (const auto &row : system.rows) {
        Cyclotomic total(common);
        for (size_t k = 0; k < row.coefficients.size(); k++) {
            const auto &c = row.coefficients[k];
            const auto &x = lifted.flat()[k];
            if (c.is_zero() || x.is_zero()) {
                continue;
            }
            total += (c.order() == common ? c : c.lift(common)) * x;
        }
        if (!total.is_zero()) {
            return false;
        }
    }
    return true;
}

HermitianOperator witness(const ConstraintSystem &system, const std::vector<Matrix> &basis) {
    // Sparsest non-scalar basis element first; ties keep basis order.
    std::vector<const Matrix *> candidates;
    for (const auto &b : basis) {
        if (!b.is_scalar()) {
            candidates.push_back(&b);
        }
    }
    auto weight = [](const Matrix *m) {
        return std::count_if(m->flat().begin(), m->flat().end(), [](const Cyclotomic &x) { return !x.is_zero(); });
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Matrix *a, const Matrix *b) { return weight(a) < weight(b); });
    for (const Matrix *bp : candidates) {
        const Matrix &b = *bp;
        Matrix h = b + b.adjoint();
        if (!h.is_scalar()) {
            if (!satisfies(system, h)) {
                throw Error(ErrorKind::Internal, "B + B^dagger left the solution space");
            }
            return HermitianOperator(std::move(h));
        }
        // B + B^dagger is scalar, so the anti-Hermitian part carries the
        // non-scalar direction; rotate it by -i (needs 4 | order).
        int order = std::lcm(system.order, 4);
        Matrix k = (b - b.adjoint()).lift(order);
        k *= -root_of_unity(4, 1, order);
        if (k.is_scalar() || !satisfies(system, k)) {
            throw Error(ErrorKind::Internal, "solution space is not closed under adjoint");
        }
        return HermitianOperator(std::move(k));
    }
    throw Error(ErrorKind::Internal, "witness requested for a trivial solution space");
}

OplmReport solution_space(const ConstraintSystem &system) {
    const int d = system.unknown_dim;
    std::vector<std::vector<Cyclotomic>> rows;
    rows.reserve(system.rows.size());
    for (const auto &row : system.rows) {
        rows.push_back(row.is_zero() ? std::vector<Cyclotomic>{} : row.coefficients);
    }
    NullspaceResult ns = bareiss_nullspace(rows, d * d, system.order);

    OplmReport report;
    report.party_group = system.party_group;
    report.unknown_dim = d;
    report.solution_dim = static_cast<int>(ns.basis.size());
    for (auto &v : ns.basis) {
        report.basis.push_back(Matrix::from_flat(d, d, std::move(v)));
    }
    for (size_t k = 0; k < ns.pivot_columns.size(); k++) {
        const auto &row = system.rows[ns.pivot_rows[k]];
        report.trace.push_back({ns.pivot_columns[k] / d, ns.pivot_columns[k] % d, row.first, row.second});
    }
    if (report.solution_dim < 1) {
        throw Error(ErrorKind::Internal, "identity is missing from the solution space");
    }
    report.trivial = report.solution_dim == 1;
    if (!report.trivial) {
        report.witness = witness(system, report.basis);
    }
    return report;
}

OplmReport oplm_report(const StateSet &set, const std::vector<int> &party_group) {
    return solution_space(assemble(set, party_group));
}

Rational magnitude_upper_bound(const Cyclotomic &z) {
    if (z.is_zero()) {
        return Rational(0);
    }
    Rational triangle(0);
    for (const auto &c : z.coeffs()) {
        triangle += abs(c);
    }
    if (z.is_rational()) {
        return triangle;
    }
    // Round the float magnitude outward by a margin that dominates the
    // evaluation error of to_complex.
    Rational outward = Rational(std::abs(z.to_complex())) + triangle * Rational(1, 1000000000000L);
    outward.canonicalize();
    return outward < triangle ? outward : triangle;
}

Rational gershgorin_bound(const Matrix &m) {
    Rational best(0);
    for (int r = 0; r < m.rows(); r++) {
        Rational row(0);
        for (int c = 0; c < m.cols(); c++) {
            row += magnitude_upper_bound(m(r, c));
        }
        if (row > best) {
            best = row;
        }
    }
    return best;
}

PovmPair povm_from_witness(const HermitianOperator &h, const StateSet &set, const std::vector<int> &party_group) {
    ConstraintSystem cs = assemble(set, party_group);
    if (h.dim() != cs.unknown_dim) {
        throw Error(ErrorKind::DimensionMismatch, "witness dimension does not match the party group");
    }
    Rational epsilon = Rational(1) / (Rational(1) + gershgorin_bound(h.entries()));
    int order = h.entries().order();
    Matrix id = Matrix::identity(h.dim(), order);
    Matrix scaled = h.entries() * epsilon;
    PovmPair out{(id + scaled) * Rational(1, 2), (id - scaled) * Rational(1, 2), epsilon};
    if (!satisfies(cs, out.plus) || !satisfies(cs, out.minus) || !(out.plus + out.minus == id)) {
        throw Error(ErrorKind::Internal, "POVM built from the witness violates a constraint");
    }
    return out;
}

int float_solution_dim(const ConstraintSystem &system, double tol) {
    const int unknowns = system.unknown_dim * system.unknown_dim;
    std::vector<const ConstraintRow *> live;
    for (const auto &row : system.rows) {
        if (!row.is_zero()) {
            live.push_back(&row);
        }
    }
    if (live.empty()) {
        return unknowns;
    }
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(live.size()), unknowns);
    for (size_t i = 0; i < live.size(); i++) {
        for (int k = 0; k < unknowns; k++) {
            m(static_cast<Eigen::Index>(i), k) = live[i]->coefficients[k].to_complex();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &sigma = svd.singularValues();
    double top = sigma.size() ? sigma(0) : 0.0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); k++) {
        if (sigma(k) > tol * top) {
            rank++;
        }
    }
    return unknowns - rank;
}

}  // namespace gnl

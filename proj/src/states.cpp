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

#include "gnl/states.hpp"

#include <set>

#include "gnl/error.hpp"

namespace gnl {

int LocalFactor::order() const {
    return amplitudes.empty() ? 1 : amplitudes.front().order();
}

std::vector<int> LocalFactor::support() const {
    std::vector<int> out;
    for (int k = 0; k < dim; k++) {
        if (!amplitudes[k].is_zero()) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::string> default_party_names(int n) {
    std::vector<std::string> names;
    for (int k = 0; k < n; k++) {
        if (n <= 3) {
            names.push_back(std::string(1, static_cast<char>('A' + k)));
        } else {
            names.push_back("A" + std::to_string(k + 1));
        }
    }
    return names;
}

StateSet StateSet::create_unverified(std::vector<int> dims, int ambient_order, std::vector<ProductState> states,
                                     std::optional<Provenance> provenance) {
    StateSet s;
    s.dims_ = std::move(dims);
    s.ambient_order_ = ambient_order;
    s.states_ = std::move(states);
    s.provenance_ = std::move(provenance);
    s.party_names_ = default_party_names(static_cast<int>(s.dims_.size()));
    s.validate_structure();
    return s;
}

StateSet StateSet::create(std::vector<int> dims, int ambient_order, std::vector<ProductState> states,
                          std::optional<Provenance> provenance) {
    StateSet s = create_unverified(std::move(dims), ambient_order, std::move(states), std::move(provenance));
    auto report = check_mutual_orthogonality(s);
    if (!report.orthogonal()) {
        const auto &v = report.violations.front();
        throw Error(ErrorKind::NonOrthogonal, "states " + s.states_[v.first].label + " and " +
                                                  s.states_[v.second].label + " have inner product " +
                                                  v.value.to_literal());
    }
    return s;
}

void StateSet::validate_structure() const {
    if (dims_.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "a state set needs at least one party");
    }
    for (int d : dims_) {
        if (d < 2) {
            throw Error(ErrorKind::DimensionMismatch, "local dimensions must be at least 2, got " + std::to_string(d));
        }
    }
    if (ambient_order_ < 1) {
        throw Error(ErrorKind::IncompatibleOrder, "ambient order must be positive");
    }
    std::set<std::string> labels;
    for (const auto &st : states_) {
        if (!labels.insert(st.label).second) {
            throw Error(ErrorKind::InvalidPartition, "duplicate state label " + st.label);
        }
        if (st.factors.size() != dims_.size()) {
            throw Error(ErrorKind::DimensionMismatch, "state " + st.label + " has " + std::to_string(st.factors.size()) +
                                                          " factors for " + std::to_string(dims_.size()) + " parties");
        }
        for (size_t k = 0; k < dims_.size(); k++) {
            const auto &f = st.factors[k];
            if (f.dim != dims_[k] || static_cast<int>(f.amplitudes.size()) != f.dim) {
                throw Error(ErrorKind::DimensionMismatch,
                            "state " + st.label + " factor " + std::to_string(k) + " has the wrong dimension");
            }
            bool nonzero = false;
            for (const auto &a : f.amplitudes) {
                if (a.order() != ambient_order_) {
                    throw Error(ErrorKind::IncompatibleOrder,
                                "state " + st.label + " has an amplitude outside the ambient order");
                }
                nonzero = nonzero || !a.is_zero();
            }
            if (!nonzero) {
                throw Error(ErrorKind::ZeroVector, "state " + st.label + " factor " + std::to_string(k) + " is zero");
            }
        }
    }
}

std::optional<size_t> StateSet::find_label(const std::string &label) const {
    for (size_t i = 0; i < states_.size(); i++) {
        if (states_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

StateSet StateSet::subset(const std::vector<size_t> &indices) const {
    StateSet out = *this;
    out.provenance_.reset();
    out.states_.clear();
    for (size_t i : indices) {
        if (i >= states_.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "subset index " + std::to_string(i));
        }
        out.states_.push_back(states_[i]);
    }
    out.validate_structure();
    return out;
}

StateSet StateSet::with_party_names(std::vector<std::string> names) const {
    if (names.size() != dims_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "party name count does not match party count");
    }
    StateSet out = *this;
    out.party_names_ = std::move(names);
    return out;
}

StateSet StateSet::without_provenance() const {
    StateSet out = *this;
    out.provenance_.reset();
    return out;
}

LocalFactor build_factor(int dim, const std::vector<std::pair<int, Cyclotomic>> &terms) {
    if (dim < 1) {
        throw Error(ErrorKind::DimensionMismatch, "factor dimension must be positive");
    }
    if (terms.empty()) {
        throw Error(ErrorKind::ZeroVector, "factor with no terms");
    }
    int order = terms.front().second.order();
    LocalFactor f{dim, std::vector<Cyclotomic>(dim, Cyclotomic(order))};
    for (const auto &[index, coeff] : terms) {
        if (index < 0 || index >= dim) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "basis index " + std::to_string(index) + " outside dimension " + std::to_string(dim));
        }
        f.amplitudes[index] += coeff;
    }
    if (f.support().empty()) {
        throw Error(ErrorKind::ZeroVector, "factor amplitudes sum to the zero vector");
    }
    return f;
}

LocalFactor build_factor(int dim, int order, const std::vector<std::pair<int, long>> &terms) {
    std::vector<std::pair<int, Cyclotomic>> exact;
    exact.reserve(terms.size());
    for (const auto &[index, c] : terms) {
        exact.emplace_back(index, Cyclotomic(order, c));
    }
    return build_factor(dim, exact);
}

LocalFactor basis_ket(int dim, int index, int order) {
    return build_factor(dim, order, {{index, 1}});
}

LocalFactor uniform_ket(int dim, int lo, int hi, int order) {
    std::vector<std::pair<int, long>> terms;
    for (int k = lo; k <= hi; k++) {
        terms.emplace_back(k, 1);
    }
    return build_factor(dim, order, terms);
}

LocalFactor lift_factor(const LocalFactor &u, int order) {
    LocalFactor out{u.dim, {}};
    out.amplitudes.reserve(u.amplitudes.size());
    for (const auto &a : u.amplitudes) {
        out.amplitudes.push_back(a.lift(order));
    }
    return out;
}

LocalFactor kron(const LocalFactor &left, const LocalFactor &right) {
    LocalFactor out{left.dim * right.dim, {}};
    out.amplitudes.reserve(static_cast<size_t>(out.dim));
    for (const auto &a : left.amplitudes) {
        for (const auto &b : right.amplitudes) {
            out.amplitudes.push_back(a * b);
        }
    }
    return out;
}

Cyclotomic factor_inner(const LocalFactor &u, const LocalFactor &v) {
    if (u.dim != v.dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "inner product of dimensions " + std::to_string(u.dim) + " and " + std::to_string(v.dim));
    }
    Cyclotomic total(u.order());
    for (int k = 0; k < u.dim; k++) {
        if (!u.amplitudes[k].is_zero() && !v.amplitudes[k].is_zero()) {
            total += u.amplitudes[k].conj() * v.amplitudes[k];
        }
    }
    return total;
}

Cyclotomic product_inner(const ProductState &p, const ProductState &q) {
    if (p.factors.size() != q.factors.size()) {
        throw Error(ErrorKind::DimensionMismatch, "states " + p.label + " and " + q.label + " have different party counts");
    }
    Cyclotomic total(p.factors.empty() ? 1 : p.factors.front().order(), Rational(1));
    for (size_t k = 0; k < p.factors.size(); k++) {
        total *= factor_inner(p.factors[k], q.factors[k]);
        if (total.is_zero()) {
            break;
        }
    }
    return total;
}

bool proportional(const LocalFactor &u, const LocalFactor &v) {
    if (u.dim != v.dim) {
        return false;
    }
    int k0 = -1;
    for (int k = 0; k < u.dim; k++) {
        if (!u.amplitudes[k].is_zero()) {
            k0 = k;
            break;
        }
    }
    if (k0 < 0 || v.amplitudes[k0].is_zero()) {
        return false;
    }
    for (int k = 0; k < u.dim; k++) {
        if (v.amplitudes[k] * u.amplitudes[k0] != u.amplitudes[k] * v.amplitudes[k0]) {
            return false;
        }
    }
    return true;
}

OrthogonalityReport check_mutual_orthogonality(const StateSet &set) {
    OrthogonalityReport report;
    for (size_t i = 0; i < set.size(); i++) {
        for (size_t j = i + 1; j < set.size(); j++) {
            Cyclotomic v = product_inner(set[i], set[j]);
            if (!v.is_zero()) {
                report.violations.push_back({i, j, std::move(v)});
            }
        }
    }
    return report;
}

StateSet group_parties(const StateSet &set, const std::vector<std::vector<int>> &grouping) {
    int n = set.party_count();
    std::vector<int> seen(n, 0);
    for (const auto &block : grouping) {
        if (block.empty()) {
            throw Error(ErrorKind::InvalidPartition, "empty block in party grouping");
        }
        for (int p : block) {
            if (p < 0 || p >= n) {
                throw Error(ErrorKind::InvalidPartition, "party index " + std::to_string(p) + " out of range");
            }
            seen[p]++;
        }
    }
    for (int p = 0; p < n; p++) {
        if (seen[p] != 1) {
            throw Error(ErrorKind::InvalidPartition, "party " + std::to_string(p) + " must appear in exactly one block");
        }
    }
    std::vector<int> dims;
    std::vector<std::string> names;
    for (const auto &block : grouping) {
        int d = 1;
        std::string name;
        for (int p : block) {
            d *= set.dims()[p];
            name += set.party_names()[p];
        }
        dims.push_back(d);
        names.push_back(name);
    }
    std::vector<ProductState> states;
    states.reserve(set.size());
    for (const auto &st : set.states()) {
        ProductState out{st.label, {}};
        for (const auto &block : grouping) {
            LocalFactor f = st.factors[block.front()];
            for (size_t b = 1; b < block.size(); b++) {
                f = kron(f, st.factors[block[b]]);
            }
            out.factors.push_back(std::move(f));
        }
        states.push_back(std::move(out));
    }
    return StateSet::create_unverified(std::move(dims), set.ambient_order(), std::move(states))
        .with_party_names(std::move(names));
}

StateSet strip_party(const StateSet &set, int party) {
    int n = set.party_count();
    if (party < 0 || party >= n) {
        throw Error(ErrorKind::InvalidPartition, "party index " + std::to_string(party) + " out of range");
    }
    if (n < 2) {
        throw Error(ErrorKind::InvalidPartition, "cannot strip the only party");
    }
    for (size_t i = 1; i < set.size(); i++) {
        if (!proportional(set[0].factors[party], set[i].factors[party])) {
            throw Error(ErrorKind::NotStrippable, "factors of " + set[0].label + " and " + set[i].label + " on party " +
                                                      set.party_names()[party] + " are not proportional");
        }
    }
    std::vector<int> dims = set.dims();
    dims.erase(dims.begin() + party);
    std::vector<std::string> names = set.party_names();
    names.erase(names.begin() + party);
    std::vector<ProductState> states = set.states();
    for (auto &st : states) {
        st.factors.erase(st.factors.begin() + party);
    }
    return StateSet::create_unverified(std::move(dims), set.ambient_order(), std::move(states))
        .with_party_names(std::move(names));
}

}  // namespace gnl

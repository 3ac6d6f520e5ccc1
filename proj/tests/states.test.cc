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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gnl/error.hpp"

using namespace gnl;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

StateSet two_qubit_pair() {
    return StateSet::create({2, 2}, 2,
                            {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}},
                             {"b", {basis_ket(2, 1, 2), build_factor(2, 2, {{0, 1}, {1, 1}})}}});
}

}  // namespace

TEST(states, default_party_names) {
    ASSERT_EQ(default_party_names(2), (std::vector<std::string>{"A", "B"}));
    ASSERT_EQ(default_party_names(3), (std::vector<std::string>{"A", "B", "C"}));
    ASSERT_EQ(default_party_names(4), (std::vector<std::string>{"A1", "A2", "A3", "A4"}));
}

TEST(states, factor_construction) {
    LocalFactor f = build_factor(3, 2, {{0, 1}, {2, -1}});
    ASSERT_EQ(f.dim, 3);
    ASSERT_EQ(f.support(), (std::vector<int>{0, 2}));
    ASSERT_EQ(uniform_ket(4, 1, 3, 2).support(), (std::vector<int>{1, 2, 3}));
    ASSERT_EQ(kind_of([] { basis_ket(3, 3, 2); }), ErrorKind::IndexOutOfRange);
    ASSERT_EQ(kind_of([] { build_factor(3, 2, {}); }), ErrorKind::ZeroVector);
}

TEST(states, inner_products) {
    LocalFactor plus = build_factor(2, 2, {{0, 1}, {1, 1}});
    LocalFactor minus = build_factor(2, 2, {{0, 1}, {1, -1}});
    ASSERT_TRUE(factor_inner(plus, minus).is_zero());
    ASSERT_EQ(factor_inner(plus, plus), Cyclotomic(2, 2L));
    // Conjugate-linear in the first argument.
    LocalFactor w = build_factor(2, {{0, Cyclotomic::zeta_power(4, 1)}});
    LocalFactor one = basis_ket(2, 0, 4);
    ASSERT_EQ(factor_inner(w, one), -Cyclotomic::zeta_power(4, 1));
    ASSERT_EQ(factor_inner(one, w), Cyclotomic::zeta_power(4, 1));
}

TEST(states, proportional) {
    LocalFactor u = build_factor(3, 2, {{0, 1}, {1, 2}});
    LocalFactor v = build_factor(3, 2, {{0, -3}, {1, -6}});
    LocalFactor x = build_factor(3, 2, {{0, 1}, {1, 3}});
    ASSERT_TRUE(proportional(u, v));
    ASSERT_FALSE(proportional(u, x));
    ASSERT_FALSE(proportional(u, basis_ket(3, 2, 2)));
}

TEST(states, kron_orders_leftmost_slowest) {
    LocalFactor a = build_factor(2, 2, {{1, 1}});
    LocalFactor b = build_factor(3, 2, {{0, 1}, {2, 1}});
    LocalFactor ab = kron(a, b);
    ASSERT_EQ(ab.dim, 6);
    ASSERT_EQ(ab.support(), (std::vector<int>{3, 5}));
}

TEST(states, create_validates) {
    ASSERT_EQ(kind_of([] {
                  StateSet::create({2, 2}, 2,
                                   {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}},
                                    {"b", {basis_ket(2, 0, 2), build_factor(2, 2, {{0, 1}, {1, 1}})}}});
              }),
              ErrorKind::NonOrthogonal);
    ASSERT_EQ(kind_of([] {
                  StateSet::create({2, 2}, 2,
                                   {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}},
                                    {"a", {basis_ket(2, 1, 2), basis_ket(2, 0, 2)}}});
              }),
              ErrorKind::InvalidPartition);
    ASSERT_EQ(kind_of([] { StateSet::create({2, 3}, 2, {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}}}); }),
              ErrorKind::DimensionMismatch);
    ASSERT_EQ(kind_of([] { StateSet::create({2, 2}, 4, {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}}}); }),
              ErrorKind::IncompatibleOrder);
    StateSet ok = two_qubit_pair();
    ASSERT_EQ(ok.size(), 2u);
    ASSERT_EQ(ok.find_label("b"), std::optional<size_t>(1));
    ASSERT_FALSE(ok.find_label("zz").has_value());
}

TEST(states, orthogonality_report_lists_pairs) {
    StateSet s = StateSet::create_unverified({2}, 2,
                                             {{"x", {build_factor(2, 2, {{0, 1}, {1, 1}})}},
                                              {"y", {basis_ket(2, 0, 2)}},
                                              {"z", {basis_ket(2, 1, 2)}}});
    auto report = check_mutual_orthogonality(s);
    ASSERT_EQ(report.violations.size(), 2u);
    ASSERT_EQ(report.violations[0].first, 0u);
    ASSERT_EQ(report.violations[0].second, 1u);
    ASSERT_EQ(report.violations[1].second, 2u);
}

TEST(states, group_parties) {
    StateSet basis = fixtures::product_basis({2, 3, 2});
    StateSet grouped = group_parties(basis, {{0, 2}, {1}});
    ASSERT_EQ(grouped.dims(), (std::vector<int>{4, 3}));
    ASSERT_EQ(grouped.party_names(), (std::vector<std::string>{"AC", "B"}));
    ASSERT_EQ(grouped.size(), 12u);
    // e_1 = |0>|0>|1> so the AC factor is |0>|1> = index 1.
    ASSERT_EQ(grouped[1].factors[0].support(), (std::vector<int>{1}));
    ASSERT_TRUE(check_mutual_orthogonality(grouped).orthogonal());
    ASSERT_EQ(kind_of([&] { group_parties(basis, {{0, 1}}); }), ErrorKind::InvalidPartition);
    ASSERT_EQ(kind_of([&] { group_parties(basis, {{0, 1}, {1, 2}}); }), ErrorKind::InvalidPartition);
}

TEST(states, strip_party) {
    StateSet s = StateSet::create({2, 2, 3}, 2,
                                  {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2), build_factor(3, 2, {{0, 1}, {1, 1}})}},
                                   {"b", {basis_ket(2, 1, 2), basis_ket(2, 0, 2), build_factor(3, 2, {{0, 2}, {1, 2}})}}});
    StateSet stripped = strip_party(s, 2);
    ASSERT_EQ(stripped.dims(), (std::vector<int>{2, 2}));
    ASSERT_EQ(stripped.party_names(), (std::vector<std::string>{"A", "B"}));
    try {
        strip_party(s, 0);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotStrippable);
        ASSERT_NE(std::string(e.what()).find("A"), std::string::npos);
    }
}

TEST(states, subset_drops_provenance) {
    StateSet basis = fixtures::product_basis({2, 2});
    StateSet sub = basis.subset({0, 3});
    ASSERT_EQ(sub.size(), 2u);
    ASSERT_EQ(sub[1].label, "e_3");
    ASSERT_FALSE(sub.provenance().has_value());
    ASSERT_THROW(basis.subset({7}), Error);
}

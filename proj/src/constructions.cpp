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

#include "gnl/constructions.hpp"

#include <numeric>
#include <sstream>

#include "gnl/error.hpp"

namespace gnl {

namespace {

// Arms of the two-party building block, in emission order.
enum class Arm { Diagonal, Shift, Wrap, Column, Phase, Stopper };

struct CorePair {
    Arm arm;
    LocalFactor x;
    LocalFactor y;
};

int phase_root_order(int a, int b) {
    return b > a ? b - a + 1 : 1;
}

int ambient_for(std::initializer_list<int> root_orders) {
    int n = 2;
    for (int r : root_orders) {
        n = std::lcm(n, r);
    }
    return n;
}

LocalFactor minus_ket(int dim, int lo, int hi, int order) {
    return build_factor(dim, order, {{lo, 1}, {hi, -1}});
}

// The 2b-1 state two-party set on an a-dimensional x-subspace (indices
// 0..a-1 of a dim_x-dimensional space) and a b-dimensional y-space.
std::vector<CorePair> core_pairs(int a, int b, int dim_x, int order) {
    std::vector<CorePair> out;
    for (int i = 1; i <= a - 1; i++) {
        out.push_back({Arm::Diagonal, basis_ket(dim_x, i, order), minus_ket(b, 0, i, order)});
    }
    for (int i = 1; i <= a - 2; i++) {
        out.push_back({Arm::Shift, minus_ket(dim_x, 0, i, order), basis_ket(b, i + 1, order)});
    }
    out.push_back({Arm::Wrap, minus_ket(dim_x, 0, a - 1, order), basis_ket(b, 1, order)});
    for (int j = a; j <= b - 1; j++) {
        out.push_back({Arm::Column, minus_ket(dim_x, 0, 1, order), basis_ket(b, j, order)});
    }
    int r = phase_root_order(a, b);
    for (int s = 1; s <= b - a; s++) {
        std::vector<std::pair<int, Cyclotomic>> terms{{2, Cyclotomic(order, 1L)}};
        for (int t = 1; t <= b - a; t++) {
            terms.emplace_back(t + a - 1, root_of_unity(r, static_cast<long long>(s) * t, order));
        }
        out.push_back({Arm::Phase, uniform_ket(dim_x, 0, 1, order), build_factor(b, terms)});
    }
    out.push_back({Arm::Stopper, uniform_ket(dim_x, 0, a - 1, order), uniform_ket(b, 0, b - 1, order)});
    return out;
}

std::string label(size_t one_based) {
    return "phi_" + std::to_string(one_based);
}

std::string dims_text(const std::vector<int> &dims) {
    std::ostringstream out;
    for (size_t k = 0; k < dims.size(); k++) {
        out << (k ? "," : "") << dims[k];
    }
    return out.str();
}

bool nondecreasing_from(const std::vector<int> &dims, size_t start) {
    for (size_t k = start + 1; k < dims.size(); k++) {
        if (dims[k] < dims[k - 1]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> iota_range(size_t lo, size_t hi) {
    std::vector<size_t> out(hi - lo);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

// Blocks of the n-party constructions: block 1 is a core on (A1, A2) and
// block k (k >= 2) a core on (A2, A_{k+1}); the remaining parties carry basis
// kets that keep different blocks orthogonal.
StateSet npartite(const std::vector<int> &dims, bool reducible, const std::string &family) {
    int n = static_cast<int>(dims.size());
    int first_x = reducible ? dims[0] - 1 : dims[0];
    int order = phase_root_order(first_x, dims[1]);
    order = std::lcm(2, order);
    for (int k = 2; k < n; k++) {
        order = std::lcm(order, phase_root_order(dims[1], dims[k]));
    }
    std::vector<ProductState> states;
    std::vector<ProvenanceBlock> blocks;

    auto rider = [&](int party, int index) { return basis_ket(dims[party], index, order); };

    {
        ProvenanceBlock block{"G1", {}, 0, 1};
        for (auto &pair : core_pairs(first_x, dims[1], dims[0], order)) {
            ProductState st{label(states.size() + 1), {}};
            st.factors.push_back(std::move(pair.x));
            st.factors.push_back(std::move(pair.y));
            for (int p = 2; p < n; p++) {
                st.factors.push_back(rider(p, p == n - 1 ? 1 : 0));
            }
            block.members.push_back(states.size());
            states.push_back(std::move(st));
        }
        blocks.push_back(std::move(block));
    }
    for (int k = 2; k <= n - 1; k++) {
        int active = k;  // zero-based index of A_{k+1}
        ProvenanceBlock block{"G" + std::to_string(k), {}, 1, active};
        int a1_index = 0;
        if (k == n - 1) {
            a1_index = reducible ? dims[0] - 1 : 0;
        } else if (k == 2) {
            a1_index = 1;
        }
        for (auto &pair : core_pairs(dims[1], dims[active], dims[1], order)) {
            ProductState st{label(states.size() + 1), std::vector<LocalFactor>(n)};
            st.factors[0] = rider(0, a1_index);
            st.factors[1] = std::move(pair.x);
            st.factors[active] = std::move(pair.y);
            for (int p = 2; p < n; p++) {
                if (p == active) {
                    continue;
                }
                // A_k (zero-based k-1) carries the |1> marker for k >= 3.
                st.factors[p] = rider(p, (k >= 3 && p == k - 1) ? 1 : 0);
            }
            block.members.push_back(states.size());
            states.push_back(std::move(st));
        }
        blocks.push_back(std::move(block));
    }
    return StateSet::create(dims, order, std::move(states), Provenance{family, dims, std::move(blocks)});
}

ProductState ps(size_t index, std::vector<LocalFactor> factors) {
    return ProductState{label(index), std::move(factors)};
}

void require_equal(const StateSet &fixed, const StateSet &generated, const std::string &name) {
    if (fixed.dims() != generated.dims() || fixed.ambient_order() != generated.ambient_order() ||
        fixed.size() != generated.size()) {
        throw Error(ErrorKind::ConstructionDrift, name + ": fixed and generated sets differ in shape");
    }
    for (size_t i = 0; i < fixed.size(); i++) {
        if (!(fixed[i] == generated[i])) {
            throw Error(ErrorKind::ConstructionDrift, name + ": state " + fixed[i].label + " differs from the generator");
        }
    }
}

// Hard-coded instances, written out state by state.

StateSet fixed_3x5() {
    const int N = 6;
    auto k = [&](int d, int i) { return basis_ket(d, i, N); };
    auto m = [&](int d, int a, int b) { return minus_ket(d, a, b, N); };
    auto w = [&](int s) { return root_of_unity(3, s, N); };
    Cyclotomic one(N, 1L);
    std::vector<ProductState> s;
    s.push_back(ps(1, {k(3, 1), m(5, 0, 1)}));
    s.push_back(ps(2, {k(3, 2), m(5, 0, 2)}));
    s.push_back(ps(3, {m(3, 0, 1), k(5, 2)}));
    s.push_back(ps(4, {m(3, 0, 2), k(5, 1)}));
    s.push_back(ps(5, {m(3, 0, 1), k(5, 3)}));
    s.push_back(ps(6, {m(3, 0, 1), k(5, 4)}));
    s.push_back(ps(7, {uniform_ket(3, 0, 1, N), build_factor(5, {{2, one}, {3, w(1)}, {4, w(2)}})}));
    s.push_back(ps(8, {uniform_ket(3, 0, 1, N), build_factor(5, {{2, one}, {3, w(2)}, {4, w(1)}})}));
    s.push_back(ps(9, {uniform_ket(3, 0, 2, N), uniform_ket(5, 0, 4, N)}));
    return StateSet::create({3, 5}, N, std::move(s));
}

StateSet fixed_4x4x6() {
    const int N = 6;
    auto k = [&](int d, int i) { return basis_ket(d, i, N); };
    auto m = [&](int d, int a, int b) { return minus_ket(d, a, b, N); };
    auto w = [&](int s) { return root_of_unity(3, s, N); };
    Cyclotomic one(N, 1L);
    auto c0 = k(6, 0);
    auto a3 = k(4, 3);
    std::vector<ProductState> s;
    s.push_back(ps(1, {k(4, 1), m(4, 0, 1), c0}));
    s.push_back(ps(2, {k(4, 2), m(4, 0, 2), c0}));
    s.push_back(ps(3, {m(4, 0, 1), k(4, 2), c0}));
    s.push_back(ps(4, {m(4, 0, 2), k(4, 1), c0}));
    s.push_back(ps(5, {m(4, 0, 1), k(4, 3), c0}));
    s.push_back(ps(6, {uniform_ket(4, 0, 1, N), m(4, 2, 3), c0}));
    s.push_back(ps(7, {uniform_ket(4, 0, 2, N), uniform_ket(4, 0, 3, N), c0}));
    s.push_back(ps(8, {a3, k(4, 1), m(6, 0, 1)}));
    s.push_back(ps(9, {a3, k(4, 2), m(6, 0, 2)}));
    s.push_back(ps(10, {a3, k(4, 3), m(6, 0, 3)}));
    s.push_back(ps(11, {a3, m(4, 0, 1), k(6, 2)}));
    s.push_back(ps(12, {a3, m(4, 0, 2), k(6, 3)}));
    s.push_back(ps(13, {a3, m(4, 0, 3), k(6, 1)}));
    s.push_back(ps(14, {a3, m(4, 0, 1), k(6, 4)}));
    s.push_back(ps(15, {a3, m(4, 0, 1), k(6, 5)}));
    s.push_back(ps(16, {a3, uniform_ket(4, 0, 1, N), build_factor(6, {{2, one}, {4, w(1)}, {5, w(2)}})}));
    s.push_back(ps(17, {a3, uniform_ket(4, 0, 1, N), build_factor(6, {{2, one}, {4, w(2)}, {5, w(1)}})}));
    s.push_back(ps(18, {a3, uniform_ket(4, 0, 3, N), uniform_ket(6, 0, 5, N)}));
    return StateSet::create({4, 4, 6}, N, std::move(s));
}

StateSet fixed_3x4x5() {
    const int N = 6;
    auto k = [&](int d, int i) { return basis_ket(d, i, N); };
    auto m = [&](int d, int a, int b) { return minus_ket(d, a, b, N); };
    auto w = [&](int s) { return root_of_unity(3, s, N); };
    Cyclotomic one(N, 1L);
    auto c1 = k(5, 1);
    auto b01 = uniform_ket(4, 0, 1, N);
    std::vector<ProductState> s;
    s.push_back(ps(1, {k(3, 1), m(4, 0, 1), c1}));
    s.push_back(ps(2, {k(3, 2), m(4, 0, 2), c1}));
    s.push_back(ps(3, {m(3, 0, 1), k(4, 2), c1}));
    s.push_back(ps(4, {m(3, 0, 2), k(4, 1), c1}));
    s.push_back(ps(5, {m(3, 0, 1), k(4, 3), c1}));
    s.push_back(ps(6, {uniform_ket(3, 0, 1, N), m(4, 2, 3), c1}));
    s.push_back(ps(7, {uniform_ket(3, 0, 2, N), uniform_ket(4, 0, 3, N), uniform_ket(5, 0, 4, N)}));
    s.push_back(ps(8, {k(3, 1), b01, m(5, 0, 1)}));
    s.push_back(ps(9, {k(3, 2), b01, m(5, 0, 2)}));
    s.push_back(ps(10, {m(3, 0, 1), b01, k(5, 2)}));
    s.push_back(ps(11, {m(3, 0, 1), b01, k(5, 3)}));
    s.push_back(ps(12, {m(3, 0, 1), b01, k(5, 4)}));
    s.push_back(ps(13, {uniform_ket(3, 0, 1, N), b01, build_factor(5, {{2, one}, {3, w(1)}, {4, w(2)}})}));
    s.push_back(ps(14, {uniform_ket(3, 0, 1, N), b01, build_factor(5, {{2, one}, {3, w(2)}, {4, w(1)}})}));
    return StateSet::create({3, 4, 5}, N, std::move(s));
}

StateSet with_provenance_of(const StateSet &fixed, const StateSet &generated, Family family) {
    Provenance prov = *generated.provenance();
    prov.family = family_name(family);
    return StateSet::create_unverified(fixed.dims(), fixed.ambient_order(), fixed.states(), std::move(prov));
}

}  // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::Fixed3x5:
            return "fixed-3x5";
        case Family::Bipartite:
            return "bipartite";
        case Family::Fixed4x4x6:
            return "fixed-4x4x6";
        case Family::Type1Tripartite:
            return "type1-tripartite";
        case Family::Type1Npartite:
            return "type1-npartite";
        case Family::Fixed3x4x5:
            return "fixed-3x4x5";
        case Family::Type2Tripartite:
            return "type2-tripartite";
        case Family::Type2Npartite:
            return "type2-npartite";
    }
    return "unknown";
}

const std::vector<Family> &all_families() {
    static const std::vector<Family> families{
        Family::Fixed3x5,        Family::Bipartite,     Family::Fixed4x4x6,      Family::Type1Tripartite,
        Family::Type1Npartite,   Family::Fixed3x4x5,    Family::Type2Tripartite, Family::Type2Npartite,
    };
    return families;
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : all_families()) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::vector<int> fixed_dims(Family family) {
    switch (family) {
        case Family::Fixed3x5:
            return {3, 5};
        case Family::Fixed4x4x6:
            return {4, 4, 6};
        case Family::Fixed3x4x5:
            return {3, 4, 5};
        default:
            return {};
    }
}

void check_admissible(Family family, const std::vector<int> &dims) {
    auto fail = [&](const std::string &rule) {
        throw Error(ErrorKind::Inadmissible, family_name(family) + " requires " + rule + " (got " + dims_text(dims) + ")");
    };
    switch (family) {
        case Family::Fixed3x5:
        case Family::Fixed4x4x6:
        case Family::Fixed3x4x5:
            if (!dims.empty() && dims != fixed_dims(family)) {
                fail("dims " + dims_text(fixed_dims(family)) + " or none");
            }
            return;
        case Family::Bipartite:
            if (dims.size() != 2 || !(3 <= dims[0] && dims[0] <= dims[1])) {
                fail("two dims with 3 <= d1 <= d2");
            }
            return;
        case Family::Type1Tripartite:
            if (dims.size() != 3 || !(3 <= dims[0] - 1 && dims[0] - 1 <= dims[1] && nondecreasing_from(dims, 1))) {
                fail("three dims with 3 <= d1-1 <= d2 <= d3");
            }
            return;
        case Family::Type1Npartite:
            if (dims.size() < 3 || !(3 <= dims[0] - 1 && dims[0] - 1 <= dims[1] && nondecreasing_from(dims, 1))) {
                fail("n >= 3 dims with 3 <= d1-1 <= d2 <= ... <= dn");
            }
            return;
        case Family::Type2Tripartite:
            if (dims.size() != 3 || !(3 <= dims[0] && nondecreasing_from(dims, 0))) {
                fail("three dims with 3 <= d1 <= d2 <= d3");
            }
            return;
        case Family::Type2Npartite:
            if (dims.size() < 4 || !(3 <= dims[0] && nondecreasing_from(dims, 0))) {
                fail("n >= 4 dims with 3 <= d1 <= d2 <= ... <= dn");
            }
            return;
    }
}

size_t expected_cardinality(Family family, const std::vector<int> &dims) {
    check_admissible(family, dims);
    std::vector<int> d = dims.empty() ? fixed_dims(family) : dims;
    switch (family) {
        case Family::Fixed3x5:
        case Family::Bipartite:
            return static_cast<size_t>(2 * d[1] - 1);
        case Family::Fixed4x4x6:
        case Family::Type1Tripartite:
            return static_cast<size_t>(2 * (d[1] + d[2]) - 2);
        case Family::Fixed3x4x5:
        case Family::Type2Tripartite:
            return static_cast<size_t>(2 * d[1] + 2 * d[2] - 4);
        case Family::Type1Npartite:
        case Family::Type2Npartite: {
            size_t total = 0;
            for (size_t k = 1; k < d.size(); k++) {
                total += static_cast<size_t>(2 * d[k] - 1);
            }
            return total;
        }
    }
    return 0;
}

StateSet gen_bipartite(int d1, int d2) {
    check_admissible(Family::Bipartite, {d1, d2});
    int order = ambient_for({phase_root_order(d1, d2)});
    std::vector<ProductState> states;
    for (auto &pair : core_pairs(d1, d2, d1, order)) {
        states.push_back(ProductState{label(states.size() + 1), {std::move(pair.x), std::move(pair.y)}});
    }
    ProvenanceBlock block{"S", iota_range(0, states.size()), 0, 1};
    return StateSet::create({d1, d2}, order, std::move(states),
                            Provenance{family_name(Family::Bipartite), {d1, d2}, {std::move(block)}});
}

StateSet gen_type1_tripartite(int d1, int d2, int d3) {
    check_admissible(Family::Type1Tripartite, {d1, d2, d3});
    int order = ambient_for({phase_root_order(d1 - 1, d2), phase_root_order(d2, d3)});
    std::vector<ProductState> states;
    for (auto &pair : core_pairs(d1 - 1, d2, d1, order)) {
        if (!pair.x.amplitudes[d1 - 1].is_zero()) {
            throw Error(ErrorKind::Internal, "first block leaked onto A index d1-1");
        }
        states.push_back(
            ProductState{label(states.size() + 1), {std::move(pair.x), std::move(pair.y), basis_ket(d3, 0, order)}});
    }
    size_t split = states.size();
    for (auto &pair : core_pairs(d2, d3, d2, order)) {
        states.push_back(ProductState{label(states.size() + 1),
                                      {basis_ket(d1, d1 - 1, order), std::move(pair.x), std::move(pair.y)}});
    }
    std::vector<ProvenanceBlock> blocks{
        {"A", iota_range(0, split), 0, 1},
        {"B", iota_range(split, states.size()), 1, 2},
    };
    return StateSet::create({d1, d2, d3}, order, std::move(states),
                            Provenance{family_name(Family::Type1Tripartite), {d1, d2, d3}, std::move(blocks)});
}

StateSet gen_type1_npartite(const std::vector<int> &dims) {
    check_admissible(Family::Type1Npartite, dims);
    return npartite(dims, true, family_name(Family::Type1Npartite));
}

StateSet gen_type2_npartite(const std::vector<int> &dims) {
    check_admissible(Family::Type2Npartite, dims);
    return npartite(dims, false, family_name(Family::Type2Npartite));
}

StateSet gen_type2_tripartite(int d1, int d2, int d3) {
    check_admissible(Family::Type2Tripartite, {d1, d2, d3});
    int order = ambient_for({phase_root_order(d1, d2), phase_root_order(d1, d3)});
    std::vector<ProductState> states;
    size_t wrap_state = 0;
    // First block: C carries |1>, except the shared all-plus stopper.
    for (auto &pair : core_pairs(d1, d2, d1, order)) {
        LocalFactor c = pair.arm == Arm::Stopper ? uniform_ket(d3, 0, d3 - 1, order) : basis_ket(d3, 1, order);
        if (pair.arm == Arm::Wrap) {
            wrap_state = states.size();
        }
        states.push_back(ProductState{label(states.size() + 1), {std::move(pair.x), std::move(pair.y), std::move(c)}});
    }
    size_t stopper = states.size() - 1;
    // Second block: B carries |0+1>; the A-C core reuses the first block's
    // wrap-around state and stopper, so both arms are omitted here.
    for (auto &pair : core_pairs(d1, d3, d1, order)) {
        if (pair.arm == Arm::Wrap || pair.arm == Arm::Stopper) {
            continue;
        }
        states.push_back(ProductState{label(states.size() + 1),
                                      {std::move(pair.x), uniform_ket(d2, 0, 1, order), std::move(pair.y)}});
    }
    std::vector<size_t> second{wrap_state};
    for (size_t i = stopper; i < states.size(); i++) {
        second.push_back(i);
    }
    std::vector<ProvenanceBlock> blocks{
        {"AB-core", iota_range(0, stopper + 1), 0, 1},
        {"AC-core", std::move(second), 0, 2},
    };
    return StateSet::create({d1, d2, d3}, order, std::move(states),
                            Provenance{family_name(Family::Type2Tripartite), {d1, d2, d3}, std::move(blocks)});
}

StateSet gen_named(const ConstructionSpec &spec) {
    check_admissible(spec.family, spec.dims);
    const auto &d = spec.dims;
    switch (spec.family) {
        case Family::Bipartite:
            return gen_bipartite(d[0], d[1]);
        case Family::Type1Tripartite:
            return gen_type1_tripartite(d[0], d[1], d[2]);
        case Family::Type1Npartite:
            return gen_type1_npartite(d);
        case Family::Type2Tripartite:
            return gen_type2_tripartite(d[0], d[1], d[2]);
        case Family::Type2Npartite:
            return gen_type2_npartite(d);
        case Family::Fixed3x5: {
            StateSet generated = gen_bipartite(3, 5);
            StateSet fixed = fixed_3x5();
            require_equal(fixed, generated, family_name(spec.family));
            return with_provenance_of(fixed, generated, spec.family);
        }
        case Family::Fixed4x4x6: {
            StateSet generated = gen_type1_tripartite(4, 4, 6);
            StateSet fixed = fixed_4x4x6();
            require_equal(fixed, generated, family_name(spec.family));
            return with_provenance_of(fixed, generated, spec.family);
        }
        case Family::Fixed3x4x5: {
            StateSet generated = gen_type2_tripartite(3, 4, 5);
            StateSet fixed = fixed_3x4x5();
            require_equal(fixed, generated, family_name(spec.family));
            return with_provenance_of(fixed, generated, spec.family);
        }
    }
    throw Error(ErrorKind::Internal, "unhandled family");
}

}  // namespace gnl

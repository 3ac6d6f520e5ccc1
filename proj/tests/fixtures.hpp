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

#ifndef GNL_TESTS_FIXTURES_HPP
#define GNL_TESTS_FIXTURES_HPP

#include <numeric>
#include <string>
#include <vector>

#include "gnl/states.hpp"

namespace fixtures {

/// The computational product basis |i>|j>... in the given dims.
inline gnl::StateSet product_basis(const std::vector<int> &dims) {
    std::vector<gnl::ProductState> states;
    int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    for (int code = 0; code < total; code++) {
        gnl::ProductState st{"e_" + std::to_string(code), {}};
        int rest = code;
        std::vector<int> digits(dims.size());
        for (int p = static_cast<int>(dims.size()) - 1; p >= 0; p--) {
            digits[p] = rest % dims[p];
            rest /= dims[p];
        }
        for (size_t p = 0; p < dims.size(); p++) {
            st.factors.push_back(gnl::basis_ket(dims[p], digits[p], 2));
        }
        states.push_back(std::move(st));
    }
    return gnl::StateSet::create(dims, 2, std::move(states));
}

/// Same states with parties reordered: new party k is old party perm[k].
inline gnl::StateSet permute_parties(const gnl::StateSet &set, const std::vector<int> &perm) {
    std::vector<int> dims;
    std::vector<std::string> names;
    for (int p : perm) {
        dims.push_back(set.dims()[p]);
        names.push_back(set.party_names()[p]);
    }
    std::vector<gnl::ProductState> states;
    for (const auto &st : set.states()) {
        gnl::ProductState out{st.label, {}};
        for (int p : perm) {
            out.factors.push_back(st.factors[p]);
        }
        states.push_back(std::move(out));
    }
    return gnl::StateSet::create(dims, set.ambient_order(), std::move(states)).with_party_names(names);
}

}  // namespace fixtures

#endif

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

#ifndef GNL_CONSTRUCTIONS_HPP
#define GNL_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnl/states.hpp"

namespace gnl {

enum class Family {
    Fixed3x5,
    Bipartite,
    Fixed4x4x6,
    Type1Tripartite,
    Type1Npartite,
    Fixed3x4x5,
    Type2Tripartite,
    Type2Npartite,
};

struct ConstructionSpec {
    Family family;
    std::vector<int> dims;
};

/// CLI / JSON spelling, e.g. "type2-tripartite".
std::string family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family> &all_families();

/// Dimensions of the fixed-instance families; empty for parameterized ones.
std::vector<int> fixed_dims(Family family);

/// Size guaranteed by the family's counting formula. Throws Inadmissible on
/// dims outside the family's range.
size_t expected_cardinality(Family family, const std::vector<int> &dims);

/// Throws Inadmissible with a message naming the violated range.
void check_admissible(Family family, const std::vector<int> &dims);

/// 2*d2 - 1 states in C^d1 (x) C^d2, 3 <= d1 <= d2.
StateSet gen_bipartite(int d1, int d2);

/// 2(d2 + d3) - 2 states, 3 <= d1 - 1 <= d2 <= d3.
StateSet gen_type1_tripartite(int d1, int d2, int d3);

/// sum_{i>=2} (2 d_i - 1) states, n >= 3, 3 <= d1 - 1 <= d2 <= ... <= dn.
StateSet gen_type1_npartite(const std::vector<int> &dims);

/// 2 d2 + 2 d3 - 4 states, 3 <= d1 <= d2 <= d3.
StateSet gen_type2_tripartite(int d1, int d2, int d3);

/// sum_{i>=2} (2 d_i - 1) states, n >= 4, 3 <= d1 <= d2 <= ... <= dn.
StateSet gen_type2_npartite(const std::vector<int> &dims);

/// Dispatches on the family. Fixed families are emitted from hard-coded
/// state lists and cross-checked state-for-state against the parameterized
/// generator (ConstructionDrift on mismatch).
StateSet gen_named(const ConstructionSpec &spec);

}  // namespace gnl

#endif

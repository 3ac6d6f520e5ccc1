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

#ifndef GNL_TABLE1_HPP
#define GNL_TABLE1_HPP

#include <string>
#include <vector>

#include "gnl/constructions.hpp"
#include "gnl/verdicts.hpp"

namespace gnl {

/// Small: every admissible instance with max dim <= 6 and n <= 4.
/// Full: max dim <= 7 and n <= 5.
enum class Grid { Small, Full };

struct Table1Cell {
    Family family;
    std::vector<int> dims;
    size_t expected_cardinality = 0;
    size_t cardinality = 0;
    GnlType expected_type = GnlType::Unknown;
    GnlType gnl_type = GnlType::Unknown;
    bool certificates_valid = false;
    double seconds = 0;
    /// Empty when the cell passed.
    std::string failure;

    bool ok() const {
        return failure.empty();
    }
};

/// A construction family as one row of the comparison table.
struct Table1Row {
    Family family;
    std::string system;
    std::string formula;
    GnlType expected_type;
};

/// Cited earlier constructions, reproduced verbatim as documentation.
struct PriorWorkRow {
    std::string source;
    std::string system;
    std::string cardinality;
    std::string type;
};

const std::vector<Table1Row> &table1_rows();
const std::vector<PriorWorkRow> &prior_work_rows();

/// Dimension tuples visited for one family.
std::vector<std::vector<int>> grid_dims(Family family, Grid grid);

/// Cardinality formula evaluated directly from the dims.
size_t formula_cardinality(Family family, const std::vector<int> &dims);

Table1Cell run_table1_cell(Family family, const std::vector<int> &dims, const CertifyOptions &options = {});
std::vector<Table1Cell> run_table1(Grid grid, const CertifyOptions &options = {});

std::string render_table1(const std::vector<Table1Cell> &cells);

}  // namespace gnl

#endif

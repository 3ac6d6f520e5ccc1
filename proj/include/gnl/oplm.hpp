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

#ifndef GNL_OPLM_HPP
#define GNL_OPLM_HPP

#include <optional>
#include <string>
#include <vector>

#include "gnl/matrix.hpp"
#include "gnl/states.hpp"

namespace gnl {

class HermitianOperator {
   public:
    /// Throws Internal if the matrix is not Hermitian.
    explicit HermitianOperator(Matrix entries);

    int dim() const noexcept {
        return entries_.rows();
    }
    const Matrix &entries() const noexcept {
        return entries_;
    }
    bool operator==(const HermitianOperator &other) const = default;

   private:
    Matrix entries_;
};

/// One orthogonality-preservation condition <psi_i| E (x) I |psi_j> = 0,
/// expanded over the D*D unknown entries E[r][c] (index r*D + c).
struct ConstraintRow {
    size_t first;
    size_t second;
    std::vector<Cyclotomic> coefficients;

    bool is_zero() const;
};

struct ConstraintSystem {
    std::vector<int> party_group;
    int unknown_dim = 0;
    int order = 1;
    std::vector<std::string> labels;
    std::vector<ConstraintRow> rows;

    const ConstraintRow &row(size_t first, size_t second) const;
};

/// Which constraint pair fixed a given unknown during elimination.
struct TraceEntry {
    int unknown_row;
    int unknown_col;
    size_t first;
    size_t second;
};

struct OplmReport {
    std::vector<int> party_group;
    int unknown_dim = 0;
    int solution_dim = 0;
    std::vector<Matrix> basis;
    bool trivial = false;
    std::optional<HermitianOperator> witness;
    std::vector<TraceEntry> trace;
};

/// Rows for all ordered pairs (i, j), i != j. Throws NonOrthogonal when the
/// set is not mutually orthogonal.
ConstraintSystem assemble(const StateSet &set, const std::vector<int> &party_group);

/// Exact solution space of the constraints; attaches a witness when the
/// space is larger than span{I}.
OplmReport solution_space(const ConstraintSystem &system);

/// assemble + solution_space.
OplmReport oplm_report(const StateSet &set, const std::vector<int> &party_group);

/// True when E satisfies every row exactly.
bool satisfies(const ConstraintSystem &system, const Matrix &e);

/// A Hermitian, non-scalar element of a nontrivial solution space.
HermitianOperator witness(const ConstraintSystem &system, const std::vector<Matrix> &basis);

/// Rational upper bound on |z|.
Rational magnitude_upper_bound(const Cyclotomic &z);
/// Gershgorin bound on the spectral radius: max row sum of entry bounds.
Rational gershgorin_bound(const Matrix &m);

struct PovmPair {
    Matrix plus;
    Matrix minus;
    Rational epsilon;
};

/// The two-outcome POVM {(I + eps H)/2, (I - eps H)/2}, eps = 1/(1 + bound),
/// checked against every constraint of the set and party group.
PovmPair povm_from_witness(const HermitianOperator &h, const StateSet &set, const std::vector<int> &party_group);

/// Nullity of the constraint matrix in double precision; singular values
/// below tol * sigma_max count as zero.
int float_solution_dim(const ConstraintSystem &system, double tol);

}  // namespace gnl

#endif

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

#ifndef GNL_STATES_HPP
#define GNL_STATES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnl/cyclotomic.hpp"

namespace gnl {

/// One party's (unnormalized) local vector.
struct LocalFactor {
    int dim = 0;
    std::vector<Cyclotomic> amplitudes;

    int order() const;
    /// Indices with nonzero amplitude, ascending.
    std::vector<int> support() const;
    bool operator==(const LocalFactor &other) const = default;
};

struct ProductState {
    std::string label;
    std::vector<LocalFactor> factors;

    bool operator==(const ProductState &other) const = default;
};

/// A block of states that a generator knows to be a two-party core embedded
/// with fixed factors on the remaining parties.
struct ProvenanceBlock {
    std::string name;
    std::vector<size_t> members;
    int core_p = 0;
    int core_q = 0;

    bool operator==(const ProvenanceBlock &other) const = default;
};

struct Provenance {
    std::string family;
    std::vector<int> dims;
    std::vector<ProvenanceBlock> blocks;

    bool operator==(const Provenance &other) const = default;
};

class StateSet {
   public:
    /// Validates structure and mutual orthogonality; throws NonOrthogonal
    /// naming the first violating pair.
    static StateSet create(std::vector<int> dims, int ambient_order, std::vector<ProductState> states,
                           std::optional<Provenance> provenance = std::nullopt);
    /// Validates structure only. Used by importers that report orthogonality
    /// failures themselves.
    static StateSet create_unverified(std::vector<int> dims, int ambient_order, std::vector<ProductState> states,
                                      std::optional<Provenance> provenance = std::nullopt);

    const std::vector<int> &dims() const noexcept {
        return dims_;
    }
    int party_count() const noexcept {
        return static_cast<int>(dims_.size());
    }
    int ambient_order() const noexcept {
        return ambient_order_;
    }
    const std::vector<ProductState> &states() const noexcept {
        return states_;
    }
    size_t size() const noexcept {
        return states_.size();
    }
    const ProductState &operator[](size_t i) const {
        return states_[i];
    }
    const std::optional<Provenance> &provenance() const noexcept {
        return provenance_;
    }
    const std::vector<std::string> &party_names() const noexcept {
        return party_names_;
    }

    std::optional<size_t> find_label(const std::string &label) const;
    /// Sub-collection keeping labels and order of `indices`; provenance dropped.
    StateSet subset(const std::vector<size_t> &indices) const;
    StateSet with_party_names(std::vector<std::string> names) const;
    StateSet without_provenance() const;

    bool operator==(const StateSet &other) const = default;

   private:
    StateSet() = default;
    void validate_structure() const;

    std::vector<int> dims_;
    int ambient_order_ = 1;
    std::vector<ProductState> states_;
    std::optional<Provenance> provenance_;
    std::vector<std::string> party_names_;
};

/// A, B, C for up to three parties, A1..An beyond.
std::vector<std::string> default_party_names(int n);

LocalFactor build_factor(int dim, const std::vector<std::pair<int, Cyclotomic>> &terms);
/// Integer-coefficient shorthand, e.g. {{0, 1}, {1, -1}} for |0-1>.
LocalFactor build_factor(int dim, int order, const std::vector<std::pair<int, long>> &terms);
LocalFactor basis_ket(int dim, int index, int order);
/// |lo + (lo+1) + ... + hi>.
LocalFactor uniform_ket(int dim, int lo, int hi, int order);
LocalFactor lift_factor(const LocalFactor &u, int order);
LocalFactor kron(const LocalFactor &left, const LocalFactor &right);

/// sum_k conj(u_k) v_k.
Cyclotomic factor_inner(const LocalFactor &u, const LocalFactor &v);
Cyclotomic product_inner(const ProductState &p, const ProductState &q);
bool proportional(const LocalFactor &u, const LocalFactor &v);

struct OrthogonalityViolation {
    size_t first;
    size_t second;
    Cyclotomic value;
};

struct OrthogonalityReport {
    std::vector<OrthogonalityViolation> violations;

    bool orthogonal() const noexcept {
        return violations.empty();
    }
};

OrthogonalityReport check_mutual_orthogonality(const StateSet &set);

/// Merges each block of parties into one party whose factor is the Kronecker
/// product of the block's factors, leftmost party slowest-varying.
StateSet group_parties(const StateSet &set, const std::vector<std::vector<int>> &grouping);

/// Removes a party whose factors are pairwise proportional across the set.
StateSet strip_party(const StateSet &set, int party);

}  // namespace gnl

#endif

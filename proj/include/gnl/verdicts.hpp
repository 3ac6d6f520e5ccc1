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

#ifndef GNL_VERDICTS_HPP
#define GNL_VERDICTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnl/oplm.hpp"
#include "gnl/states.hpp"

namespace gnl {

/// A split of the parties into two nonempty sides. side_x always holds
/// party 0 so that every split has exactly one representation.
struct Bipartition {
    std::vector<int> side_x;
    std::vector<int> side_y;

    /// Bit k-1 of mask set puts party k on side_y.
    static Bipartition from_mask(int party_count, uint64_t mask);
    /// Throws InvalidPartition if the sides overlap, miss a party, are empty,
    /// or side_x does not contain party 0.
    void validate(int party_count) const;
    bool separates(int p, int q) const;
    /// e.g. "A|BC".
    std::string describe(const std::vector<std::string> &party_names) const;

    bool operator==(const Bipartition &other) const = default;
};

/// All 2^(n-1) - 1 bipartitions, ordered by mask.
std::vector<Bipartition> all_bipartitions(int party_count);

enum class Rule {
    StripIdentical,
    TwoPartyTrivialCore,
    NonorthogonalRider,
    /// Experimental: OPLM on each grouped side is trivial. Off by default.
    GroupedSidesTrivial,
};
std::string rule_name(Rule rule);
std::optional<Rule> parse_rule(const std::string &name);

/// Which rider factors are accepted when reducing to a two-party core.
enum class RiderPredicate {
    PairwiseNonorthogonal,
    ProportionalOnly,
};
/// Recorded in every certificate; verification requires an exact match.
std::string rule_version(RiderPredicate predicate);

/// The triviality of OPLMs is taken to rule out every LOCC protocol, not
/// only its first round. Certificates carry this tag.
extern const char *const kCertificateAssumption;

struct PairOverlap {
    size_t first;
    size_t second;
    Cyclotomic value;

    bool operator==(const PairOverlap &other) const = default;
};

/// Evidence that a party carries no distinguishing power over a subset.
/// For StripIdentical, scalars[k] times the rider factor of the first subset
/// state gives the factor of subset state k. For NonorthogonalRider,
/// overlaps lists every pair (positions within the subset) with its nonzero
/// inner product.
struct RiderEvidence {
    int party = 0;
    std::vector<Cyclotomic> scalars;
    std::vector<PairOverlap> overlaps;

    bool operator==(const RiderEvidence &other) const = default;
};

struct RuleCertificate {
    Bipartition bipartition;
    Rule rule = Rule::TwoPartyTrivialCore;
    std::vector<std::string> subset;
    int core_p = 0;
    int core_q = 0;
    /// Basis indices of each core party used by the subset; the core reports
    /// act on these local subspaces.
    std::vector<int> core_p_support;
    std::vector<int> core_q_support;
    std::vector<RiderEvidence> riders;
    OplmReport core_p_report;
    OplmReport core_q_report;
    std::string version;
    std::string assumption;
    /// FNV-1a over the certificate's canonical text (see certificate_digest).
    std::string digest;
};

/// Canonical text of every field except the digest.
std::string certificate_canonical_text(const RuleCertificate &cert);
std::string certificate_digest(const RuleCertificate &cert);

enum class UnknownReason {
    SearchExhausted,
    BudgetExhausted,
    TooLarge,
};
std::string unknown_reason_name(UnknownReason reason);

struct BipartitionVerdict {
    Bipartition bipartition;
    std::optional<RuleCertificate> certificate;
    std::optional<UnknownReason> unknown;
};

struct ReductionWitness {
    int party = 0;
    std::vector<int> index_subset;
    std::vector<size_t> first_part;
    std::vector<size_t> second_part;
};

enum class Genuineness { ProvenGenuine, Unknown };
enum class Irreducibility { ProvenIrreducible, ReducibleWithWitness, Undetermined };
enum class GnlType { TypeI, TypeII, Unknown };
std::string genuineness_name(Genuineness g);
std::string irreducibility_name(Irreducibility i);
std::string gnl_type_name(GnlType t);

struct IrreducibilityCheck {
    /// ProvenIrreducible or Undetermined; a ReductionWitness is needed to
    /// upgrade the latter.
    Irreducibility verdict = Irreducibility::Undetermined;
    std::vector<OplmReport> party_reports;
};

struct Classification {
    Genuineness genuine = Genuineness::Unknown;
    std::vector<BipartitionVerdict> per_bipartition;
    Irreducibility irreducible = Irreducibility::Undetermined;
    std::vector<OplmReport> party_reports;
    std::optional<ReductionWitness> reduction;
    GnlType gnl_type = GnlType::Unknown;
};

struct CertifyOptions {
    RiderPredicate rider = RiderPredicate::PairwiseNonorthogonal;
    bool grouped_sides = false;
    /// Wall-clock budget for the whole call; 0 reads GNL_BUDGET_MS, falling
    /// back to 60 s.
    int64_t budget_ms = 0;
    size_t max_search_states = 40;
};

IrreducibilityCheck check_irreducible(const StateSet &set);

/// Basis-aligned split of one party: every state's support lies inside T or
/// outside it. Parties are tried in order; T is the connected component (of
/// indices linked through shared supports) holding the highest used index.
/// first_part holds the states on the side of state 0.
std::optional<ReductionWitness> find_reduction(const StateSet &set);

/// True when the witness satisfies its invariants on the set.
bool check_reduction(const StateSet &set, const ReductionWitness &witness);

BipartitionVerdict certify_bipartition(const StateSet &set, const Bipartition &bp,
                                       const CertifyOptions &options = {});

Classification classify(const StateSet &set, const CertifyOptions &options = {});

struct CertificateCheck {
    std::vector<std::string> failures;

    bool ok() const {
        return failures.empty();
    }
};

/// Re-derives every claim of the certificate against the set.
CertificateCheck verify_certificate(const StateSet &set, const RuleCertificate &cert,
                                    RiderPredicate predicate = RiderPredicate::PairwiseNonorthogonal);

}  // namespace gnl

#endif

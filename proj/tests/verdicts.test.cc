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

#include "gnl/verdicts.hpp"

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "mutations.hpp"
#include "gnl/constructions.hpp"
#include "gnl/error.hpp"

using namespace gnl;

namespace {

std::vector<std::string> labels(std::initializer_list<int> ids) {
    std::vector<std::string> out;
    for (int i : ids) {
        out.push_back("phi_" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> label_range(int lo, int hi) {
    std::vector<std::string> out;
    for (int i = lo; i <= hi; i++) {
        out.push_back("phi_" + std::to_string(i));
    }
    return out;
}

Bipartition single(int party_count, int alone) {
    for (const auto &bp : all_bipartitions(party_count)) {
        if ((bp.side_y.size() == 1 && bp.side_y[0] == alone) || (alone == 0 && bp.side_x.size() == 1)) {
            return bp;
        }
    }
    throw std::logic_error("no such bipartition");
}

std::vector<StateSet> construction_grid() {
    return {gen_bipartite(3, 5),
            gen_type1_tripartite(4, 4, 4),
            gen_type1_tripartite(4, 4, 5),
            gen_type1_tripartite(4, 5, 5),
            gen_type1_tripartite(4, 4, 6),
            gen_type2_tripartite(3, 3, 3),
            gen_type2_tripartite(3, 3, 4),
            gen_type2_tripartite(3, 4, 5),
            gen_type1_npartite({4, 3, 3, 3}),
            gen_type2_npartite({3, 3, 3, 3})};
}

/// Canonical key of a bipartition after renaming parties through perm
/// (new party k is old party perm[k]).
std::set<int> side_of_zero(const Bipartition &bp) {
    return {bp.side_x.begin(), bp.side_x.end()};
}

}  // namespace

TEST(verdicts, bipartitions) {
    ASSERT_EQ(all_bipartitions(2).size(), 1u);
    ASSERT_EQ(all_bipartitions(3).size(), 3u);
    ASSERT_EQ(all_bipartitions(4).size(), 7u);
    ASSERT_EQ(all_bipartitions(5).size(), 15u);
    for (const auto &bp : all_bipartitions(4)) {
        bp.validate(4);
        ASSERT_EQ(bp.side_x.front(), 0);
    }
    Bipartition bp = Bipartition::from_mask(3, 0b10);
    ASSERT_EQ(bp.describe({"A", "B", "C"}), "AB|C");
    ASSERT_TRUE(bp.separates(0, 2));
    ASSERT_FALSE(bp.separates(0, 1));
    ASSERT_THROW((Bipartition{{1}, {0, 2}}.validate(3)), Error);
    ASSERT_THROW((Bipartition{{0, 1}, {1, 2}}.validate(3)), Error);
    ASSERT_THROW((Bipartition{{0, 1, 2}, {}}.validate(3)), Error);
}

TEST(verdicts, check_irreducible) {
    ASSERT_EQ(check_irreducible(gen_type2_tripartite(3, 4, 5)).verdict, Irreducibility::ProvenIrreducible);
    ASSERT_EQ(check_irreducible(gen_bipartite(3, 5)).verdict, Irreducibility::ProvenIrreducible);
    auto t1 = check_irreducible(gen_type1_tripartite(4, 4, 6));
    ASSERT_EQ(t1.verdict, Irreducibility::Undetermined);
    ASSERT_FALSE(t1.party_reports[0].trivial);
    ASSERT_TRUE(t1.party_reports[1].trivial);
    ASSERT_TRUE(t1.party_reports[2].trivial);
}

TEST(verdicts, find_reduction) {
    StateSet t1 = gen_type1_tripartite(4, 4, 6);
    auto w = find_reduction(t1);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->party, 0);
    ASSERT_EQ(w->index_subset, (std::vector<int>{3}));
    ASSERT_EQ(w->first_part.size(), 7u);
    ASSERT_EQ(w->second_part.size(), 11u);
    ASSERT_EQ(w->first_part.front(), 0u);
    ASSERT_TRUE(check_reduction(t1, *w));

    ASSERT_FALSE(find_reduction(gen_type2_tripartite(3, 4, 5)).has_value());

    StateSet n3 = gen_type1_npartite({4, 3, 3});
    auto wn = find_reduction(n3);
    ASSERT_TRUE(wn.has_value());
    ASSERT_EQ(wn->party, 0);
    ASSERT_EQ(wn->index_subset, (std::vector<int>{3}));
    // The split isolates the last block.
    ASSERT_EQ(wn->second_part.size(), 5u);
    ASSERT_EQ(wn->second_part.back(), n3.size() - 1);

    ReductionWitness bad = *w;
    bad.index_subset = {2};
    ASSERT_FALSE(check_reduction(t1, bad));
    bad = *w;
    std::swap(bad.first_part[0], bad.second_part[0]);
    ASSERT_FALSE(check_reduction(t1, bad));
}

TEST(verdicts, certify_examples) {
    StateSet t1 = gen_type1_tripartite(4, 4, 6);
    auto v = certify_bipartition(t1, single(3, 1));
    ASSERT_TRUE(v.certificate.has_value());
    ASSERT_EQ(v.certificate->subset, label_range(1, 7));
    ASSERT_EQ(v.certificate->core_p, 0);
    ASSERT_EQ(v.certificate->core_q, 1);
    ASSERT_EQ(v.certificate->rule, Rule::StripIdentical);
    ASSERT_EQ(v.certificate->riders.size(), 1u);
    ASSERT_EQ(v.certificate->riders[0].party, 2);

    StateSet t2 = gen_type2_tripartite(3, 4, 5);
    auto v2 = certify_bipartition(t2, single(3, 2));
    ASSERT_TRUE(v2.certificate.has_value());
    std::vector<std::string> want = labels({4});
    auto tail = label_range(7, 14);
    want.insert(want.end(), tail.begin(), tail.end());
    ASSERT_EQ(v2.certificate->subset, want);
    ASSERT_EQ(v2.certificate->core_p, 0);
    ASSERT_EQ(v2.certificate->core_q, 2);
    ASSERT_EQ(v2.certificate->rule, Rule::NonorthogonalRider);

    auto v3 = certify_bipartition(gen_bipartite(3, 5), all_bipartitions(2)[0]);
    ASSERT_EQ(v3.certificate->rule, Rule::TwoPartyTrivialCore);
}

TEST(verdicts, product_bases_are_never_certified) {
    for (const auto &dims : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
        StateSet basis = fixtures::product_basis(dims);
        Classification c = classify(basis);
        ASSERT_EQ(c.gnl_type, GnlType::Unknown);
        ASSERT_EQ(c.genuine, Genuineness::Unknown);
        for (const auto &v : c.per_bipartition) {
            ASSERT_FALSE(v.certificate.has_value());
            ASSERT_EQ(v.unknown, UnknownReason::SearchExhausted);
        }
    }
}

TEST(verdicts, too_large_is_reported) {
    CertifyOptions options;
    options.max_search_states = 4;
    auto v = certify_bipartition(fixtures::product_basis({3, 3}), all_bipartitions(2)[0], options);
    ASSERT_EQ(v.unknown, UnknownReason::TooLarge);
}

TEST(verdicts, classify_construction_grid) {
    for (const auto &s : construction_grid()) {
        Classification c = classify(s);
        const std::string family = s.provenance()->family;
        ASSERT_EQ(c.genuine, Genuineness::ProvenGenuine) << family;
        GnlType want = family.rfind("type1", 0) == 0 ? GnlType::TypeI : GnlType::TypeII;
        ASSERT_EQ(c.gnl_type, want) << family;
        for (const auto &v : c.per_bipartition) {
            ASSERT_TRUE(v.certificate.has_value());
            auto check = verify_certificate(s, *v.certificate);
            ASSERT_TRUE(check.ok()) << family << ": " << check.failures.front();
        }
        // Type exclusivity.
        ASSERT_FALSE(c.irreducible == Irreducibility::ProvenIrreducible && c.reduction.has_value());
        if (c.reduction) {
            ASSERT_TRUE(check_reduction(s, *c.reduction));
            ASSERT_FALSE(c.party_reports[c.reduction->party].trivial);
        }
    }
}

TEST(verdicts, certificate_uses_the_core_block_subsets) {
    Classification c = classify(gen_type1_tripartite(4, 4, 6));
    std::set<std::vector<std::string>> subsets;
    for (const auto &v : c.per_bipartition) {
        subsets.insert(v.certificate->subset);
    }
    ASSERT_EQ(subsets, (std::set<std::vector<std::string>>{label_range(1, 7), label_range(8, 18)}));
    ASSERT_EQ(c.reduction->index_subset, (std::vector<int>{3}));
}

TEST(verdicts, superset_monotonicity) {
    StateSet full = gen_type2_tripartite(3, 4, 5);
    // Certify on a subset without provenance, then check against the full set.
    std::vector<size_t> members = {3, 6, 7, 8, 9, 10, 11, 12, 13};
    StateSet sub = full.subset(members);
    auto v = certify_bipartition(sub, single(3, 2));
    ASSERT_TRUE(v.certificate.has_value());
    ASSERT_TRUE(verify_certificate(sub, *v.certificate).ok());
    ASSERT_TRUE(verify_certificate(full, *v.certificate).ok());
}

TEST(verdicts, search_without_provenance_agrees) {
    for (const auto &s : construction_grid()) {
        Classification with = classify(s);
        Classification without = classify(s.without_provenance());
        ASSERT_EQ(with.gnl_type, without.gnl_type) << s.provenance()->family;
        for (const auto &v : without.per_bipartition) {
            ASSERT_TRUE(verify_certificate(s, *v.certificate).ok());
        }
    }
}

TEST(verdicts, permutation_equivariance) {
    std::vector<std::pair<StateSet, std::vector<int>>> cases = {
        {gen_type1_tripartite(4, 4, 6), {2, 0, 1}},
        {gen_type2_tripartite(3, 4, 5), {1, 2, 0}},
        {gen_type1_npartite({4, 3, 3, 3}), {3, 1, 0, 2}},
        {fixtures::product_basis({2, 3}), {1, 0}},
    };
    for (const auto &[s, perm] : cases) {
        StateSet moved = fixtures::permute_parties(s, perm);
        Classification a = classify(s);
        Classification b = classify(moved);
        ASSERT_EQ(a.gnl_type, b.gnl_type);
        const int n = s.party_count();
        for (const auto &vb : b.per_bipartition) {
            // Map the moved split back to original party indices.
            std::set<int> orig;
            for (int k : vb.bipartition.side_x) {
                orig.insert(perm[k]);
            }
            if (!orig.count(0)) {
                std::set<int> other;
                for (int k = 0; k < n; k++) {
                    if (!orig.count(k)) {
                        other.insert(k);
                    }
                }
                orig = other;
            }
            bool found = false;
            for (const auto &va : a.per_bipartition) {
                if (side_of_zero(va.bipartition) == orig) {
                    found = true;
                    ASSERT_EQ(va.certificate.has_value(), vb.certificate.has_value());
                }
            }
            ASSERT_TRUE(found);
        }
    }
}

TEST(verdicts, scale_and_relabel_invariance) {
    for (const auto &s : {gen_type1_tripartite(4, 4, 5), gen_type2_tripartite(3, 3, 4)}) {
        GnlType want = classify(s).gnl_type;
        const int n = s.ambient_order();
        // Rescale one factor of every state.
        std::vector<ProductState> scaled = s.states();
        for (size_t i = 0; i < scaled.size(); i++) {
            for (auto &a : scaled[i].factors[i % s.party_count()].amplitudes) {
                a *= Rational(i % 2 ? -3 : 5, 2);
            }
        }
        StateSet rescaled = StateSet::create(s.dims(), n, scaled);
        ASSERT_EQ(classify(rescaled).gnl_type, want);

        // Reverse the computational basis of party B.
        std::vector<ProductState> relabeled = s.states();
        for (auto &st : relabeled) {
            std::reverse(st.factors[1].amplitudes.begin(), st.factors[1].amplitudes.end());
        }
        ASSERT_EQ(classify(StateSet::create(s.dims(), n, relabeled)).gnl_type, want);
    }
}

TEST(verdicts, single_field_mutations_fail) {
    for (const auto &s : {gen_type1_tripartite(4, 4, 6), gen_type2_tripartite(3, 4, 5), gen_type2_npartite({3, 3, 3, 3})}) {
        Classification c = classify(s);
        for (const auto &v : c.per_bipartition) {
            const RuleCertificate &good = *v.certificate;
            ASSERT_TRUE(verify_certificate(s, good).ok());
            for (const auto &[name, mutate] : mutations::single_field()) {
                RuleCertificate m = good;
                mutate(m);
                ASSERT_FALSE(verify_certificate(s, m).ok()) << name << " (stale digest)";
                m.digest = certificate_digest(m);
                ASSERT_FALSE(verify_certificate(s, m).ok()) << name << " (resealed)";
            }
            RuleCertificate stale = good;
            stale.digest[0] = stale.digest[0] == '0' ? '1' : '0';
            ASSERT_FALSE(verify_certificate(s, stale).ok());
        }
    }
}

TEST(verdicts, rider_predicate_is_configurable) {
    StateSet t2 = gen_type2_tripartite(3, 4, 5);
    CertifyOptions strict;
    strict.rider = RiderPredicate::ProportionalOnly;
    Classification c = classify(t2, strict);
    for (const auto &v : c.per_bipartition) {
        if (v.certificate) {
            ASSERT_NE(v.certificate->rule, Rule::NonorthogonalRider);
            ASSERT_TRUE(verify_certificate(t2, *v.certificate, RiderPredicate::ProportionalOnly).ok());
        }
    }
    Classification loose = classify(t2);
    const auto &cert = *loose.per_bipartition[0].certificate;
    ASSERT_EQ(cert.rule, Rule::NonorthogonalRider);
    ASSERT_FALSE(verify_certificate(t2, cert, RiderPredicate::ProportionalOnly).ok());
}

TEST(verdicts, grouped_sides_flag) {
    CertifyOptions options;
    options.grouped_sides = true;
    Classification basis = classify(fixtures::product_basis({2, 2, 2}), options);
    ASSERT_EQ(basis.gnl_type, GnlType::Unknown);
    StateSet t2 = gen_type2_tripartite(3, 3, 3);
    ASSERT_EQ(classify(t2, options).gnl_type, GnlType::TypeII);
}

TEST(verdicts, rejects_non_orthogonal_input) {
    StateSet s = StateSet::create_unverified({2, 2}, 2,
                                             {{"a", {basis_ket(2, 0, 2), basis_ket(2, 0, 2)}},
                                              {"b", {basis_ket(2, 0, 2), uniform_ket(2, 0, 1, 2)}}});
    ASSERT_THROW(classify(s), Error);
}

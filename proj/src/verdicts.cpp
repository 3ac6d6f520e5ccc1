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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "gnl/detail/field_ops.hpp"
#include "gnl/error.hpp"

namespace gnl {

const char *const kCertificateAssumption = "oplm-triviality-excludes-locc";

Bipartition Bipartition::from_mask(int party_count, uint64_t mask) {
    Bipartition bp;
    bp.side_x.push_back(0);
    for (int k = 1; k < party_count; k++) {
        if (mask >> (k - 1) & 1) {
            bp.side_y.push_back(k);
        } else {
            bp.side_x.push_back(k);
        }
    }
    return bp;
}

void Bipartition::validate(int party_count) const {
    if (side_x.empty() || side_y.empty()) {
        throw Error(ErrorKind::InvalidPartition, "bipartition side is empty");
    }
    if (side_x.front() != 0) {
        throw Error(ErrorKind::InvalidPartition, "side_x must start with party 0");
    }
    std::vector<int> all(side_x);
    all.insert(all.end(), side_y.begin(), side_y.end());
    if (!std::is_sorted(side_x.begin(), side_x.end()) || !std::is_sorted(side_y.begin(), side_y.end())) {
        throw Error(ErrorKind::InvalidPartition, "bipartition sides must be sorted");
    }
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != party_count) {
        throw Error(ErrorKind::InvalidPartition, "bipartition does not cover every party exactly once");
    }
    for (int k = 0; k < party_count; k++) {
        if (all[k] != k) {
            throw Error(ErrorKind::InvalidPartition, "bipartition does not cover every party exactly once");
        }
    }
}

bool Bipartition::separates(int p, int q) const {
    auto in_x = [&](int k) { return std::find(side_x.begin(), side_x.end(), k) != side_x.end(); };
    auto in_y = [&](int k) { return std::find(side_y.begin(), side_y.end(), k) != side_y.end(); };
    return (in_x(p) && in_y(q)) || (in_y(p) && in_x(q));
}

std::string Bipartition::describe(const std::vector<std::string> &party_names) const {
    std::string out;
    auto name = [&](int k) {
        return k < static_cast<int>(party_names.size()) ? party_names[k] : std::to_string(k);
    };
    for (int k : side_x) {
        out += name(k);
    }
    out += "|";
    for (int k : side_y) {
        out += name(k);
    }
    return out;
}

std::vector<Bipartition> all_bipartitions(int party_count) {
    if (party_count < 2 || party_count > 32) {
        throw Error(ErrorKind::InvalidPartition, "bipartitions need between 2 and 32 parties");
    }
    std::vector<Bipartition> out;
    uint64_t end = uint64_t{1} << (party_count - 1);
    for (uint64_t mask = 1; mask < end; mask++) {
        out.push_back(Bipartition::from_mask(party_count, mask));
    }
    return out;
}

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::StripIdentical:
            return "StripIdentical";
        case Rule::TwoPartyTrivialCore:
            return "TwoPartyTrivialCore";
        case Rule::NonorthogonalRider:
            return "NonorthogonalRider";
        case Rule::GroupedSidesTrivial:
            return "GroupedSidesTrivial";
    }
    return "?";
}

std::optional<Rule> parse_rule(const std::string &name) {
    for (Rule r : {Rule::StripIdentical, Rule::TwoPartyTrivialCore, Rule::NonorthogonalRider,
                   Rule::GroupedSidesTrivial}) {
        if (rule_name(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

std::string rule_version(RiderPredicate predicate) {
    return predicate == RiderPredicate::PairwiseNonorthogonal ? "rider-rule/1:pairwise-nonorthogonal"
                                                              : "rider-rule/1:proportional-only";
}

std::string unknown_reason_name(UnknownReason reason) {
    switch (reason) {
        case UnknownReason::SearchExhausted:
            return "SearchExhausted";
        case UnknownReason::BudgetExhausted:
            return "BudgetExhausted";
        case UnknownReason::TooLarge:
            return "TooLarge";
    }
    return "?";
}

std::string genuineness_name(Genuineness g) {
    return g == Genuineness::ProvenGenuine ? "ProvenGenuine" : "Unknown";
}

std::string irreducibility_name(Irreducibility i) {
    switch (i) {
        case Irreducibility::ProvenIrreducible:
            return "ProvenIrreducible";
        case Irreducibility::ReducibleWithWitness:
            return "ReducibleWithWitness";
        case Irreducibility::Undetermined:
            return "Undetermined";
    }
    return "?";
}

std::string gnl_type_name(GnlType t) {
    switch (t) {
        case GnlType::TypeI:
            return "TypeI";
        case GnlType::TypeII:
            return "TypeII";
        case GnlType::Unknown:
            return "Unknown";
    }
    return "?";
}

namespace {

void write_ints(std::ostream &out, const std::vector<int> &v) {
    for (size_t k = 0; k < v.size(); k++) {
        out << (k ? "," : "") << v[k];
    }
}

void write_report(std::ostream &out, const OplmReport &r) {
    out << "group=";
    write_ints(out, r.party_group);
    out << ";dim=" << r.unknown_dim << ";solution_dim=" << r.solution_dim << ";trivial=" << r.trivial << ";basis=";
    for (const auto &b : r.basis) {
        out << "[" << b.order();
        for (const auto &x : b.flat()) {
            out << "|" << x.to_literal();
        }
        out << "]";
    }
    out << ";witness=" << (r.witness ? "yes" : "no") << ";trace=";
    for (const auto &t : r.trace) {
        out << "(" << t.unknown_row << "," << t.unknown_col << "," << t.first << "," << t.second << ")";
    }
}

bool same_report(const OplmReport &a, const OplmReport &b) {
    if (a.party_group != b.party_group || a.unknown_dim != b.unknown_dim || a.solution_dim != b.solution_dim ||
        a.trivial != b.trivial || !(a.basis == b.basis) || a.witness.has_value() != b.witness.has_value() ||
        a.trace.size() != b.trace.size()) {
        return false;
    }
    for (size_t k = 0; k < a.trace.size(); k++) {
        const auto &x = a.trace[k];
        const auto &y = b.trace[k];
        if (x.unknown_row != y.unknown_row || x.unknown_col != y.unknown_col || x.first != y.first ||
            x.second != y.second) {
            return false;
        }
    }
    return true;
}

using Clock = std::chrono::steady_clock;

int64_t resolve_budget_ms(int64_t requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("GNL_BUDGET_MS")) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) {
            return v;
        }
    }
    return 60000;
}

std::vector<int> joint_support(const StateSet &set, const std::vector<size_t> &subset, int party) {
    std::vector<bool> used(set.dims()[party], false);
    for (size_t i : subset) {
        for (int k : set[i].factors[party].support()) {
            used[k] = true;
        }
    }
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(used.size()); k++) {
        if (used[k]) {
            out.push_back(k);
        }
    }
    return out;
}

LocalFactor compress(const LocalFactor &f, const std::vector<int> &support) {
    LocalFactor out{static_cast<int>(support.size()), {}};
    for (int k : support) {
        out.amplitudes.push_back(f.amplitudes[k]);
    }
    return out;
}

/// The subset on two core parties, each compressed to the span of the basis
/// vectors its factors use.
StateSet compressed_core(const StateSet &set, const std::vector<size_t> &subset, int p, int q,
                         const std::vector<int> &p_support, const std::vector<int> &q_support) {
    std::vector<ProductState> states;
    for (size_t i : subset) {
        states.push_back({set[i].label, {compress(set[i].factors[p], p_support), compress(set[i].factors[q], q_support)}});
    }
    return StateSet::create_unverified({static_cast<int>(p_support.size()), static_cast<int>(q_support.size())},
                                       set.ambient_order(), std::move(states))
        .with_party_names({set.party_names()[p], set.party_names()[q]});
}

std::vector<int> other_parties(int party_count, const std::vector<int> &excluded) {
    std::vector<int> out;
    for (int p = 0; p < party_count; p++) {
        if (std::find(excluded.begin(), excluded.end(), p) == excluded.end()) {
            out.push_back(p);
        }
    }
    return out;
}

bool all_proportional(const StateSet &set, const std::vector<size_t> &subset, int party) {
    for (size_t k = 1; k < subset.size(); k++) {
        if (!proportional(set[subset[0]].factors[party], set[subset[k]].factors[party])) {
            return false;
        }
    }
    return true;
}

std::vector<Cyclotomic> proportionality_scalars(const StateSet &set, const std::vector<size_t> &subset, int party) {
    const LocalFactor &base = set[subset[0]].factors[party];
    size_t pivot = 0;
    while (base.amplitudes[pivot].is_zero()) {
        pivot++;
    }
    std::vector<Cyclotomic> out;
    for (size_t i : subset) {
        out.push_back(detail::exact_quotient(set[i].factors[party].amplitudes[pivot], base.amplitudes[pivot]));
    }
    return out;
}

std::optional<std::vector<PairOverlap>> pair_overlaps(const StateSet &set, const std::vector<size_t> &subset,
                                                      int party) {
    std::vector<PairOverlap> out;
    for (size_t a = 0; a < subset.size(); a++) {
        for (size_t b = a + 1; b < subset.size(); b++) {
            Cyclotomic v = factor_inner(set[subset[a]].factors[party], set[subset[b]].factors[party]);
            if (v.is_zero()) {
                return std::nullopt;
            }
            out.push_back({a, b, std::move(v)});
        }
    }
    return out;
}

OplmReport core_report(const StateSet &restricted, int local_party, std::vector<int> original_group) {
    OplmReport r = oplm_report(restricted, {local_party});
    r.party_group = std::move(original_group);
    return r;
}

void seal(RuleCertificate &cert, RiderPredicate predicate) {
    cert.version = rule_version(predicate);
    cert.assumption = kCertificateAssumption;
    cert.digest = certificate_digest(cert);
}

std::vector<std::string> labels_of(const StateSet &set, const std::vector<size_t> &subset) {
    std::vector<std::string> out;
    for (size_t i : subset) {
        out.push_back(set[i].label);
    }
    return out;
}

/// Attempts the rider reduction on one subset and core pair.
std::optional<RuleCertificate> try_core(const StateSet &set, const Bipartition &bp, const std::vector<size_t> &subset,
                                        int p, int q, RiderPredicate predicate) {
    if (subset.size() < 2) {
        return std::nullopt;
    }
    RuleCertificate cert;
    cert.bipartition = bp;
    cert.core_p = p;
    cert.core_q = q;
    cert.subset = labels_of(set, subset);
    std::vector<int> riders = other_parties(set.party_count(), {p, q});
    bool strip = true;
    for (int r : riders) {
        if (!all_proportional(set, subset, r)) {
            strip = false;
            if (predicate == RiderPredicate::ProportionalOnly) {
                return std::nullopt;
            }
        }
    }
    for (int r : riders) {
        RiderEvidence ev;
        ev.party = r;
        if (strip) {
            ev.scalars = proportionality_scalars(set, subset, r);
        } else {
            auto overlaps = pair_overlaps(set, subset, r);
            if (!overlaps) {
                return std::nullopt;
            }
            ev.overlaps = std::move(*overlaps);
        }
        cert.riders.push_back(std::move(ev));
    }
    cert.rule = riders.empty() ? Rule::TwoPartyTrivialCore : strip ? Rule::StripIdentical : Rule::NonorthogonalRider;

    cert.core_p_support = joint_support(set, subset, p);
    cert.core_q_support = joint_support(set, subset, q);
    if (cert.core_p_support.size() < 2 || cert.core_q_support.size() < 2) {
        return std::nullopt;
    }
    StateSet core = compressed_core(set, subset, p, q, cert.core_p_support, cert.core_q_support);
    if (!check_mutual_orthogonality(core).orthogonal()) {
        return std::nullopt;
    }
    cert.core_p_report = core_report(core, 0, {p});
    if (!cert.core_p_report.trivial) {
        return std::nullopt;
    }
    cert.core_q_report = core_report(core, 1, {q});
    if (!cert.core_q_report.trivial) {
        return std::nullopt;
    }
    seal(cert, predicate);
    return cert;
}

std::optional<RuleCertificate> try_grouped(const StateSet &set, const Bipartition &bp, RiderPredicate predicate) {
    std::vector<size_t> all(set.size());
    std::iota(all.begin(), all.end(), size_t{0});
    StateSet grouped = group_parties(set, {bp.side_x, bp.side_y});
    RuleCertificate cert;
    cert.bipartition = bp;
    cert.rule = Rule::GroupedSidesTrivial;
    cert.subset = labels_of(set, all);
    cert.core_p = bp.side_x.front();
    cert.core_q = bp.side_y.front();
    cert.core_p_report = core_report(grouped, 0, bp.side_x);
    if (!cert.core_p_report.trivial) {
        return std::nullopt;
    }
    cert.core_q_report = core_report(grouped, 1, bp.side_y);
    if (!cert.core_q_report.trivial) {
        return std::nullopt;
    }
    seal(cert, predicate);
    return cert;
}

/// Maximal cliques of a graph on at most 64 vertices (Bron-Kerbosch with
/// pivoting). Returns false if the deadline passed mid-enumeration.
class CliqueEnumerator {
   public:
    CliqueEnumerator(const std::vector<uint64_t> &adjacency, Clock::time_point deadline)
        : adj_(adjacency), deadline_(deadline) {
    }

    bool run(std::vector<uint64_t> &out) {
        uint64_t all = adj_.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << adj_.size()) - 1;
        out_ = &out;
        return expand(0, all, 0);
    }

   private:
    bool expand(uint64_t r, uint64_t p, uint64_t x) {
        if (++steps_ % 1024 == 0 && Clock::now() > deadline_) {
            return false;
        }
        if (p == 0 && x == 0) {
            out_->push_back(r);
            return true;
        }
        uint64_t px = p | x;
        int pivot = __builtin_ctzll(px);
        int best = -1;
        for (uint64_t s = px; s; s &= s - 1) {
            int u = __builtin_ctzll(s);
            int c = __builtin_popcountll(p & adj_[u]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (uint64_t s = p & ~adj_[pivot]; s; s &= s - 1) {
            int v = __builtin_ctzll(s);
            uint64_t bit = uint64_t{1} << v;
            if (!expand(r | bit, p & adj_[v], x & adj_[v])) {
                return false;
            }
            p &= ~bit;
            x |= bit;
        }
        return true;
    }

    const std::vector<uint64_t> &adj_;
    Clock::time_point deadline_;
    std::vector<uint64_t> *out_ = nullptr;
    uint64_t steps_ = 0;
};

/// Splits a subset until each core party's support is connected (indices
/// linked through a shared factor). A disconnected core support always
/// admits a nontrivial OPLM, so only connected pieces can certify.
void connected_pieces(const StateSet &set, const std::vector<size_t> &subset, int p, int q,
                      std::vector<std::vector<size_t>> &out) {
    for (int party : {p, q}) {
        const int d = set.dims()[party];
        std::vector<int> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int i) {
            while (parent[i] != i) {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            return i;
        };
        for (size_t i : subset) {
            auto support = set[i].factors[party].support();
            for (size_t k = 1; k < support.size(); k++) {
                parent[find(support[k])] = find(support[0]);
            }
        }
        std::vector<std::vector<size_t>> pieces;
        std::vector<int> roots;
        for (size_t i : subset) {
            int root = find(set[i].factors[party].support().front());
            auto it = std::find(roots.begin(), roots.end(), root);
            if (it == roots.end()) {
                roots.push_back(root);
                pieces.push_back({i});
            } else {
                pieces[it - roots.begin()].push_back(i);
            }
        }
        if (pieces.size() > 1) {
            for (const auto &piece : pieces) {
                if (piece.size() >= 2) {
                    connected_pieces(set, piece, p, q, out);
                }
            }
            return;
        }
    }
    out.push_back(subset);
}

bool rider_compatible(const LocalFactor &u, const LocalFactor &v, RiderPredicate predicate) {
    if (predicate == RiderPredicate::ProportionalOnly) {
        return proportional(u, v);
    }
    return !factor_inner(u, v).is_zero();
}

BipartitionVerdict certify_until(const StateSet &set, const Bipartition &bp, const CertifyOptions &options,
                                 Clock::time_point deadline) {
    bp.validate(set.party_count());
    BipartitionVerdict verdict{bp, std::nullopt, std::nullopt};

    if (const auto &prov = set.provenance()) {
        for (const auto &block : prov->blocks) {
            int p = std::min(block.core_p, block.core_q);
            int q = std::max(block.core_p, block.core_q);
            if (!bp.separates(p, q)) {
                continue;
            }
            std::vector<size_t> members(block.members);
            std::sort(members.begin(), members.end());
            if (auto cert = try_core(set, bp, members, p, q, options.rider)) {
                verdict.certificate = std::move(cert);
                return verdict;
            }
        }
    }

    const size_t limit = std::min<size_t>(options.max_search_states, 64);
    if (set.size() > limit) {
        verdict.unknown = UnknownReason::TooLarge;
    } else {
        const size_t n = set.size();
        for (int p = 0; p < set.party_count() && !verdict.unknown; p++) {
            for (int q = p + 1; q < set.party_count(); q++) {
                if (!bp.separates(p, q)) {
                    continue;
                }
                std::vector<int> riders = other_parties(set.party_count(), {p, q});
                std::vector<uint64_t> adj(n, 0);
                for (size_t i = 0; i < n; i++) {
                    for (size_t j = i + 1; j < n; j++) {
                        bool ok = true;
                        for (int r : riders) {
                            if (!rider_compatible(set[i].factors[r], set[j].factors[r], options.rider)) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            adj[i] |= uint64_t{1} << j;
                            adj[j] |= uint64_t{1} << i;
                        }
                    }
                }
                std::vector<uint64_t> cliques;
                if (!CliqueEnumerator(adj, deadline).run(cliques)) {
                    verdict.unknown = UnknownReason::BudgetExhausted;
                    break;
                }
                std::vector<std::vector<size_t>> ordered;
                for (uint64_t c : cliques) {
                    std::vector<size_t> members;
                    for (uint64_t s = c; s; s &= s - 1) {
                        members.push_back(static_cast<size_t>(__builtin_ctzll(s)));
                    }
                    if (members.size() >= 2) {
                        connected_pieces(set, members, p, q, ordered);
                    }
                }
                std::sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
                    return a.size() != b.size() ? a.size() > b.size() : a < b;
                });
                ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
                for (const auto &members : ordered) {
                    if (Clock::now() > deadline) {
                        verdict.unknown = UnknownReason::BudgetExhausted;
                        break;
                    }
                    if (auto cert = try_core(set, bp, members, p, q, options.rider)) {
                        verdict.certificate = std::move(cert);
                        return verdict;
                    }
                }
                if (verdict.unknown) {
                    break;
                }
            }
        }
    }

    if (options.grouped_sides) {
        if (auto cert = try_grouped(set, bp, options.rider)) {
            verdict.certificate = std::move(cert);
            verdict.unknown.reset();
            return verdict;
        }
    }
    if (!verdict.unknown) {
        verdict.unknown = UnknownReason::SearchExhausted;
    }
    return verdict;
}

void require_orthogonal(const StateSet &set) {
    auto report = check_mutual_orthogonality(set);
    if (!report.orthogonal()) {
        const auto &v = report.violations.front();
        throw Error(ErrorKind::NonOrthogonal,
                    "states " + set[v.first].label + " and " + set[v.second].label + " are not orthogonal");
    }
}

}  // namespace

std::string certificate_canonical_text(const RuleCertificate &cert) {
    std::ostringstream out;
    out << "x=";
    write_ints(out, cert.bipartition.side_x);
    out << "\ny=";
    write_ints(out, cert.bipartition.side_y);
    out << "\nrule=" << rule_name(cert.rule) << "\nsubset=";
    for (size_t k = 0; k < cert.subset.size(); k++) {
        out << (k ? "," : "") << cert.subset[k].size() << ":" << cert.subset[k];
    }
    out << "\ncore=" << cert.core_p << "," << cert.core_q << "\ncore_p_support=";
    write_ints(out, cert.core_p_support);
    out << "\ncore_q_support=";
    write_ints(out, cert.core_q_support);
    out << "\n";
    for (const auto &r : cert.riders) {
        out << "rider=" << r.party << ";scalars=";
        for (const auto &s : r.scalars) {
            out << "[" << s.order() << ":" << s.to_literal() << "]";
        }
        out << ";overlaps=";
        for (const auto &o : r.overlaps) {
            out << "(" << o.first << "," << o.second << "," << o.value.order() << ":" << o.value.to_literal() << ")";
        }
        out << "\n";
    }
    out << "core_p_report=";
    write_report(out, cert.core_p_report);
    out << "\ncore_q_report=";
    write_report(out, cert.core_q_report);
    out << "\nversion=" << cert.version << "\nassumption=" << cert.assumption << "\n";
    return out.str();
}

std::string certificate_digest(const RuleCertificate &cert) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : certificate_canonical_text(cert)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

IrreducibilityCheck check_irreducible(const StateSet &set) {
    IrreducibilityCheck out;
    bool all_trivial = true;
    for (int p = 0; p < set.party_count(); p++) {
        out.party_reports.push_back(oplm_report(set, {p}));
        all_trivial = all_trivial && out.party_reports.back().trivial;
    }
    out.verdict = all_trivial ? Irreducibility::ProvenIrreducible : Irreducibility::Undetermined;
    return out;
}

std::optional<ReductionWitness> find_reduction(const StateSet &set) {
    if (set.size() < 2) {
        return std::nullopt;
    }
    for (int p = 0; p < set.party_count(); p++) {
        const int d = set.dims()[p];
        std::vector<int> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int i) {
            while (parent[i] != i) {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            return i;
        };
        std::vector<bool> used(d, false);
        for (const auto &st : set.states()) {
            auto support = st.factors[p].support();
            for (size_t k = 0; k < support.size(); k++) {
                used[support[k]] = true;
                if (k) {
                    parent[find(support[k])] = find(support[0]);
                }
            }
        }
        int highest = d - 1;
        while (highest >= 0 && !used[highest]) {
            highest--;
        }
        if (highest < 0) {
            continue;
        }
        int root = find(highest);
        ReductionWitness w;
        w.party = p;
        for (int i = 0; i < d; i++) {
            if (used[i] && find(i) == root) {
                w.index_subset.push_back(i);
            }
        }
        auto in_t = [&](size_t s) { return find(set[s].factors[p].support().front()) == root; };
        bool first_in_t = in_t(0);
        for (size_t s = 0; s < set.size(); s++) {
            (in_t(s) == first_in_t ? w.first_part : w.second_part).push_back(s);
        }
        if (!w.second_part.empty()) {
            return w;
        }
    }
    return std::nullopt;
}

bool check_reduction(const StateSet &set, const ReductionWitness &w) {
    if (w.party < 0 || w.party >= set.party_count()) {
        return false;
    }
    const int d = set.dims()[w.party];
    std::vector<bool> in_t(d, false);
    for (size_t k = 0; k < w.index_subset.size(); k++) {
        int i = w.index_subset[k];
        if (i < 0 || i >= d || in_t[i] || (k && i < w.index_subset[k - 1])) {
            return false;
        }
        in_t[i] = true;
    }
    if (w.index_subset.empty() || static_cast<int>(w.index_subset.size()) == d) {
        return false;
    }
    if (w.first_part.empty() || w.second_part.empty() || w.first_part.size() + w.second_part.size() != set.size()) {
        return false;
    }
    std::vector<int> side(set.size(), -1);
    for (int part = 0; part < 2; part++) {
        for (size_t s : part ? w.second_part : w.first_part) {
            if (s >= set.size() || side[s] != -1) {
                return false;
            }
            side[s] = part;
        }
    }
    // Each part must sit on one side of T, the two parts on opposite sides.
    int first_side = -1;
    for (size_t s = 0; s < set.size(); s++) {
        auto support = set[s].factors[w.party].support();
        bool inside = in_t[support.front()];
        for (int i : support) {
            if (in_t[i] != inside) {
                return false;
            }
        }
        int color = inside ? 1 : 0;
        if (side[s] == 0) {
            if (first_side == -1) {
                first_side = color;
            } else if (first_side != color) {
                return false;
            }
        }
    }
    for (size_t s : w.second_part) {
        bool inside = in_t[set[s].factors[w.party].support().front()];
        if ((inside ? 1 : 0) == first_side) {
            return false;
        }
    }
    return true;
}

BipartitionVerdict certify_bipartition(const StateSet &set, const Bipartition &bp, const CertifyOptions &options) {
    require_orthogonal(set);
    auto deadline = Clock::now() + std::chrono::milliseconds(resolve_budget_ms(options.budget_ms));
    return certify_until(set, bp, options, deadline);
}

Classification classify(const StateSet &set, const CertifyOptions &options) {
    require_orthogonal(set);
    auto deadline = Clock::now() + std::chrono::milliseconds(resolve_budget_ms(options.budget_ms));
    Classification out;
    bool all_certified = true;
    for (const auto &bp : all_bipartitions(set.party_count())) {
        out.per_bipartition.push_back(certify_until(set, bp, options, deadline));
        all_certified = all_certified && out.per_bipartition.back().certificate.has_value();
    }
    out.genuine = all_certified ? Genuineness::ProvenGenuine : Genuineness::Unknown;

    IrreducibilityCheck irr = check_irreducible(set);
    out.party_reports = std::move(irr.party_reports);
    out.reduction = find_reduction(set);
    if (out.reduction) {
        if (irr.verdict == Irreducibility::ProvenIrreducible || out.party_reports[out.reduction->party].trivial) {
            throw Error(ErrorKind::Internal, "reduction witness found on a party with trivial OPLMs");
        }
        out.irreducible = Irreducibility::ReducibleWithWitness;
    } else {
        out.irreducible = irr.verdict;
    }

    if (out.genuine == Genuineness::ProvenGenuine) {
        if (out.irreducible == Irreducibility::ProvenIrreducible) {
            out.gnl_type = GnlType::TypeII;
        } else if (out.irreducible == Irreducibility::ReducibleWithWitness) {
            out.gnl_type = GnlType::TypeI;
        }
    }
    return out;
}

CertificateCheck verify_certificate(const StateSet &set, const RuleCertificate &cert, RiderPredicate predicate) {
    CertificateCheck check;
    auto fail = [&](std::string msg) { check.failures.push_back(std::move(msg)); };

    if (cert.digest != certificate_digest(cert)) {
        fail("digest does not match certificate contents");
    }
    if (cert.version != rule_version(predicate)) {
        fail("rule version '" + cert.version + "' does not match '" + rule_version(predicate) + "'");
    }
    if (cert.assumption != kCertificateAssumption) {
        fail("unexpected assumption tag '" + cert.assumption + "'");
    }
    try {
        cert.bipartition.validate(set.party_count());
    } catch (const Error &e) {
        fail(std::string("bipartition: ") + e.what());
        return check;
    }

    std::vector<size_t> subset;
    for (const auto &label : cert.subset) {
        auto idx = set.find_label(label);
        if (!idx) {
            fail("subset label '" + label + "' is not in the set");
            return check;
        }
        if (!subset.empty() && *idx <= subset.back()) {
            fail("subset labels are repeated or out of set order at '" + label + "'");
            return check;
        }
        subset.push_back(*idx);
    }
    if (subset.size() < 2) {
        fail("subset needs at least two states");
        return check;
    }

    const int n = set.party_count();
    if (cert.core_p < 0 || cert.core_p >= n || cert.core_q < 0 || cert.core_q >= n) {
        fail("core party out of range");
        return check;
    }

    if (cert.rule == Rule::GroupedSidesTrivial) {
        if (cert.core_p != cert.bipartition.side_x.front() || cert.core_q != cert.bipartition.side_y.front()) {
            fail("grouped rule must name the first party of each side");
        }
        if (!cert.riders.empty() || !cert.core_p_support.empty() || !cert.core_q_support.empty()) {
            fail("grouped rule carries no riders or supports");
        }
        StateSet grouped = group_parties(set.subset(subset), {cert.bipartition.side_x, cert.bipartition.side_y});
        OplmReport rp = core_report(grouped, 0, cert.bipartition.side_x);
        OplmReport rq = core_report(grouped, 1, cert.bipartition.side_y);
        if (!rp.trivial || !rq.trivial) {
            fail("grouped side reports are not trivial");
        }
        if (!same_report(rp, cert.core_p_report) || !same_report(rq, cert.core_q_report)) {
            fail("embedded grouped reports differ from recomputation");
        }
        return check;
    }

    if (cert.core_p >= cert.core_q) {
        fail("core pair must be listed in increasing party order");
    }
    if (!cert.bipartition.separates(cert.core_p, cert.core_q)) {
        fail("core parties lie on the same side of the bipartition");
    }

    std::vector<int> riders = other_parties(n, {cert.core_p, cert.core_q});
    if (cert.riders.size() != riders.size()) {
        fail("rider list does not cover the non-core parties");
        return check;
    }
    bool strip = true;
    for (size_t k = 0; k < riders.size(); k++) {
        if (cert.riders[k].party != riders[k]) {
            fail("rider " + std::to_string(k) + " names the wrong party");
            return check;
        }
        strip = strip && all_proportional(set, subset, riders[k]);
    }
    Rule expected = riders.empty() ? Rule::TwoPartyTrivialCore : strip ? Rule::StripIdentical : Rule::NonorthogonalRider;
    if (cert.rule != expected) {
        fail("rule " + rule_name(cert.rule) + " is not the applicable rule " + rule_name(expected));
    }
    if (expected == Rule::NonorthogonalRider && predicate == RiderPredicate::ProportionalOnly) {
        fail("non-proportional riders are not accepted under the proportional-only predicate");
    }

    const size_t m = subset.size();
    for (const auto &ev : cert.riders) {
        const std::string who = "rider " + set.party_names()[ev.party];
        if (cert.rule == Rule::StripIdentical) {
            if (!ev.overlaps.empty() || ev.scalars.size() != m) {
                fail(who + ": expected one proportionality scalar per subset state");
                continue;
            }
            const LocalFactor &base = set[subset[0]].factors[ev.party];
            for (size_t k = 0; k < m; k++) {
                const Cyclotomic &s = ev.scalars[k];
                const LocalFactor &f = set[subset[k]].factors[ev.party];
                bool ok = !s.is_zero() && s.order() == set.ambient_order();
                for (int i = 0; ok && i < f.dim; i++) {
                    ok = base.amplitudes[i] * s == f.amplitudes[i];
                }
                if (!ok) {
                    fail(who + ": scalar " + std::to_string(k) + " does not map the first factor onto " +
                         set[subset[k]].label);
                }
            }
        } else if (cert.rule == Rule::NonorthogonalRider) {
            if (!ev.scalars.empty() || ev.overlaps.size() != m * (m - 1) / 2) {
                fail(who + ": expected one overlap per pair of subset states");
                continue;
            }
            size_t k = 0;
            for (size_t a = 0; a < m; a++) {
                for (size_t b = a + 1; b < m; b++, k++) {
                    const auto &o = ev.overlaps[k];
                    Cyclotomic v = factor_inner(set[subset[a]].factors[ev.party], set[subset[b]].factors[ev.party]);
                    if (o.first != a || o.second != b || v.is_zero() || !(o.value == v) ||
                        o.value.order() != v.order()) {
                        fail(who + ": overlap for (" + set[subset[a]].label + ", " + set[subset[b]].label +
                             ") is wrong or zero");
                    }
                }
            }
        }
    }

    if (cert.core_p_support != joint_support(set, subset, cert.core_p) ||
        cert.core_q_support != joint_support(set, subset, cert.core_q)) {
        fail("core supports differ from the indices used by the subset");
        return check;
    }
    if (cert.core_p_support.size() < 2 || cert.core_q_support.size() < 2) {
        fail("core party support is one-dimensional");
        return check;
    }
    StateSet core = compressed_core(set, subset, cert.core_p, cert.core_q, cert.core_p_support, cert.core_q_support);
    auto ortho = check_mutual_orthogonality(core);
    if (!ortho.orthogonal()) {
        const auto &v = ortho.violations.front();
        fail("restriction to the core pair is not orthogonal at (" + core[v.first].label + ", " +
             core[v.second].label + ")");
        return check;
    }
    OplmReport rp = core_report(core, 0, {cert.core_p});
    OplmReport rq = core_report(core, 1, {cert.core_q});
    if (!rp.trivial) {
        fail("core party " + set.party_names()[cert.core_p] + " admits a nontrivial OPLM");
    }
    if (!rq.trivial) {
        fail("core party " + set.party_names()[cert.core_q] + " admits a nontrivial OPLM");
    }
    if (!same_report(rp, cert.core_p_report)) {
        fail("embedded report for core party " + set.party_names()[cert.core_p] + " differs from recomputation");
    }
    if (!same_report(rq, cert.core_q_report)) {
        fail("embedded report for core party " + set.party_names()[cert.core_q] + " differs from recomputation");
    }
    return check;
}

}  // namespace gnl

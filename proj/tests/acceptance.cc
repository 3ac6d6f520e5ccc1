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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gnl/constructions.hpp"
#include "gnl/io.hpp"
#include "gnl/oplm.hpp"
#include "gnl/verdicts.hpp"
#include "mutations.hpp"
#include "oracle.hpp"

using namespace gnl;

namespace {

struct Failed {
    std::string what;
};

void require(bool cond, const std::string &what) {
    if (!cond) {
        throw Failed{what};
    }
}

std::vector<std::string> label_range(int lo, int hi) {
    std::vector<std::string> out;
    for (int i = lo; i <= hi; i++) {
        out.push_back("phi_" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> labels(std::initializer_list<int> ids) {
    std::vector<std::string> out;
    for (int i : ids) {
        out.push_back("phi_" + std::to_string(i));
    }
    return out;
}

bool proportional(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) {
    bool a_nonzero = false;
    bool b_nonzero = false;
    for (size_t i = 0; i < a.size(); i++) {
        a_nonzero |= !is_zero(a[i]);
        b_nonzero |= !is_zero(b[i]);
        for (size_t j = 0; j < a.size(); j++) {
            if (a[i] * b[j] != a[j] * b[i]) {
                return false;
            }
        }
    }
    return a_nonzero && b_nonzero;
}

void require_trivial_everywhere(const StateSet &s, const std::string &name) {
    for (int p = 0; p < static_cast<int>(s.party_count()); p++) {
        OplmReport r = oplm_report(s, {p});
        require(r.trivial && r.solution_dim == 1, name + ": party " + std::to_string(p) + " not trivial");
    }
}

void require_certified(const StateSet &s, const Classification &c, const std::string &name) {
    size_t expected = (size_t{1} << (s.party_count() - 1)) - 1;
    require(c.per_bipartition.size() == expected, name + ": wrong bipartition count");
    for (const auto &v : c.per_bipartition) {
        require(v.certificate.has_value(), name + ": " + v.bipartition.describe(s.party_names()) + " not certified");
        auto check = verify_certificate(s, *v.certificate);
        require(check.ok(), name + ": certificate rejected: " + (check.ok() ? "" : check.failures.front()));
    }
    require(c.genuine == Genuineness::ProvenGenuine, name + ": not ProvenGenuine");
}

std::set<std::vector<std::string>> certificate_subsets(const Classification &c) {
    std::set<std::vector<std::string>> out;
    for (const auto &v : c.per_bipartition) {
        out.insert(v.certificate->subset);
    }
    return out;
}

/// Named instances of criteria 1-7, used by the backend and audit checks.
std::vector<std::pair<std::string, StateSet>> instances() {
    std::vector<std::pair<std::string, StateSet>> out;
    auto add = [&](const ConstructionSpec &spec) {
        std::ostringstream name;
        name << family_name(spec.family);
        for (int d : spec.dims) {
            name << " " << d;
        }
        out.emplace_back(name.str(), gen_named(spec));
    };
    add({Family::Fixed3x5, {}});
    for (int d1 = 3; d1 <= 6; d1++) {
        for (int d2 = d1; d2 <= 6; d2++) {
            add({Family::Bipartite, {d1, d2}});
        }
    }
    for (auto dims : std::vector<std::vector<int>>{{4, 4, 4}, {4, 4, 5}, {4, 5, 5}, {4, 4, 6}}) {
        add({Family::Type1Tripartite, dims});
    }
    for (auto dims : std::vector<std::vector<int>>{{3, 3, 3}, {3, 3, 4}, {3, 4, 5}}) {
        add({Family::Type2Tripartite, dims});
    }
    add({Family::Type1Npartite, {4, 3, 3, 3}});
    add({Family::Type2Npartite, {3, 3, 3, 3}});
    return out;
}

void criterion_1() {
    StateSet s = gen_bipartite(3, 5);
    require(s.size() == 9, "expected 9 states");
    require(check_mutual_orthogonality(s).orthogonal(), "not mutually orthogonal");
    require_trivial_everywhere(s, "3x5");
}

void criterion_2() {
    for (int d1 = 3; d1 <= 6; d1++) {
        for (int d2 = d1; d2 <= 6; d2++) {
            StateSet s = gen_bipartite(d1, d2);
            std::string name = std::to_string(d1) + "x" + std::to_string(d2);
            require(s.size() == static_cast<size_t>(2 * d2 - 1), name + ": wrong cardinality");
            require(check_mutual_orthogonality(s).orthogonal(), name + ": not orthogonal");
            require_trivial_everywhere(s, name);
        }
    }
}

void criterion_3() {
    StateSet s = gen_named({Family::Fixed3x5, {}});
    ConstraintSystem cs = assemble(s, {1});
    const int n = s.ambient_order();
    auto diag = [&](const ConstraintRow &row) {
        std::vector<Cyclotomic> out;
        for (int k : {2, 3, 4}) {
            out.push_back(row.coefficients[k * 5 + k]);
        }
        return out;
    };
    std::vector<Cyclotomic> first = {Cyclotomic(n, 1L), root_of_unity(3, 1, n), root_of_unity(3, 2, n)};
    std::vector<Cyclotomic> second = {Cyclotomic(n, 1L), root_of_unity(3, 2, n), root_of_unity(3, 1, n)};
    // Equation for the pair (phi_7, phi_9) is <phi_9| I (x) E |phi_7> = 0.
    require(proportional(diag(cs.row(8, 6)), first), "pair (phi_7, phi_9) does not match b22 + w b33 + w^2 b44");
    require(proportional(diag(cs.row(8, 7)), second), "pair (phi_8, phi_9) does not match b22 + w^2 b33 + w b44");
}

void criterion_4() {
    StateSet s = gen_type1_tripartite(4, 4, 6);
    require(s.size() == 18, "expected 18 states");
    Classification c = classify(s);
    require_certified(s, c, "4x4x6");
    require(certificate_subsets(c) == std::set<std::vector<std::string>>{label_range(1, 7), label_range(8, 18)},
            "certificate subsets are not {phi_1..phi_7}, {phi_8..phi_18}");
    OplmReport a = c.party_reports[0];
    require(!a.trivial, "party A report is trivial");
    Matrix proj(4, 4, s.ambient_order());
    proj(3, 3) = Cyclotomic(s.ambient_order(), 1L);
    require(satisfies(assemble(s, {0}), proj), "|3><3| does not solve party A's constraints");
    require(c.reduction.has_value(), "no reduction witness");
    const ReductionWitness &w = *c.reduction;
    require(w.party == 0 && w.index_subset == std::vector<int>{3}, "reduction is not (A, T={3})");
    require(w.first_part.size() == 7 && w.second_part.size() == 11, "reduction split is not 7/11");
    require(check_reduction(s, w), "reduction witness rejected");
    require(c.gnl_type == GnlType::TypeI, "gnl_type is not TypeI");
}

void criterion_5() {
    for (auto dims : std::vector<std::vector<int>>{{4, 4, 4}, {4, 4, 5}, {4, 5, 5}, {4, 4, 6}}) {
        StateSet s = gen_type1_tripartite(dims[0], dims[1], dims[2]);
        std::string name = std::to_string(dims[0]) + "x" + std::to_string(dims[1]) + "x" + std::to_string(dims[2]);
        require(s.size() == static_cast<size_t>(2 * (dims[1] + dims[2]) - 2), name + ": wrong cardinality");
        Classification c = classify(s);
        require_certified(s, c, name);
        require(c.gnl_type == GnlType::TypeI, name + ": not TypeI");
    }
}

void criterion_6() {
    StateSet s = gen_type2_tripartite(3, 4, 5);
    require(s.size() == 14, "expected 14 states");
    require_trivial_everywhere(s, "3x4x5");
    Classification c = classify(s);
    require_certified(s, c, "3x4x5");
    require(c.gnl_type == GnlType::TypeII, "3x4x5 not TypeII");
    bool rider_c = false;
    bool rider_b = false;
    for (const auto &v : c.per_bipartition) {
        const auto &cert = *v.certificate;
        require(cert.rule == Rule::NonorthogonalRider, "3x4x5: certificate is not a rider rule");
        if (cert.subset == label_range(1, 7) && cert.riders.size() == 1 && cert.riders[0].party == 2) {
            rider_c = true;
        }
        if (cert.subset == labels({4, 7, 8, 9, 10, 11, 12, 13, 14}) && cert.riders.size() == 1 &&
            cert.riders[0].party == 1) {
            rider_b = true;
        }
    }
    require(rider_c, "no certificate on {phi_1..phi_7} with rider C");
    require(rider_b, "no certificate on {phi_4, phi_7..phi_14} with rider B");
    for (auto dims : std::vector<std::vector<int>>{{3, 3, 3}, {3, 3, 4}, {3, 4, 5}}) {
        StateSet t = gen_type2_tripartite(dims[0], dims[1], dims[2]);
        std::string name = std::to_string(dims[0]) + "x" + std::to_string(dims[1]) + "x" + std::to_string(dims[2]);
        require(t.size() == static_cast<size_t>(2 * dims[1] + 2 * dims[2] - 4), name + ": wrong cardinality");
        Classification ct = classify(t);
        require_certified(t, ct, name);
        require(ct.gnl_type == GnlType::TypeII, name + ": not TypeII");
    }
}

void criterion_7() {
    StateSet t1 = gen_type1_npartite({4, 3, 3, 3});
    require(t1.size() == 15, "4x3x3x3: expected 15 states");
    Classification c1 = classify(t1);
    require_certified(t1, c1, "4x3x3x3");
    require(c1.per_bipartition.size() == 7, "4x3x3x3: expected 7 bipartitions");
    require(c1.gnl_type == GnlType::TypeI, "4x3x3x3: not TypeI");
    require(c1.reduction && c1.reduction->party == 0 && c1.reduction->index_subset == std::vector<int>{3},
            "4x3x3x3: reduction is not (A1, T={3})");
    require(check_reduction(t1, *c1.reduction), "4x3x3x3: reduction rejected");

    StateSet t2 = gen_type2_npartite({3, 3, 3, 3});
    require(t2.size() == 15, "3x3x3x3: expected 15 states");
    Classification c2 = classify(t2);
    require_certified(t2, c2, "3x3x3x3");
    require(c2.per_bipartition.size() == 7, "3x3x3x3: expected 7 bipartitions");
    require(c2.gnl_type == GnlType::TypeII, "3x3x3x3: not TypeII");
}

void criterion_8() {
    for (const auto &[name, s] : instances()) {
        for (int p = 0; p < static_cast<int>(s.party_count()); p++) {
            ConstraintSystem cs = assemble(s, {p});
            int exact = solution_space(cs).solution_dim;
            int approx = float_solution_dim(cs, 1e-9);
            require(exact == approx, name + " party " + std::to_string(p) + ": exact " + std::to_string(exact) +
                                         " vs float " + std::to_string(approx));
        }
    }
}

void criterion_9() {
    for (int d : {2, 3}) {
        StateSet basis = fixtures::product_basis({d, d});
        std::string name = std::to_string(d) + "x" + std::to_string(d) + " product basis";
        for (int p = 0; p < 2; p++) {
            OplmReport r = oplm_report(basis, {p});
            require(!r.trivial && r.solution_dim == d, name + ": solution_dim is not " + std::to_string(d));
            require(oracle::oplm_solution_dim(basis, p) == d, name + ": oracle disagrees");
            for (const auto &b : r.basis) {
                for (int i = 0; i < d; i++) {
                    for (int j = 0; j < d; j++) {
                        require(i == j || is_zero(b(i, j)), name + ": off-diagonal solution");
                    }
                }
            }
        }
        Classification c = classify(basis);
        require(c.genuine == Genuineness::Unknown && c.gnl_type == GnlType::Unknown, name + ": not Unknown");
        for (const auto &v : c.per_bipartition) {
            require(!v.certificate.has_value(), name + ": certificate emitted");
        }
    }
}

void criterion_10() {
    size_t audited = 0;
    for (const auto &[name, s] : instances()) {
        if (s.party_count() < 3) {
            continue;
        }
        Classification c = classify(s);
        for (const auto &v : c.per_bipartition) {
            require(v.certificate.has_value(), name + ": missing certificate");
            // Round-trip through JSON so the audit sees what a consumer would.
            RuleCertificate cert =
                certificate_from_json(Json::parse(certificate_to_json(*v.certificate, s.ambient_order()).dump()));
            require(verify_certificate(s, cert).ok(), name + ": certificate rejected");
            for (const auto &[field, mutate] : mutations::single_field()) {
                RuleCertificate m = cert;
                mutate(m);
                require(!verify_certificate(s, m).ok(), name + ": mutation '" + field + "' accepted");
                m.digest = certificate_digest(m);
                require(!verify_certificate(s, m).ok(), name + ": resealed mutation '" + field + "' accepted");
            }
            RuleCertificate stale = cert;
            stale.digest[0] = stale.digest[0] == '0' ? '1' : '0';
            require(!verify_certificate(s, stale).ok(), name + ": digest mutation accepted");
            audited++;
        }
    }
    require(audited == 3 * 7 + 2 * 7, "unexpected certificate count " + std::to_string(audited));
}

size_t row_formula(const std::string &family, const std::vector<int> &d) {
    size_t total = 0;
    for (size_t i = 1; i < d.size(); i++) {
        total += 2 * d[i];
    }
    if (family == "type1-tripartite") {
        return total - 2;
    }
    if (family == "type2-tripartite") {
        return total - 4;
    }
    return total - (d.size() - 1);
}

void criterion_11() {
    std::string out = "gnl_acceptance_table1.json";
    std::string cmd = std::string(GNL_CLI_PATH) + " table1 --grid small --format json -o " + out;
    int status = std::system(cmd.c_str());
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "table1 --grid small did not exit 0");
    std::ifstream in(out);
    Json doc = Json::parse(in);
    std::map<std::string, size_t> per_family;
    for (const auto &cell : doc["cells"]) {
        std::string family = cell["family"];
        std::vector<int> dims = cell["dims"];
        std::string where = family + " " + cell["dims"].dump();
        require(cell["cardinality"].get<size_t>() == row_formula(family, dims), where + ": cardinality off formula");
        std::string want = family.rfind("type1", 0) == 0 ? "TypeI" : "TypeII";
        require(cell["gnl_type"] == want, where + ": expected " + want);
        require(cell["certificates_valid"] == true, where + ": certificate rejected");
        per_family[family]++;
    }
    for (const char *f : {"type1-tripartite", "type1-npartite", "type2-tripartite", "type2-npartite"}) {
        require(per_family[f] > 0, std::string("no cells for ") + f);
    }
    std::remove(out.c_str());
}

struct Criterion {
    int id;
    std::string title;
    std::function<void()> run;
    double limit_seconds;
};

}  // namespace

int main() {
    const double none = 0;
    std::vector<Criterion> criteria = {
        {1, "3x5 bipartite set: 9 orthogonal states, both parties trivial", criterion_1, 1},
        {2, "bipartite grid 3 <= d1 <= d2 <= 6: 2*d2-1 states, trivial", criterion_2, 30},
        {3, "3x5 constraint rows for (phi_7, phi_9), (phi_8, phi_9) on diagonal unknowns", criterion_3, none},
        {4, "4x4x6: 18 states, TypeI, core subsets, |3><3| witness, reduction A T={3} 7/11", criterion_4, 60},
        {5, "type-I tripartite grid: 2(d2+d3)-2 states, TypeI", criterion_5, none},
        {6, "3x4x5: 14 trivial-party states, rider certificates; type-II grid TypeII", criterion_6, none},
        {7, "n=4: 4x3x3x3 TypeI with reduction on A1; 3x3x3x3 TypeII; 7 bipartitions", criterion_7, 300},
        {8, "exact and float solution dimensions agree", criterion_8, none},
        {9, "product bases 2x2, 3x3: diagonal solution spaces, Unknown, no certificates", criterion_9, none},
        {10, "every certificate re-validates; single-field mutations rejected", criterion_10, none},
        {11, "table1 small grid exits 0 with row formulas and types", criterion_11, none},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failed &f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception &e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
            ok = false;
            detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.3f s", secs);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ")";
        if (!ok) {
            std::cout << " -- " << detail;
            failures++;
        }
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}

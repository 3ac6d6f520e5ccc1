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

#include "gnl/io.hpp"

#include <fstream>
#include <sstream>

#include "gnl/constructions.hpp"
#include "gnl/error.hpp"

namespace gnl {

const char *const kSchemaVersion = "1";

namespace {

[[noreturn]] void parse_fail(const std::string &msg) {
    throw Error(ErrorKind::Parse, msg);
}

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        parse_fail(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

int as_int(const Json &j, const char *what) {
    if (!j.is_number_integer()) {
        parse_fail(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::string as_string(const Json &j, const char *what) {
    if (!j.is_string()) {
        parse_fail(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

std::vector<int> as_int_list(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be an array");
    }
    std::vector<int> out;
    for (const auto &x : j) {
        out.push_back(as_int(x, what));
    }
    return out;
}

Cyclotomic literal(const Json &j, int order) {
    if (j.is_number_integer()) {
        return Cyclotomic(order, j.get<long>());
    }
    return Cyclotomic::parse(as_string(j, "cyclotomic literal"), order);
}

Json factor_to_json(const LocalFactor &f) {
    Json terms = Json::array();
    for (int k = 0; k < f.dim; k++) {
        if (!f.amplitudes[k].is_zero()) {
            terms.push_back(Json::array({k, f.amplitudes[k].to_literal()}));
        }
    }
    return Json{{"terms", terms}};
}

LocalFactor factor_from_json(const Json &j, int dim, int order) {
    const Json &terms = field(j, "terms");
    if (!terms.is_array()) {
        parse_fail("terms must be an array");
    }
    std::vector<std::pair<int, Cyclotomic>> parsed;
    for (const auto &t : terms) {
        if (!t.is_array() || t.size() != 2) {
            parse_fail("each term must be [index, literal]");
        }
        parsed.emplace_back(as_int(t[0], "term index"), literal(t[1], order));
    }
    return build_factor(dim, parsed);
}

}  // namespace

Json state_set_to_json(const StateSet &set) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["dims"] = set.dims();
    doc["ambient_order"] = set.ambient_order();
    Json states = Json::array();
    for (const auto &st : set.states()) {
        Json factors = Json::array();
        for (const auto &f : st.factors) {
            factors.push_back(factor_to_json(f));
        }
        states.push_back(Json{{"label", st.label}, {"factors", factors}});
    }
    doc["states"] = states;
    if (set.provenance()) {
        doc["provenance"] = Json{{"family", set.provenance()->family}, {"dims", set.provenance()->dims}};
    }
    return doc;
}

StateSet state_set_from_json(const Json &doc) {
    try {
        if (!doc.is_object()) {
            parse_fail("document must be a JSON object");
        }
        if (as_string(field(doc, "schema_version"), "schema_version") != kSchemaVersion) {
            parse_fail("unsupported schema_version");
        }
        std::vector<int> dims = as_int_list(field(doc, "dims"), "dims");
        int order = as_int(field(doc, "ambient_order"), "ambient_order");
        if (order < 1) {
            parse_fail("ambient_order must be positive");
        }
        const Json &states_j = field(doc, "states");
        if (!states_j.is_array()) {
            parse_fail("states must be an array");
        }
        std::vector<ProductState> states;
        for (const auto &sj : states_j) {
            ProductState st{as_string(field(sj, "label"), "label"), {}};
            const Json &factors = field(sj, "factors");
            if (!factors.is_array() || factors.size() != dims.size()) {
                parse_fail("state " + st.label + " must have one factor per party");
            }
            for (size_t p = 0; p < dims.size(); p++) {
                st.factors.push_back(factor_from_json(factors[p], dims[p], order));
            }
            states.push_back(std::move(st));
        }
        StateSet set = StateSet::create_unverified(dims, order, std::move(states));
        if (doc.contains("provenance") && !doc["provenance"].is_null()) {
            const Json &pj = doc["provenance"];
            std::string family = as_string(field(pj, "family"), "provenance.family");
            std::vector<int> pdims = as_int_list(field(pj, "dims"), "provenance.dims");
            auto fam = parse_family(family);
            if (fam) {
                try {
                    StateSet regen = gen_named({*fam, pdims});
                    if (regen.dims() == set.dims() && regen.ambient_order() == set.ambient_order() &&
                        regen.states() == set.states()) {
                        return regen;
                    }
                } catch (const Error &) {
                    // Inadmissible tag: keep the states, drop the tag.
                }
            }
        }
        return set;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::Parse) {
            throw;
        }
        throw Error(ErrorKind::Parse, e.what());
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

std::string serialize_state_set(const StateSet &set) {
    return state_set_to_json(set).dump(2) + "\n";
}

StateSet parse_state_set(const std::string &text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    return state_set_from_json(doc);
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c).to_literal());
        }
        rows.push_back(row);
    }
    return Json{{"order", m.order()}, {"rows", rows}};
}

Matrix matrix_from_json(const Json &j) {
    int order = as_int(field(j, "order"), "matrix order");
    const Json &rows = field(j, "rows");
    if (!rows.is_array() || rows.empty()) {
        parse_fail("matrix rows must be a nonempty array");
    }
    int n_rows = static_cast<int>(rows.size());
    int n_cols = static_cast<int>(rows[0].size());
    std::vector<Cyclotomic> flat;
    for (const auto &row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n_cols) {
            parse_fail("matrix rows must have equal length");
        }
        for (const auto &x : row) {
            flat.push_back(literal(x, order));
        }
    }
    return Matrix::from_flat(n_rows, n_cols, std::move(flat));
}

Json report_to_json(const OplmReport &report, const std::vector<std::string> &labels) {
    Json j;
    j["party_group"] = report.party_group;
    j["unknown_dim"] = report.unknown_dim;
    j["solution_dim"] = report.solution_dim;
    j["trivial"] = report.trivial;
    Json basis = Json::array();
    for (const auto &b : report.basis) {
        basis.push_back(matrix_to_json(b));
    }
    j["basis"] = basis;
    j["witness"] = report.witness ? matrix_to_json(report.witness->entries()) : Json(nullptr);
    Json trace = Json::array();
    for (const auto &t : report.trace) {
        Json e{{"unknown", {t.unknown_row, t.unknown_col}}, {"pair", {t.first, t.second}}};
        if (t.first < labels.size() && t.second < labels.size()) {
            e["labels"] = {labels[t.first], labels[t.second]};
        }
        trace.push_back(e);
    }
    j["trace"] = trace;
    return j;
}

OplmReport report_from_json(const Json &j) {
    OplmReport r;
    r.party_group = as_int_list(field(j, "party_group"), "party_group");
    r.unknown_dim = as_int(field(j, "unknown_dim"), "unknown_dim");
    r.solution_dim = as_int(field(j, "solution_dim"), "solution_dim");
    const Json &trivial = field(j, "trivial");
    if (!trivial.is_boolean()) {
        parse_fail("trivial must be a boolean");
    }
    r.trivial = trivial.get<bool>();
    for (const auto &b : field(j, "basis")) {
        r.basis.push_back(matrix_from_json(b));
    }
    if (j.contains("witness") && !j["witness"].is_null()) {
        try {
            r.witness = HermitianOperator(matrix_from_json(j["witness"]));
        } catch (const Error &e) {
            parse_fail(std::string("witness: ") + e.what());
        }
    }
    for (const auto &t : field(j, "trace")) {
        auto unknown = as_int_list(field(t, "unknown"), "trace unknown");
        auto pair = as_int_list(field(t, "pair"), "trace pair");
        if (unknown.size() != 2 || pair.size() != 2 || pair[0] < 0 || pair[1] < 0) {
            parse_fail("malformed trace entry");
        }
        r.trace.push_back({unknown[0], unknown[1], static_cast<size_t>(pair[0]), static_cast<size_t>(pair[1])});
    }
    return r;
}

Json certificate_to_json(const RuleCertificate &cert, int order) {
    Json j;
    j["order"] = order;
    j["bipartition"] = Json{{"side_x", cert.bipartition.side_x}, {"side_y", cert.bipartition.side_y}};
    j["rule"] = rule_name(cert.rule);
    j["subset"] = cert.subset;
    j["core_pair"] = {cert.core_p, cert.core_q};
    j["core_supports"] = {cert.core_p_support, cert.core_q_support};
    Json riders = Json::array();
    for (const auto &r : cert.riders) {
        Json scalars = Json::array();
        for (const auto &s : r.scalars) {
            scalars.push_back(s.to_literal());
        }
        Json overlaps = Json::array();
        for (const auto &o : r.overlaps) {
            overlaps.push_back(Json::array({o.first, o.second, o.value.to_literal()}));
        }
        riders.push_back(Json{{"party", r.party}, {"scalars", scalars}, {"overlaps", overlaps}});
    }
    j["riders"] = riders;
    j["core_reports"] = {report_to_json(cert.core_p_report, cert.subset),
                         report_to_json(cert.core_q_report, cert.subset)};
    j["version"] = cert.version;
    j["assumption"] = cert.assumption;
    j["digest"] = cert.digest;
    return j;
}

RuleCertificate certificate_from_json(const Json &j) {
    try {
        RuleCertificate c;
        int order = as_int(field(j, "order"), "order");
        const Json &bp = field(j, "bipartition");
        c.bipartition.side_x = as_int_list(field(bp, "side_x"), "side_x");
        c.bipartition.side_y = as_int_list(field(bp, "side_y"), "side_y");
        auto rule = parse_rule(as_string(field(j, "rule"), "rule"));
        if (!rule) {
            parse_fail("unknown rule");
        }
        c.rule = *rule;
        for (const auto &l : field(j, "subset")) {
            c.subset.push_back(as_string(l, "subset label"));
        }
        auto core = as_int_list(field(j, "core_pair"), "core_pair");
        const Json &supports = field(j, "core_supports");
        if (core.size() != 2 || !supports.is_array() || supports.size() != 2) {
            parse_fail("core_pair and core_supports must have two entries");
        }
        c.core_p = core[0];
        c.core_q = core[1];
        c.core_p_support = as_int_list(supports[0], "core support");
        c.core_q_support = as_int_list(supports[1], "core support");
        for (const auto &rj : field(j, "riders")) {
            RiderEvidence ev;
            ev.party = as_int(field(rj, "party"), "rider party");
            for (const auto &s : field(rj, "scalars")) {
                ev.scalars.push_back(literal(s, order));
            }
            for (const auto &o : field(rj, "overlaps")) {
                if (!o.is_array() || o.size() != 3) {
                    parse_fail("overlap entries must be [first, second, literal]");
                }
                int a = as_int(o[0], "overlap index");
                int b = as_int(o[1], "overlap index");
                if (a < 0 || b < 0) {
                    parse_fail("overlap index must be nonnegative");
                }
                ev.overlaps.push_back({static_cast<size_t>(a), static_cast<size_t>(b), literal(o[2], order)});
            }
            c.riders.push_back(std::move(ev));
        }
        const Json &reports = field(j, "core_reports");
        if (!reports.is_array() || reports.size() != 2) {
            parse_fail("core_reports must have two entries");
        }
        c.core_p_report = report_from_json(reports[0]);
        c.core_q_report = report_from_json(reports[1]);
        c.version = as_string(field(j, "version"), "version");
        c.assumption = as_string(field(j, "assumption"), "assumption");
        c.digest = as_string(field(j, "digest"), "digest");
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, e.what());
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::Parse) {
            throw;
        }
        throw Error(ErrorKind::Parse, e.what());
    }
}

Json reduction_to_json(const ReductionWitness &w, const StateSet &set) {
    Json parts = Json::array();
    for (const auto *part : {&w.first_part, &w.second_part}) {
        Json labels = Json::array();
        for (size_t i : *part) {
            labels.push_back(set[i].label);
        }
        parts.push_back(labels);
    }
    return Json{{"party", w.party},
                {"party_name", set.party_names()[w.party]},
                {"index_subset", w.index_subset},
                {"split", parts}};
}

Json classification_to_json(const Classification &c, const StateSet &set, bool include_certificates) {
    Json j;
    j["gnl_type"] = gnl_type_name(c.gnl_type);
    j["genuine"] = genuineness_name(c.genuine);
    j["irreducible"] = irreducibility_name(c.irreducible);
    Json bps = Json::array();
    for (const auto &v : c.per_bipartition) {
        Json b;
        b["bipartition"] = v.bipartition.describe(set.party_names());
        b["side_x"] = v.bipartition.side_x;
        b["side_y"] = v.bipartition.side_y;
        if (v.certificate) {
            b["status"] = "certified";
            b["rule"] = rule_name(v.certificate->rule);
            b["core_pair"] = {set.party_names()[v.certificate->core_p], set.party_names()[v.certificate->core_q]};
            b["subset"] = v.certificate->subset;
            b["digest"] = v.certificate->digest;
            if (include_certificates) {
                b["certificate"] = certificate_to_json(*v.certificate, set.ambient_order());
            }
        } else {
            b["status"] = "unknown";
            b["reason"] = unknown_reason_name(v.unknown.value_or(UnknownReason::SearchExhausted));
        }
        bps.push_back(b);
    }
    j["bipartitions"] = bps;
    Json parties = Json::array();
    for (const auto &r : c.party_reports) {
        parties.push_back(Json{{"party", set.party_names()[r.party_group.front()]},
                               {"solution_dim", r.solution_dim},
                               {"trivial", r.trivial}});
    }
    j["party_reports"] = parties;
    j["reduction"] = c.reduction ? reduction_to_json(*c.reduction, set) : Json(nullptr);
    return j;
}

Json table1_to_json(const std::vector<Table1Cell> &cells, const std::string &grid) {
    Json rows = Json::array();
    bool ok = true;
    for (const auto &c : cells) {
        ok = ok && c.ok();
        rows.push_back(Json{{"family", family_name(c.family)},
                            {"dims", c.dims},
                            {"cardinality", c.cardinality},
                            {"expected_cardinality", c.expected_cardinality},
                            {"gnl_type", gnl_type_name(c.gnl_type)},
                            {"expected_type", gnl_type_name(c.expected_type)},
                            {"certificates_valid", c.certificates_valid},
                            {"ok", c.ok()}});
        if (!c.ok()) {
            rows.back()["failure"] = c.failure;
        }
    }
    Json prior = Json::array();
    for (const auto &p : prior_work_rows()) {
        prior.push_back(Json{{"source", p.source}, {"system", p.system}, {"cardinality", p.cardinality}, {"type", p.type}});
    }
    return Json{{"grid", grid}, {"cells", rows}, {"prior_work", prior}, {"ok", ok}};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw Error(ErrorKind::Io, "cannot write " + path);
    }
}

}  // namespace gnl

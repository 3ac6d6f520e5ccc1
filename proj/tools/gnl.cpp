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

// Command-line front end. Exit codes:
//   construct           0 written, 2 inadmissible family/dims, 3 I/O failure
//   verify              0 all trivial, 1 some nontrivial, 2 not orthogonal, 3 parse/I/O
//   classify            0 TypeI/TypeII, 1 Unknown, 2 not orthogonal, 3 parse/I/O,
//                       5 float backend refused
//   table1              0 every cell passed, 1 some cell failed
//   verify-certificate  0 valid, 1 invalid, 3 parse/I/O
//   any command         64 bad command-line usage

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gnl/constructions.hpp"
#include "gnl/error.hpp"
#include "gnl/io.hpp"
#include "gnl/oplm.hpp"
#include "gnl/table1.hpp"
#include "gnl/verdicts.hpp"

namespace {

using namespace gnl;

constexpr int kExitUsage = 64;

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument(item);
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument(text);
    }
    return out;
}

void emit(const std::string &out_path, const std::string &text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::string load(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_file(path);
}

int report_error(const Error &e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

std::string matrix_text(const Matrix &m, const std::string &indent) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); r++) {
        out << indent << "[";
        for (int c = 0; c < m.cols(); c++) {
            out << (c ? ", " : "") << m(r, c).to_literal();
        }
        out << "]\n";
    }
    return out.str();
}

/// Resolves "all", a party index, or a party name.
std::vector<std::vector<int>> requested_groups(const StateSet &set, const std::string &party, const std::string &group) {
    std::vector<std::vector<int>> out;
    if (!group.empty()) {
        out.push_back(parse_int_list(group));
        return out;
    }
    if (party.empty() || party == "all") {
        for (int p = 0; p < set.party_count(); p++) {
            out.push_back({p});
        }
        return out;
    }
    for (int p = 0; p < set.party_count(); p++) {
        if (set.party_names()[p] == party) {
            return {{p}};
        }
    }
    return {{parse_int_list(party).at(0)}};
}

int cmd_construct(const std::string &family_text, const std::string &dims_text, const std::string &out_path) {
    auto family = parse_family(family_text);
    if (!family) {
        std::cerr << "error: unknown family '" << family_text << "'\n";
        return 2;
    }
    std::vector<int> dims;
    if (!dims_text.empty()) {
        try {
            dims = parse_int_list(dims_text);
        } catch (const std::exception &) {
            std::cerr << "error: --dims must be a comma-separated list of integers\n";
            return 2;
        }
    }
    std::optional<StateSet> loaded;
    try {
        loaded = gen_named({*family, dims});
    } catch (const Error &e) {
        return report_error(e, 2);
    }
    const StateSet &set = *loaded;
    try {
        emit(out_path, serialize_state_set(set));
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    return 0;
}

int cmd_verify(const std::string &in_path, const std::string &party, const std::string &group,
               const std::string &backend, double tolerance, const std::string &format, const std::string &out_path) {
    std::optional<StateSet> loaded;
    try {
        loaded = parse_state_set(load(in_path));
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    const StateSet &set = *loaded;
    auto ortho = check_mutual_orthogonality(set);
    if (!ortho.orthogonal()) {
        std::cerr << "error: the set is not mutually orthogonal\n";
        for (const auto &v : ortho.violations) {
            std::cerr << "  <" << set[v.first].label << "|" << set[v.second].label << "> = " << v.value.to_literal()
                      << "\n";
        }
        return 2;
    }
    std::vector<std::vector<int>> groups;
    try {
        groups = requested_groups(set, party, group);
    } catch (const std::exception &) {
        std::cerr << "error: cannot parse --party/--group\n";
        return kExitUsage;
    }

    bool all_trivial = true;
    Json reports = Json::array();
    std::ostringstream text;
    std::vector<std::string> labels;
    for (const auto &st : set.states()) {
        labels.push_back(st.label);
    }
    try {
        for (const auto &g : groups) {
            ConstraintSystem cs = assemble(set, g);
            std::string name;
            for (int p : g) {
                name += set.party_names()[p];
            }
            if (backend == "float") {
                int dim = float_solution_dim(cs, tolerance);
                bool trivial = dim == 1;
                all_trivial = all_trivial && trivial;
                reports.push_back(Json{{"party_group", g},
                                       {"backend", "float"},
                                       {"tolerance", tolerance},
                                       {"unknown_dim", cs.unknown_dim},
                                       {"solution_dim", dim},
                                       {"trivial", trivial}});
                text << "party " << name << ": solution_dim " << dim << " (float, tol " << tolerance << ") "
                     << (trivial ? "trivial" : "NONTRIVIAL") << "\n";
                continue;
            }
            OplmReport r = solution_space(cs);
            all_trivial = all_trivial && r.trivial;
            Json j = report_to_json(r, labels);
            j["backend"] = "exact";
            reports.push_back(j);
            text << "party " << name << ": solution_dim " << r.solution_dim << " of " << r.unknown_dim * r.unknown_dim
                 << " unknowns, " << (r.trivial ? "trivial" : "NONTRIVIAL") << "\n";
            if (r.witness) {
                text << "  witness:\n" << matrix_text(r.witness->entries(), "    ");
            }
        }
    } catch (const Error &e) {
        return report_error(e, kExitUsage);
    }
    try {
        if (format == "text") {
            emit(out_path, text.str());
        } else {
            emit(out_path, Json{{"reports", reports}, {"all_trivial", all_trivial}}.dump(2) + "\n");
        }
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    return all_trivial ? 0 : 1;
}

int cmd_classify(const std::string &in_path, int64_t budget, const std::string &cert_path, const std::string &backend,
                 const std::string &rider, bool grouped, const std::string &format, const std::string &out_path) {
    if (backend != "exact") {
        std::cerr << "error: classify certifies only with the exact backend\n";
        return 5;
    }
    std::optional<StateSet> loaded;
    try {
        loaded = parse_state_set(load(in_path));
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    const StateSet &set = *loaded;
    if (!check_mutual_orthogonality(set).orthogonal()) {
        std::cerr << "error: the set is not mutually orthogonal\n";
        return 2;
    }
    CertifyOptions options;
    options.budget_ms = budget;
    options.grouped_sides = grouped;
    options.rider = rider == "proportional" ? RiderPredicate::ProportionalOnly : RiderPredicate::PairwiseNonorthogonal;
    Classification c = classify(set, options);
    Json j = classification_to_json(c, set, false);
    try {
        if (!cert_path.empty()) {
            Json certs = Json::array();
            for (const auto &v : c.per_bipartition) {
                if (v.certificate) {
                    certs.push_back(certificate_to_json(*v.certificate, set.ambient_order()));
                }
            }
            write_file(cert_path, Json{{"schema_version", kSchemaVersion}, {"certificates", certs}}.dump(2) + "\n");
        }
        if (format == "text") {
            std::ostringstream out;
            out << "type: " << gnl_type_name(c.gnl_type) << "\ngenuine: " << genuineness_name(c.genuine)
                << "\nirreducible: " << irreducibility_name(c.irreducible) << "\n";
            for (const auto &v : c.per_bipartition) {
                out << "  " << v.bipartition.describe(set.party_names()) << ": ";
                if (v.certificate) {
                    out << rule_name(v.certificate->rule) << " on core " << set.party_names()[v.certificate->core_p]
                        << set.party_names()[v.certificate->core_q] << " over {";
                    for (size_t k = 0; k < v.certificate->subset.size(); k++) {
                        out << (k ? ", " : "") << v.certificate->subset[k];
                    }
                    out << "}\n";
                } else {
                    out << "unknown (" << unknown_reason_name(*v.unknown) << ")\n";
                }
            }
            if (c.reduction) {
                out << "reduction: party " << set.party_names()[c.reduction->party] << ", T = {";
                for (size_t k = 0; k < c.reduction->index_subset.size(); k++) {
                    out << (k ? ", " : "") << c.reduction->index_subset[k];
                }
                out << "}, split " << c.reduction->first_part.size() << "/" << c.reduction->second_part.size() << "\n";
            }
            emit(out_path, out.str());
        } else {
            emit(out_path, j.dump(2) + "\n");
        }
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    return c.gnl_type == GnlType::Unknown ? 1 : 0;
}

int cmd_table1(const std::string &grid, const std::string &format, const std::string &out_path) {
    auto cells = run_table1(grid == "full" ? Grid::Full : Grid::Small);
    bool ok = true;
    for (const auto &c : cells) {
        if (!c.ok()) {
            ok = false;
            std::cerr << "FAILED cell " << family_name(c.family) << " dims";
            for (int d : c.dims) {
                std::cerr << " " << d;
            }
            std::cerr << ": " << c.failure << "\n";
        }
    }
    try {
        if (format == "json") {
            emit(out_path, table1_to_json(cells, grid).dump(2) + "\n");
        } else {
            emit(out_path, render_table1(cells));
        }
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    return ok ? 0 : 1;
}

int cmd_verify_certificate(const std::string &set_path, const std::string &cert_path, const std::string &rider) {
    std::optional<StateSet> loaded;
    std::vector<RuleCertificate> certs;
    try {
        loaded = parse_state_set(load(set_path));
        Json doc;
        try {
            doc = Json::parse(read_file(cert_path));
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorKind::Parse, std::string("malformed certificate JSON: ") + e.what());
        }
        if (doc.is_object() && doc.contains("certificates")) {
            for (const auto &c : doc["certificates"]) {
                certs.push_back(certificate_from_json(c));
            }
        } else {
            certs.push_back(certificate_from_json(doc));
        }
    } catch (const Error &e) {
        return report_error(e, 3);
    }
    const StateSet &set = *loaded;
    if (certs.empty()) {
        std::cerr << "error: no certificates to verify\n";
        return 1;
    }
    RiderPredicate predicate =
        rider == "proportional" ? RiderPredicate::ProportionalOnly : RiderPredicate::PairwiseNonorthogonal;
    bool ok = true;
    for (size_t k = 0; k < certs.size(); k++) {
        auto check = verify_certificate(set, certs[k], predicate);
        std::cout << "certificate " << k << " (" << certs[k].bipartition.describe(set.party_names())
                  << "): " << (check.ok() ? "valid" : "INVALID") << "\n";
        for (const auto &f : check.failures) {
            std::cout << "  " << f << "\n";
        }
        ok = ok && check.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification of genuinely nonlocal product-state sets"};
    app.require_subcommand(1);

    std::string family, dims, out_path;
    auto *construct = app.add_subcommand("construct", "Generate a state set document");
    construct->add_option("--family", family, "Construction family")->required();
    construct->add_option("--dims", dims, "Comma-separated local dimensions");
    construct->add_option("--out,-o", out_path, "Output path (default stdout)");

    std::string in_path, party, group, backend = "exact", format = "json";
    double tolerance = 1e-9;
    auto *verify = app.add_subcommand("verify", "Solve the OPLM constraints for one or more parties");
    verify->add_option("input", in_path, "State set document ('-' for stdin)")->required();
    verify->add_option("--party", party, "'all', a party index, or a party name")->default_val("all");
    verify->add_option("--group", group, "Comma-separated parties treated as one subsystem");
    verify->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tolerance", tolerance, "Relative singular-value cutoff for --backend float");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out,-o", out_path);

    int64_t budget = 0;
    std::string cert_path, rider = "pairwise";
    bool grouped = false;
    auto *classify_cmd = app.add_subcommand("classify", "Certify genuine nonlocality and its type");
    classify_cmd->add_option("input", in_path, "State set document ('-' for stdin)")->required();
    classify_cmd->add_option("--budget", budget, "Search budget in ms (default GNL_BUDGET_MS or 60000)");
    classify_cmd->add_option("--emit-certificates", cert_path, "Write certificates to this path");
    classify_cmd->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
    classify_cmd->add_option("--rider", rider)->check(CLI::IsMember({"pairwise", "proportional"}));
    classify_cmd->add_flag("--grouped-sides", grouped, "Experimental: also try trivial OPLMs on grouped sides");
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    classify_cmd->add_option("--out,-o", out_path);

    std::string grid = "small";
    auto *table1 = app.add_subcommand("table1", "Regenerate the construction table over a dimension grid");
    table1->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));
    table1->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    table1->add_option("--out,-o", out_path);

    std::string set_path;
    auto *verify_cert = app.add_subcommand("verify-certificate", "Re-validate certificates against a state set");
    verify_cert->add_option("--set", set_path, "State set document")->required();
    verify_cert->add_option("--certificate", cert_path, "Certificate JSON (single or {certificates: [...]})")
        ->required();
    verify_cert->add_option("--rider", rider)->check(CLI::IsMember({"pairwise", "proportional"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) {
            return cmd_construct(family, dims, out_path);
        }
        if (*verify) {
            return cmd_verify(in_path, party, group, backend, tolerance, format, out_path);
        }
        if (*classify_cmd) {
            return cmd_classify(in_path, budget, cert_path, backend, rider, grouped, format, out_path);
        }
        if (*table1) {
            return cmd_table1(grid, format == "json" && table1->count("--format") ? "json" : "text", out_path);
        }
        if (*verify_cert) {
            return cmd_verify_certificate(set_path, cert_path, rider);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Io ? 3 : 1;
    }
    return kExitUsage;
}

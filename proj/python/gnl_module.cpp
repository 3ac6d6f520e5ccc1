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

// Python bindings. Documents cross the boundary as JSON text; the Python
// package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnl/constructions.hpp"
#include "gnl/error.hpp"
#include "gnl/io.hpp"
#include "gnl/oplm.hpp"
#include "gnl/table1.hpp"
#include "gnl/verdicts.hpp"

namespace py = pybind11;
using namespace gnl;

namespace {

RiderPredicate rider_from(const std::string &name) {
    if (name == "pairwise") {
        return RiderPredicate::PairwiseNonorthogonal;
    }
    if (name == "proportional") {
        return RiderPredicate::ProportionalOnly;
    }
    throw Error(ErrorKind::Parse, "unknown rider predicate '" + name + "' (expected pairwise or proportional)");
}

std::string construct(const std::string &family, const std::vector<int> &dims) {
    auto f = parse_family(family);
    if (!f) {
        throw Error(ErrorKind::Inadmissible, "unknown family '" + family + "'");
    }
    return serialize_state_set(gen_named({*f, dims}));
}

std::string verify(const std::string &doc, const std::vector<int> &party_group, bool use_float, double tolerance) {
    StateSet set = parse_state_set(doc);
    std::vector<std::vector<int>> groups;
    if (party_group.empty()) {
        for (int p = 0; p < static_cast<int>(set.party_count()); p++) {
            groups.push_back({p});
        }
    } else {
        groups.push_back(party_group);
    }
    Json reports = Json::array();
    bool all_trivial = true;
    for (const auto &g : groups) {
        if (use_float) {
            int dim = float_solution_dim(assemble(set, g), tolerance);
            all_trivial = all_trivial && dim == 1;
            reports.push_back(Json{{"party_group", g}, {"solution_dim", dim}, {"trivial", dim == 1}});
        } else {
            OplmReport r = oplm_report(set, g);
            all_trivial = all_trivial && r.trivial;
            std::vector<std::string> labels;
            for (const auto &s : set.states()) {
                labels.push_back(s.label);
            }
            reports.push_back(report_to_json(r, labels));
        }
    }
    return Json{{"reports", reports}, {"all_trivial", all_trivial}}.dump();
}

std::string classify_doc(const std::string &doc, const std::string &rider, bool grouped_sides, int64_t budget_ms) {
    StateSet set = parse_state_set(doc);
    CertifyOptions options;
    options.rider = rider_from(rider);
    options.grouped_sides = grouped_sides;
    options.budget_ms = budget_ms;
    return classification_to_json(classify(set, options), set, true).dump();
}

std::vector<std::string> verify_certificate_doc(const std::string &doc, const std::string &certificate,
                                                const std::string &rider) {
    StateSet set = parse_state_set(doc);
    RuleCertificate cert = certificate_from_json(Json::parse(certificate));
    return verify_certificate(set, cert, rider_from(rider)).failures;
}

std::string table1(const std::string &grid) {
    if (grid != "small" && grid != "full") {
        throw Error(ErrorKind::Parse, "grid must be small or full");
    }
    return table1_to_json(run_table1(grid == "full" ? Grid::Full : Grid::Small), grid).dump();
}

}  // namespace

PYBIND11_MODULE(_gnl, m) {
    m.doc() = "Exact OPLM triviality and genuine-nonlocality checks for orthogonal product sets.";

    // Owned for the life of the interpreter.
    static py::handle error_type = py::exception<Error>(m, "GnlError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        py::handle type = error_type;
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object exc = type(e.what());
            exc.attr("kind") = error_kind_name(e.kind());
            PyErr_SetObject(type.ptr(), exc.ptr());
        } catch (const nlohmann::json::exception &e) {
            py::object exc = type(e.what());
            exc.attr("kind") = error_kind_name(ErrorKind::Parse);
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : all_families()) {
            out.push_back(family_name(f));
        }
        return out;
    });
    m.def("construct", &construct, py::arg("family"), py::arg("dims") = std::vector<int>{});
    m.def("verify", &verify, py::arg("doc"), py::arg("party_group") = std::vector<int>{}, py::arg("use_float") = false,
          py::arg("tolerance") = 1e-9);
    m.def("classify", &classify_doc, py::arg("doc"), py::arg("rider") = "pairwise", py::arg("grouped_sides") = false,
          py::arg("budget_ms") = 0);
    m.def("verify_certificate", &verify_certificate_doc, py::arg("doc"), py::arg("certificate"),
          py::arg("rider") = "pairwise");
    m.def("table1", &table1, py::arg("grid") = "small");
}

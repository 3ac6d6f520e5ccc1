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

#include "gnl/table1.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "gnl/error.hpp"

namespace gnl {

const std::vector<Table1Row> &table1_rows() {
    static const std::vector<Table1Row> rows = {
        {Family::Type1Tripartite, "C^d1 (x) C^d2 (x) C^d3, 3 <= d1-1 <= d2 <= d3", "2(d2+d3)-2", GnlType::TypeI},
        {Family::Type1Npartite, "C^d1 (x) ... (x) C^dn, 3 <= d1-1 <= d2 <= ... <= dn", "sum_{i=2..n} (2di-1)",
         GnlType::TypeI},
        {Family::Type2Tripartite, "C^d1 (x) C^d2 (x) C^d3, 3 <= d1 <= d2 <= d3", "2(d2+d3)-4", GnlType::TypeII},
        {Family::Type2Npartite, "C^d1 (x) ... (x) C^dn, n >= 4, 3 <= d1 <= ... <= dn", "sum_{i=2..n} (2di-1)",
         GnlType::TypeII},
    };
    return rows;
}

const std::vector<PriorWorkRow> &prior_work_rows() {
    static const std::vector<PriorWorkRow> rows = {
        {"Rout et al.", "4 (x) 4 (x) 4", "64", "TypeI"},
        {"Rout et al.", "3 (x) 3 (x) 3", "27", "TypeII"},
        {"Rout et al.", "4 (x) 4 (x) 4", "64", "TypeII"},
        {"Li et al.", "x (x) y (x) z", "2x+4y+2z-8", "TypeI"},
        {"Rout et al.", "4 (x) 3 (x) 3", "14", "TypeII"},
        {"Rout et al.", "C^(m+2) (x) (C^3)^(x)m", "6m+2", "TypeII"},
        {"Rout et al.", "6 (x) 5 (x) 5", "42", "TypeII"},
    };
    return rows;
}

namespace {

/// Nondecreasing tuples of the given length with entries in [lo, hi].
void nondecreasing(int length, int lo, int hi, std::vector<int> &prefix, std::vector<std::vector<int>> &out) {
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    int start = prefix.empty() ? lo : std::max(lo, prefix.back());
    for (int v = start; v <= hi; v++) {
        prefix.push_back(v);
        nondecreasing(length, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> grid_dims(Family family, Grid grid) {
    const int max_dim = grid == Grid::Small ? 6 : 7;
    const int max_parties = grid == Grid::Small ? 4 : 5;
    std::vector<std::vector<int>> out;
    auto emit = [&](int parties, bool type1) {
        for (int d1 = type1 ? 4 : 3; d1 <= max_dim; d1++) {
            std::vector<int> prefix;
            std::vector<std::vector<int>> rest;
            nondecreasing(parties - 1, type1 ? d1 - 1 : d1, max_dim, prefix, rest);
            for (auto &r : rest) {
                r.insert(r.begin(), d1);
                out.push_back(std::move(r));
            }
        }
    };
    switch (family) {
        case Family::Type1Tripartite:
            emit(3, true);
            break;
        case Family::Type2Tripartite:
            emit(3, false);
            break;
        case Family::Type1Npartite:
            for (int n = 3; n <= max_parties; n++) {
                emit(n, true);
            }
            break;
        case Family::Type2Npartite:
            for (int n = 4; n <= max_parties; n++) {
                emit(n, false);
            }
            break;
        default:
            throw Error(ErrorKind::Inadmissible, family_name(family) + " is not a table row");
    }
    return out;
}

size_t formula_cardinality(Family family, const std::vector<int> &d) {
    switch (family) {
        case Family::Type1Tripartite:
            return 2 * (d[1] + d[2]) - 2;
        case Family::Type2Tripartite:
            return 2 * (d[1] + d[2]) - 4;
        case Family::Type1Npartite:
        case Family::Type2Npartite: {
            size_t total = 0;
            for (size_t i = 1; i < d.size(); i++) {
                total += 2 * d[i] - 1;
            }
            return total;
        }
        default:
            throw Error(ErrorKind::Inadmissible, family_name(family) + " is not a table row");
    }
}

Table1Cell run_table1_cell(Family family, const std::vector<int> &dims, const CertifyOptions &options) {
    auto t0 = std::chrono::steady_clock::now();
    Table1Cell cell;
    cell.family = family;
    cell.dims = dims;
    cell.expected_cardinality = formula_cardinality(family, dims);
    for (const auto &row : table1_rows()) {
        if (row.family == family) {
            cell.expected_type = row.expected_type;
        }
    }
    try {
        StateSet set = gen_named({family, dims});
        cell.cardinality = set.size();
        Classification c = classify(set, options);
        cell.gnl_type = c.gnl_type;
        cell.certificates_valid = true;
        for (const auto &v : c.per_bipartition) {
            if (v.certificate && !verify_certificate(set, *v.certificate, options.rider).ok()) {
                cell.certificates_valid = false;
            }
        }
        std::ostringstream why;
        if (cell.cardinality != cell.expected_cardinality) {
            why << "cardinality " << cell.cardinality << " != " << cell.expected_cardinality << "; ";
        }
        if (cell.gnl_type != cell.expected_type) {
            why << "type " << gnl_type_name(cell.gnl_type) << " != " << gnl_type_name(cell.expected_type) << "; ";
        }
        if (!cell.certificates_valid) {
            why << "certificate failed re-validation; ";
        }
        cell.failure = why.str();
    } catch (const std::exception &e) {
        cell.failure = e.what();
    }
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cell;
}

std::vector<Table1Cell> run_table1(Grid grid, const CertifyOptions &options) {
    std::vector<Table1Cell> out;
    for (const auto &row : table1_rows()) {
        for (const auto &dims : grid_dims(row.family, grid)) {
            out.push_back(run_table1_cell(row.family, dims, options));
        }
    }
    return out;
}

std::string render_table1(const std::vector<Table1Cell> &cells) {
    std::ostringstream out;
    out << "Genuinely nonlocal product-state sets\n\n";
    out << "family             system                                                 |S|                    type    "
           "cells  pass\n";
    for (const auto &row : table1_rows()) {
        size_t total = 0;
        size_t pass = 0;
        for (const auto &c : cells) {
            if (c.family == row.family) {
                total++;
                pass += c.ok();
            }
        }
        char buf[512];
        std::snprintf(buf, sizeof(buf), "%-18s %-54s %-22s %-7s %5zu %5zu\n", family_name(row.family).c_str(),
                      row.system.c_str(), row.formula.c_str(), gnl_type_name(row.expected_type).c_str(), total, pass);
        out << buf;
    }
    out << "\nEarlier constructions (static, not recomputed)\n";
    for (const auto &row : prior_work_rows()) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-12s %-26s %-12s %s\n", row.source.c_str(), row.system.c_str(),
                      row.cardinality.c_str(), row.type.c_str());
        out << buf;
    }
    bool any_failed = false;
    for (const auto &c : cells) {
        if (!c.ok()) {
            if (!any_failed) {
                out << "\nFailing cells\n";
                any_failed = true;
            }
            out << "  " << family_name(c.family) << " (";
            for (size_t k = 0; k < c.dims.size(); k++) {
                out << (k ? "," : "") << c.dims[k];
            }
            out << "): " << c.failure << "\n";
        }
    }
    return out.str();
}

}  // namespace gnl

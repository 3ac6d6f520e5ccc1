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

#ifndef GNL_IO_HPP
#define GNL_IO_HPP

#include <string>

#include "gnl/oplm.hpp"
#include "gnl/states.hpp"
#include "gnl/table1.hpp"
#include "gnl/verdicts.hpp"
#include "json.hpp"

namespace gnl {

using Json = nlohmann::ordered_json;

extern const char *const kSchemaVersion;

/// StateSetDocument: {schema_version, dims, ambient_order,
/// states: [{label, factors: [{terms: [[index, literal], ...]}]}],
/// provenance?: {family, dims}}.
Json state_set_to_json(const StateSet &set);

/// Structure is validated; orthogonality is not (callers report it). When a
/// provenance tag is present and regenerating that family reproduces the
/// states exactly, the generator's blocks are attached; otherwise the tag is
/// dropped. Throws Parse on malformed input.
StateSet state_set_from_json(const Json &doc);

std::string serialize_state_set(const StateSet &set);
StateSet parse_state_set(const std::string &text);

/// {order, rows: [[literal, ...], ...]}.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// Trace pairs are emitted both as indices and as labels when labels are
/// supplied.
Json report_to_json(const OplmReport &report, const std::vector<std::string> &labels = {});
OplmReport report_from_json(const Json &j);

Json certificate_to_json(const RuleCertificate &cert, int order);
RuleCertificate certificate_from_json(const Json &j);

Json reduction_to_json(const ReductionWitness &w, const StateSet &set);

Json classification_to_json(const Classification &c, const StateSet &set, bool include_certificates);

/// {grid, cells[], prior_work[], ok}.
Json table1_to_json(const std::vector<Table1Cell> &cells, const std::string &grid);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

}  // namespace gnl

#endif

// Copyright 2026 The Plott Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLOTT_INSTANCE_IO_HPP_
#define PLOTT_INSTANCE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plott/choice.hpp"
#include "plott/disaggregation.hpp"
#include "plott/limits.hpp"
#include "plott/problem.hpp"

namespace plott {

// Instance documents are JSON:
//   {"contracts": [{"name", "participants": [agent]}],
//    "agents": [{"name", "side": "firm"|"worker" (optional), "cf": CF}]}
// with CF one of
//   {"kind": "linear", "order": [...]}      {"kind": "quota", "order", "q"}
//   {"kind": "weak", "classes": [[...]]}    {"kind": "sequential", "stages"}
//   {"kind": "union", "parts": [...]}       {"kind": "table", "entries":
//   [{"menu", "choice"}]}                   {"kind": "integral", "base",
//   "fibers": [{"base_contract", "members", "cf"}]}
// Names inside an integral's base refer to its fibers' base_contract values.

// Parses and validates an instance. Syntax errors report line and column;
// other errors report the JSON path of the offending field.
Problem parse_instance(std::string_view text, const Limits& limits = {});
Problem load_instance(const std::string& path, const Limits& limits = {});

// Canonical JSON: sorted keys, agents and contracts in declaration order,
// unordered sets as name lists sorted by name, two-space indent and a
// trailing newline.
std::string serialize_instance(const Problem& p);
std::string serialize_system(const Problem& p, ContractSystem s);

nlohmann::json cf_to_json(const ChoiceFunction& cf,
                          const std::vector<std::string>& labels);
ChoiceFunction cf_from_json(const nlohmann::json& doc,
                            const std::vector<std::string>& labels,
                            const Limits& limits = {});

// Mapping file of a split:
//   {"agents": [{"name", "original"}],
//    "contracts": [{"name", "original", "floor"}]}
std::string serialize_mapping(const Problem& original,
                              const SplitResult& split);
// Rebuilds a SplitResult from the modified instance and its mapping file.
SplitResult parse_split(const Problem& original, Problem modified,
                        std::string_view mapping_text);

// Splits a comma separated name list, dropping empty items.
std::vector<std::string> split_names(std::string_view list);

std::string dump_canonical(const nlohmann::json& doc);
std::string read_file(const std::string& path);

}  // namespace plott

#endif  // PLOTT_INSTANCE_IO_HPP_

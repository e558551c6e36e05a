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

#include "plott/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "plott/errors.hpp"

namespace plott {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(ErrorCode code, const std::string& path,
                              const std::string& msg) {
  fail(code, (path.empty() ? std::string("document") : path) + ": " + msg);
}

const json& member(const json& obj, const std::string& path,
                   const char* key) {
  if (!obj.is_object()) field_error(ErrorCode::kInput, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    field_error(ErrorCode::kInput, path, std::string("missing field '") + key + "'");
  }
  return *it;
}

const json& array_at(const json& obj, const std::string& path,
                     const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_array()) {
    field_error(ErrorCode::kInput, path + "." + key, "expected an array");
  }
  return v;
}

std::string string_of(const json& v, const std::string& path) {
  if (!v.is_string()) field_error(ErrorCode::kInput, path, "expected a string");
  return v.get<std::string>();
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

class Resolver {
 public:
  explicit Resolver(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      index_.emplace(labels[i], static_cast<int>(i));
    }
  }
  int operator()(const json& v, const std::string& path) const {
    const std::string name = string_of(v, path);
    auto it = index_.find(name);
    if (it == index_.end()) {
      field_error(ErrorCode::kInput, path, "unresolved name '" + name + "'");
    }
    return it->second;
  }
  std::vector<int> list(const json& arr, const std::string& path) const {
    if (!arr.is_array()) field_error(ErrorCode::kInput, path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back((*this)(arr[i], item(path, i)));
    }
    return out;
  }
  Menu menu(const json& arr, const std::string& path) const {
    Menu out;
    const std::vector<int> names = list(arr, path);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (out.contains(names[i])) {
        field_error(ErrorCode::kInput, item(path, i), "repeated name");
      }
      out = out.with(names[i]);
    }
    return out;
  }

 private:
  std::map<std::string, int> index_;
};

ChoiceFunction parse_cf(const json& doc, const std::vector<std::string>& labels,
                        const std::string& path, const Limits& limits);

std::vector<ChoiceFunction> parse_cf_list(
    const json& doc, const char* key, const std::vector<std::string>& labels,
    const std::string& path, const Limits& limits) {
  const json& arr = array_at(doc, path, key);
  if (arr.empty()) {
    field_error(ErrorCode::kInput, path + "." + key, "expected at least one entry");
  }
  std::vector<ChoiceFunction> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_cf(arr[i], labels, item(path + "." + key, i), limits));
  }
  return out;
}

ChoiceFunction parse_table(const json& doc, const Resolver& resolve,
                           const std::string& path, const Limits& limits) {
  const json& arr = array_at(doc, path, "entries");
  const std::string at = path + ".entries";
  std::vector<std::pair<Menu, Menu>> rows;
  Menu domain;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string here = item(at, i);
    Menu menu = resolve.menu(member(arr[i], here, "menu"), here + ".menu");
    Menu choice = resolve.menu(member(arr[i], here, "choice"), here + ".choice");
    if (!choice.subset_of(menu)) {
      field_error(ErrorCode::kInput, here, "choice is not inside the menu");
    }
    domain |= menu;
    rows.emplace_back(menu, choice);
  }
  if (domain.size() > limits.table) {
    field_error(ErrorCode::kLimit, at, "table domain exceeds the table limit");
  }
  const std::uint64_t total = std::uint64_t{1} << domain.size();
  std::vector<Menu> entries(total);
  std::vector<bool> seen(total, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t k = compress(rows[i].first, domain);
    if (seen[k]) field_error(ErrorCode::kInput, item(at, i), "repeated menu");
    seen[k] = true;
    entries[k] = rows[i].second;
  }
  if (rows.size() != total) {
    field_error(ErrorCode::kInput, at,
                "partial table: " + std::to_string(rows.size()) + " of " +
                    std::to_string(total) + " menus given");
  }
  return make_table(domain, std::move(entries), limits);
}

ChoiceFunction parse_integral(const json& doc,
                              const std::vector<std::string>& labels,
                              const Resolver& resolve, const std::string& path,
                              const Limits& limits) {
  const json& fibers = array_at(doc, path, "fibers");
  const std::string at = path + ".fibers";
  std::vector<std::string> ground;
  std::map<int, int> fiber_of;
  std::map<int, ChoiceFunction> fiber_cfs;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const std::string here = item(at, i);
    const std::string base =
        string_of(member(fibers[i], here, "base_contract"), here + ".base_contract");
    if (std::find(ground.begin(), ground.end(), base) != ground.end()) {
      field_error(ErrorCode::kInput, here + ".base_contract",
                  "repeated base contract '" + base + "'");
    }
    const int x = static_cast<int>(ground.size());
    ground.push_back(base);
    const Menu members =
        resolve.menu(member(fibers[i], here, "members"), here + ".members");
    for (int e : members) {
      if (fiber_of.count(e)) {
        field_error(ErrorCode::kInput, here + ".members",
                    "'" + labels[e] + "' lies in two fibers");
      }
      fiber_of[e] = x;
    }
    ChoiceFunction cf =
        parse_cf(member(fibers[i], here, "cf"), labels, here + ".cf", limits);
    if (cf.domain() != members) {
      field_error(ErrorCode::kDomain, here + ".cf",
                  "domain differs from the fiber members");
    }
    fiber_cfs.emplace(x, std::move(cf));
  }
  ChoiceFunction base =
      parse_cf(member(doc, path, "base"), ground, path + ".base", limits);
  try {
    return integrate(std::move(base), fiber_of, std::move(fiber_cfs),
                     GroundSet{ground});
  } catch (const Error& e) {
    field_error(e.code(), path, e.what());
  }
}

ChoiceFunction parse_cf(const json& doc, const std::vector<std::string>& labels,
                        const std::string& path, const Limits& limits) {
  const Resolver resolve(labels);
  const std::string kind = string_of(member(doc, path, "kind"), path + ".kind");
  try {
    if (kind == "linear") {
      return make_linear(
          resolve.list(array_at(doc, path, "order"), path + ".order"));
    }
    if (kind == "quota") {
      const json& q = member(doc, path, "q");
      if (!q.is_number_integer()) {
        field_error(ErrorCode::kInput, path + ".q", "expected an integer");
      }
      return make_quota(
          resolve.list(array_at(doc, path, "order"), path + ".order"),
          q.get<int>());
    }
    if (kind == "weak") {
      const json& arr = array_at(doc, path, "classes");
      std::vector<std::vector<int>> classes;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        classes.push_back(resolve.list(arr[i], item(path + ".classes", i)));
      }
      return make_weak_order(classes);
    }
    if (kind == "sequential") {
      return make_sequential(parse_cf_list(doc, "stages", labels, path, limits));
    }
    if (kind == "union") {
      return union_compose(parse_cf_list(doc, "parts", labels, path, limits));
    }
    if (kind == "table") return parse_table(doc, resolve, path, limits);
    if (kind == "integral") {
      return parse_integral(doc, labels, resolve, path, limits);
    }
  } catch (const Error& e) {
    const std::string msg = e.what();
    // Errors raised below already carry a path.
    if (msg.rfind("agents[", 0) == 0 || msg.rfind(path, 0) == 0) throw;
    field_error(e.code(), path, msg);
  }
  field_error(ErrorCode::kInput, path + ".kind", "unknown kind '" + kind + "'");
}

json name_list(Menu m, const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  for (int e : m) names.push_back(labels.at(e));
  std::sort(names.begin(), names.end());
  return names;
}

json order_list(const std::vector<int>& order,
                const std::vector<std::string>& labels) {
  json out = json::array();
  for (int e : order) out.push_back(labels.at(e));
  return out;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // The reported byte is one past the offending character.
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) what = what.substr(cut);
    fail(ErrorCode::kSyntax, "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + what);
  }
}

}  // namespace

ChoiceFunction cf_from_json(const json& doc,
                            const std::vector<std::string>& labels,
                            const Limits& limits) {
  return parse_cf(doc, labels, "cf", limits);
}

json cf_to_json(const ChoiceFunction& cf,
                const std::vector<std::string>& labels) {
  json out;
  out["kind"] = std::string(cf_kind_name(cf.kind()));
  switch (cf.kind()) {
    case CfKind::kLinear:
      out["order"] = order_list(cf.linear().order, labels);
      break;
    case CfKind::kQuota:
      out["order"] = order_list(cf.quota().order, labels);
      out["q"] = cf.quota().q;
      break;
    case CfKind::kWeakOrder: {
      json classes = json::array();
      for (Menu cls : cf.weak_order().classes) {
        classes.push_back(name_list(cls, labels));
      }
      out["classes"] = std::move(classes);
      break;
    }
    case CfKind::kSequential: {
      json stages = json::array();
      for (const auto& s : cf.sequential().stages) {
        stages.push_back(cf_to_json(s, labels));
      }
      out["stages"] = std::move(stages);
      break;
    }
    case CfKind::kUnion: {
      json parts = json::array();
      for (const auto& s : cf.union_of().parts) {
        parts.push_back(cf_to_json(s, labels));
      }
      out["parts"] = std::move(parts);
      break;
    }
    case CfKind::kIntegral: {
      const IntegralRep& rep = cf.integral();
      const std::vector<std::string>& base_labels =
          rep.base_ground.size() > 0 ? rep.base_ground.labels : labels;
      out["base"] = cf_to_json(rep.base, base_labels);
      json fibers = json::array();
      for (const auto& fiber : rep.fibers) {
        fibers.push_back({{"base_contract", base_labels.at(fiber.base)},
                          {"cf", cf_to_json(fiber.cf, labels)},
                          {"members", name_list(fiber.members, labels)}});
      }
      out["fibers"] = std::move(fibers);
      break;
    }
    case CfKind::kTable: {
      json entries = json::array();
      const auto& table = cf.table().entries;
      std::size_t k = 0;
      for_each_submenu(cf.domain(), [&](Menu a) {
        entries.push_back({{"choice", name_list(table[k++], labels)},
                           {"menu", name_list(a, labels)}});
      });
      out["entries"] = std::move(entries);
      break;
    }
  }
  return out;
}

Problem parse_instance(std::string_view text, const Limits& limits) {
  const json doc = parse_json(text);
  if (!doc.is_object()) field_error(ErrorCode::kInput, "", "expected an object");
  Problem p;
  const json& agents = array_at(doc, "", "agents");
  const json& contracts = array_at(doc, "", "contracts");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = item("agents", i);
    p.frame.agents.push_back(string_of(member(agents[i], at, "name"), at + ".name"));
  }
  for (std::size_t i = 0; i < contracts.size(); ++i) {
    const std::string at = item("contracts", i);
    p.frame.contracts.push_back(
        string_of(member(contracts[i], at, "name"), at + ".name"));
  }
  if (p.frame.contract_count() > Menu::kMaxElements) {
    field_error(ErrorCode::kLimit, "contracts", "at most 64 contracts are supported");
  }
  const Resolver agent_names(p.frame.agents);
  for (std::size_t i = 0; i < contracts.size(); ++i) {
    const std::string at = item("contracts", i) + ".participants";
    std::vector<int> parts =
        agent_names.list(member(contracts[i], item("contracts", i), "participants"), at);
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      field_error(ErrorCode::kInput, at, "repeated participant");
    }
    p.frame.participants.push_back(std::move(parts));
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = item("agents", i);
    Side side = Side::kUnspecified;
    if (auto it = agents[i].find("side"); it != agents[i].end()) {
      const std::string s = string_of(*it, at + ".side");
      if (s == "firm") {
        side = Side::kFirm;
      } else if (s == "worker") {
        side = Side::kWorker;
      } else {
        field_error(ErrorCode::kInput, at + ".side", "unknown side '" + s + "'");
      }
    }
    p.sides.push_back(side);
    ChoiceFunction cf =
        parse_cf(member(agents[i], at, "cf"), p.frame.contracts, at + ".cf", limits);
    if (cf.domain() != p.frame.incidence(static_cast<int>(i))) {
      field_error(ErrorCode::kDomain, at + ".cf",
                  "domain differs from the contracts of '" + p.frame.agents[i] + "'");
    }
    p.cfs.push_back(std::move(cf));
  }
  validate_problem(p);
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem load_instance(const std::string& path, const Limits& limits) {
  try {
    return parse_instance(read_file(path), limits);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

std::string serialize_instance(const Problem& p) {
  const Frame& f = p.frame;
  json contracts = json::array();
  for (int e = 0; e < f.contract_count(); ++e) {
    std::vector<std::string> parts;
    for (int a : f.participants[e]) parts.push_back(f.agents[a]);
    std::sort(parts.begin(), parts.end());
    contracts.push_back({{"name", f.contracts[e]}, {"participants", parts}});
  }
  json agents = json::array();
  for (int a = 0; a < f.agent_count(); ++a) {
    json agent = {{"name", f.agents[a]}, {"cf", cf_to_json(p.cfs[a], f.contracts)}};
    const Side side = p.sides.empty() ? Side::kUnspecified : p.sides[a];
    if (side != Side::kUnspecified) agent["side"] = std::string(side_name(side));
    agents.push_back(std::move(agent));
  }
  return dump_canonical({{"agents", agents}, {"contracts", contracts}});
}

std::string serialize_system(const Problem& p, ContractSystem s) {
  return dump_canonical(name_list(s, p.frame.contracts));
}

std::string serialize_mapping(const Problem& original, const SplitResult& split) {
  const Frame& mf = split.modified.frame;
  json agents = json::array();
  for (int a = 0; a < mf.agent_count(); ++a) {
    agents.push_back({{"name", mf.agents[a]},
                      {"original", original.frame.agents.at(split.agent_map[a])}});
  }
  json contracts = json::array();
  for (int e = 0; e < mf.contract_count(); ++e) {
    contracts.push_back(
        {{"floor", split.floor_of[e]},
         {"name", mf.contracts[e]},
         {"original", original.frame.contracts.at(split.contract_map[e])}});
  }
  return dump_canonical({{"agents", agents}, {"contracts", contracts}});
}

SplitResult parse_split(const Problem& original, Problem modified,
                        std::string_view mapping_text) {
  const json doc = parse_json(mapping_text);
  const json& agents = array_at(doc, "", "agents");
  const json& contracts = array_at(doc, "", "contracts");
  const Frame& mf = modified.frame;
  if (static_cast<int>(agents.size()) != mf.agent_count() ||
      static_cast<int>(contracts.size()) != mf.contract_count()) {
    field_error(ErrorCode::kStructure, "",
                "mapping does not match the modified instance");
  }
  const Resolver agent_of(original.frame.agents);
  const Resolver contract_of(original.frame.contracts);
  SplitResult out;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = item("agents", i);
    if (string_of(member(agents[i], at, "name"), at + ".name") != mf.agents[i]) {
      field_error(ErrorCode::kStructure, at + ".name",
                  "expected '" + mf.agents[i] + "'");
    }
    out.agent_map.push_back(agent_of(member(agents[i], at, "original"), at + ".original"));
  }
  for (std::size_t i = 0; i < contracts.size(); ++i) {
    const std::string at = item("contracts", i);
    if (string_of(member(contracts[i], at, "name"), at + ".name") != mf.contracts[i]) {
      field_error(ErrorCode::kStructure, at + ".name",
                  "expected '" + mf.contracts[i] + "'");
    }
    out.contract_map.push_back(
        contract_of(member(contracts[i], at, "original"), at + ".original"));
    const json& floor = member(contracts[i], at, "floor");
    if (!floor.is_number_integer() || floor.get<int>() < 0) {
      field_error(ErrorCode::kInput, at + ".floor", "expected a level >= 0");
    }
    out.floor_of.push_back(floor.get<int>());
  }
  out.modified = std::move(modified);
  return out;
}

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) out.emplace_back(name);
    start = end + 1;
  }
  return out;
}

}  // namespace plott

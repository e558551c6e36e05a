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

#include "plott/problem.hpp"

#include <set>
#include <string>

#include "plott/errors.hpp"

namespace plott {

Menu Frame::incidence(int agent) const {
  Menu out;
  for (int e = 0; e < contract_count(); ++e) {
    for (int a : participants[e]) {
      if (a == agent) {
        out = out.with(e);
        break;
      }
    }
  }
  return out;
}

std::optional<int> Frame::find_agent(std::string_view name) const {
  for (int a = 0; a < agent_count(); ++a) {
    if (agents[a] == name) return a;
  }
  return std::nullopt;
}

std::optional<int> Frame::find_contract(std::string_view name) const {
  for (int e = 0; e < contract_count(); ++e) {
    if (contracts[e] == name) return e;
  }
  return std::nullopt;
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kFirm: return "firm";
    case Side::kWorker: return "worker";
    case Side::kUnspecified: break;
  }
  return "";
}

bool Problem::has_bipartition() const {
  if (static_cast<int>(sides.size()) != frame.agent_count()) return false;
  for (Side s : sides) {
    if (s == Side::kUnspecified) return false;
  }
  return true;
}

bool Problem::is_bipartite_pairwise() const {
  if (!has_bipartition()) return false;
  for (const auto& parts : frame.participants) {
    if (parts.size() != 2) return false;
    if (sides[parts[0]] == sides[parts[1]]) return false;
  }
  return true;
}

std::vector<int> Problem::agents_on(Side side) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(sides.size()); ++a) {
    if (sides[a] == side) out.push_back(a);
  }
  return out;
}

int Problem::agent(std::string_view name) const {
  if (auto a = frame.find_agent(name)) return *a;
  fail(ErrorCode::kInput, "unknown agent '" + std::string(name) + "'");
}

int Problem::contract(std::string_view name) const {
  if (auto e = frame.find_contract(name)) return *e;
  fail(ErrorCode::kInput, "unknown contract '" + std::string(name) + "'");
}

ContractSystem Problem::system(const std::vector<std::string>& names) const {
  ContractSystem s;
  for (const auto& name : names) s = s.with(contract(name));
  return s;
}

std::vector<std::string> Problem::names_of(ContractSystem s) const {
  std::vector<std::string> out;
  for (int e : s) out.push_back(frame.contracts[e]);
  return out;
}

void validate_problem(const Problem& p, const std::vector<int>* split_workers) {
  const Frame& f = p.frame;
  if (f.contract_count() > Menu::kMaxElements) {
    fail(ErrorCode::kLimit, "at most 64 contracts are supported");
  }
  if (static_cast<int>(f.participants.size()) != f.contract_count()) {
    fail(ErrorCode::kStructure, "participant lists do not match contracts");
  }
  std::set<std::string> seen;
  for (const auto& name : f.agents) {
    if (!seen.insert(name).second) {
      fail(ErrorCode::kStructure, "duplicate agent name '" + name + "'");
    }
  }
  seen.clear();
  for (const auto& name : f.contracts) {
    if (!seen.insert(name).second) {
      fail(ErrorCode::kStructure, "duplicate contract name '" + name + "'");
    }
  }
  for (int e = 0; e < f.contract_count(); ++e) {
    const auto& parts = f.participants[e];
    if (parts.empty()) {
      fail(ErrorCode::kStructure,
           "contract '" + f.contracts[e] + "' has no participants");
    }
    std::set<int> distinct;
    for (int a : parts) {
      if (a < 0 || a >= f.agent_count()) {
        fail(ErrorCode::kStructure, "contract '" + f.contracts[e] +
                                        "' names a nonexistent agent");
      }
      if (!distinct.insert(a).second) {
        fail(ErrorCode::kStructure, "contract '" + f.contracts[e] +
                                        "' lists agent '" + f.agents[a] +
                                        "' twice");
      }
    }
  }
  if (static_cast<int>(p.cfs.size()) != f.agent_count()) {
    fail(ErrorCode::kStructure, "expected one choice function per agent");
  }
  if (!p.sides.empty() && static_cast<int>(p.sides.size()) != f.agent_count()) {
    fail(ErrorCode::kStructure, "expected one side per agent");
  }
  for (int a = 0; a < f.agent_count(); ++a) {
    if (p.cfs[a].domain() != f.incidence(a)) {
      fail(ErrorCode::kDomain, "choice function of agent '" + f.agents[a] +
                                   "' is not over its contracts");
    }
  }
  if (split_workers != nullptr) {
    std::set<int> workers(split_workers->begin(), split_workers->end());
    for (int w : workers) {
      if (w < 0 || w >= f.agent_count()) {
        fail(ErrorCode::kInput, "split worker index out of range");
      }
    }
    for (int e = 0; e < f.contract_count(); ++e) {
      std::vector<int> hit;
      for (int a : f.participants[e]) {
        if (workers.count(a)) hit.push_back(a);
      }
      if (hit.size() > 1) {
        fail(ErrorCode::kConnectivity,
             "contract '" + f.contracts[e] + "' joins split agents '" +
                 f.agents[hit[0]] + "' and '" + f.agents[hit[1]] + "'");
      }
    }
  }
}

Problem delete_agent(const Problem& p, int agent, const Limits& limits) {
  const Frame& f = p.frame;
  if (agent < 0 || agent >= f.agent_count()) {
    fail(ErrorCode::kInput, "unknown agent index " + std::to_string(agent));
  }
  const Menu removed = f.incidence(agent);
  std::vector<int> contract_index(f.contract_count(), -1);
  Problem out;
  for (int e = 0; e < f.contract_count(); ++e) {
    if (removed.contains(e)) continue;
    contract_index[e] = out.frame.contract_count();
    out.frame.contracts.push_back(f.contracts[e]);
  }
  std::vector<int> agent_index(f.agent_count(), -1);
  for (int a = 0; a < f.agent_count(); ++a) {
    if (a == agent) continue;
    agent_index[a] = out.frame.agent_count();
    out.frame.agents.push_back(f.agents[a]);
    if (!p.sides.empty()) out.sides.push_back(p.sides[a]);
  }
  for (int e = 0; e < f.contract_count(); ++e) {
    if (removed.contains(e)) continue;
    std::vector<int> parts;
    for (int a : f.participants[e]) parts.push_back(agent_index[a]);
    out.frame.participants.push_back(std::move(parts));
  }
  for (int a = 0; a < f.agent_count(); ++a) {
    if (a == agent) continue;
    const ChoiceFunction& cf = p.cfs[a];
    if (cf.domain().intersects(removed)) {
      out.cfs.push_back(relabel(restrict_to(cf, cf.domain() - removed, limits),
                                contract_index));
    } else {
      out.cfs.push_back(relabel(cf, contract_index));
    }
  }
  return out;
}

}  // namespace plott

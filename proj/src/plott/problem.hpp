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

#ifndef PLOTT_PROBLEM_HPP_
#define PLOTT_PROBLEM_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plott/choice.hpp"
#include "plott/limits.hpp"
#include "plott/menu.hpp"

namespace plott {

// A set of contracts, as a subset of the problem's contract indices.
using ContractSystem = Menu;

// Agents, contracts and who participates in what.
struct Frame {
  std::vector<std::string> agents;
  std::vector<std::string> contracts;
  std::vector<std::vector<int>> participants;  // P(e), per contract

  int agent_count() const { return static_cast<int>(agents.size()); }
  int contract_count() const { return static_cast<int>(contracts.size()); }
  Menu all_contracts() const { return Menu::first(contract_count()); }

  // E(a) = {e : a ∈ P(e)}.
  Menu incidence(int agent) const;
  std::optional<int> find_agent(std::string_view name) const;
  std::optional<int> find_contract(std::string_view name) const;
};

enum class Side { kUnspecified, kFirm, kWorker };

std::string_view side_name(Side side);

struct Problem {
  Frame frame;
  std::vector<ChoiceFunction> cfs;  // C_a with domain E(a)
  std::vector<Side> sides;          // one per agent; may be all kUnspecified

  // Every agent is a firm or a worker.
  bool has_bipartition() const;
  // Bipartition present and each contract joins exactly one firm and one
  // worker.
  bool is_bipartite_pairwise() const;
  std::vector<int> agents_on(Side side) const;

  // Agent or contract index by name; kInput error when unknown.
  int agent(std::string_view name) const;
  int contract(std::string_view name) const;
  ContractSystem system(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(ContractSystem s) const;
};

// Checks every structural invariant. When `split_workers` is given, also
// checks that no contract joins two of them (kConnectivity).
void validate_problem(const Problem& p,
                      const std::vector<int>* split_workers = nullptr);

// I(-a): agent a and its contracts removed; other CFs restricted to the
// surviving contracts in table form. Surviving contracts keep their
// relative order.
Problem delete_agent(const Problem& p, int agent,
                     const Limits& limits = {});

}  // namespace plott

#endif  // PLOTT_PROBLEM_HPP_

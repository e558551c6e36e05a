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

#include "plott/stability.hpp"

#include <string>

#include "plott/axioms.hpp"
#include "plott/errors.hpp"

namespace plott {

namespace {

void require_system(const Problem& p, ContractSystem s) {
  if (!s.subset_of(p.frame.all_contracts())) {
    fail(ErrorCode::kDomain, "system names contracts outside the problem");
  }
}

void require_agent(const Problem& p, int agent) {
  if (agent < 0 || agent >= p.frame.agent_count()) {
    fail(ErrorCode::kInput, "unknown agent index " + std::to_string(agent));
  }
}

}  // namespace

StabilityReport is_stable_within(const Problem& p, ContractSystem s,
                                 Menu universe) {
  require_system(p, s);
  const Frame& f = p.frame;
  StabilityReport report;
  std::vector<Menu> held(f.agent_count());
  for (int a = 0; a < f.agent_count(); ++a) {
    held[a] = s & p.cfs[a].domain();
    if (p.cfs[a].choose(held[a]) != held[a]) {
      report.acceptability_violations.push_back(a);
    }
  }
  for (int e : universe & f.all_contracts()) {
    if (s.contains(e)) continue;
    bool blocks = true;
    for (int a : f.participants[e]) {
      if (!p.cfs[a].choose(held[a].with(e)).contains(e)) {
        blocks = false;
        break;
      }
    }
    if (blocks) report.blocking = report.blocking.with(e);
  }
  report.stable =
      report.acceptability_violations.empty() && report.blocking.empty();
  return report;
}

StabilityReport is_stable(const Problem& p, ContractSystem s) {
  return is_stable_within(p, s, p.frame.all_contracts());
}

std::vector<ContractSystem> enumerate_stable(const Problem& p,
                                             const Limits& limits) {
  const Frame& f = p.frame;
  const int n = f.contract_count();
  if (n > limits.enumerate) {
    fail(ErrorCode::kLimit, "enumeration over " + std::to_string(n) +
                                " contracts exceeds limit " +
                                std::to_string(limits.enumerate));
  }
  std::vector<Menu> domains(f.agent_count());
  for (int a = 0; a < f.agent_count(); ++a) domains[a] = p.cfs[a].domain();

  std::vector<ContractSystem> out;
  std::vector<Menu> held(f.agent_count());
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ContractSystem s(bits);
    bool ok = true;
    for (int a = 0; a < f.agent_count() && ok; ++a) {
      held[a] = s & domains[a];
      ok = p.cfs[a].choose(held[a]) == held[a];
    }
    for (int e = 0; e < n && ok; ++e) {
      if (s.contains(e)) continue;
      bool blocks = true;
      for (int a : f.participants[e]) {
        if (!p.cfs[a].choose(held[a].with(e)).contains(e)) {
          blocks = false;
          break;
        }
      }
      ok = !blocks;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

bool blair_compare_systems(const Problem& p, int agent, ContractSystem s,
                           ContractSystem t) {
  require_agent(p, agent);
  require_system(p, s);
  require_system(p, t);
  const ChoiceFunction& cf = p.cfs[agent];
  const Menu sa = s & cf.domain();
  const Menu ta = t & cf.domain();
  return cf.choose(sa | ta).subset_of(ta);
}

bool firms_blair_leq(const Problem& p, ContractSystem s, ContractSystem t) {
  if (!p.has_bipartition()) {
    fail(ErrorCode::kPrecondition,
         "the all-firms Blair order needs every agent marked firm or worker");
  }
  for (int m : p.agents_on(Side::kFirm)) {
    if (!blair_compare_systems(p, m, s, t)) return false;
  }
  return true;
}

void require_linear_workers_monotone_firms(const Problem& p,
                                           const Limits& limits) {
  if (!p.is_bipartite_pairwise()) {
    fail(ErrorCode::kPrecondition,
         "problem must be bipartite with firm-worker pair contracts");
  }
  for (int w : p.agents_on(Side::kWorker)) {
    if (!is_linear_cf(p.cfs[w], limits)) {
      fail(ErrorCode::kPrecondition,
           "worker '" + p.frame.agents[w] + "' is not linear");
    }
  }
  for (int m : p.agents_on(Side::kFirm)) {
    if (!is_cardinally_monotone_plott(p.cfs[m], limits)) {
      fail(ErrorCode::kPrecondition,
           "firm '" + p.frame.agents[m] +
               "' is not a cardinally monotone Plott choice function");
    }
  }
}

ContractSystem lattice_join_bipartite(const Problem& p, ContractSystem s,
                                      ContractSystem t, const Limits& limits) {
  require_linear_workers_monotone_firms(p, limits);
  if (!is_stable(p, s).stable || !is_stable(p, t).stable) {
    fail(ErrorCode::kPrecondition, "join operands must be stable systems");
  }
  ContractSystem join;
  for (int m : p.agents_on(Side::kFirm)) {
    const ChoiceFunction& cf = p.cfs[m];
    join |= cf.choose((s | t) & cf.domain());
  }
  return join;
}

}  // namespace plott

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

#include "plott/reports.hpp"

#include <algorithm>
#include <string>

namespace plott {

using nlohmann::json;

namespace {

json optional_agent(const Problem& p, const std::optional<int>& a) {
  return a ? agent_json(p, *a) : json(nullptr);
}

json optional_contract(const Problem& p, const std::optional<int>& e) {
  if (!e) return nullptr;
  return {{"index", *e}, {"name", p.frame.contracts[*e]}};
}

json optional_flag(const std::optional<bool>& flag) {
  return flag ? json(*flag) : json(nullptr);
}

}  // namespace

json system_json(const Problem& p, ContractSystem s) {
  std::vector<std::string> names;
  std::vector<int> indices;
  for (int e : s) {
    names.push_back(p.frame.contracts.at(e));
    indices.push_back(e);
  }
  std::sort(names.begin(), names.end());
  return {{"indices", indices}, {"names", names}};
}

json agent_json(const Problem& p, int agent) {
  return {{"index", agent}, {"name", p.frame.agents.at(agent)}};
}

json audit_json(const Problem& p, int agent, const AxiomReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"a", system_json(p, w.a)},
                         {"axiom", std::string(axiom_name(w.axiom))},
                         {"b", system_json(p, w.b)}});
  }
  return {{"agent", agent_json(p, agent)},
          {"kind", std::string(cf_kind_name(p.cfs[agent].kind()))},
          {"cardinally_monotone", r.cardinally_monotone},
          {"consistent", r.consistent},
          {"nonempty_valued", r.nonempty_valued},
          {"path_independent", optional_flag(r.path_independent)},
          {"plott", r.plott},
          {"quota", r.quota ? json(*r.quota) : json(nullptr)},
          {"substitutable", r.substitutable},
          {"witnesses", witnesses}};
}

json decomposition_json(const Problem& p, int agent, int max_q,
                        const std::optional<LinearOrders>& orders) {
  json stages = nullptr;
  if (orders) {
    stages = json::array();
    for (const auto& order : *orders) {
      json names = json::array();
      for (int e : order) names.push_back(p.frame.contracts[e]);
      stages.push_back(names);
    }
  }
  return {{"agent", agent_json(p, agent)},
          {"found", orders.has_value()},
          {"max_q", max_q},
          {"stages", stages}};
}

json stability_json(const Problem& p, ContractSystem s,
                    const StabilityReport& r) {
  json violations = json::array();
  for (int a : r.acceptability_violations) violations.push_back(agent_json(p, a));
  return {{"acceptability_violations", violations},
          {"blocking", system_json(p, r.blocking)},
          {"stable", r.stable},
          {"system", system_json(p, s)}};
}

json systems_json(const Problem& p,
                  const std::vector<ContractSystem>& systems) {
  json list = json::array();
  for (ContractSystem s : systems) list.push_back(system_json(p, s));
  return {{"count", systems.size()}, {"systems", list}};
}

json trace_json(const Problem& p, const std::vector<int>& order,
                const WorkerReturnTrace& trace) {
  json workers = json::array();
  for (int w : order) workers.push_back(agent_json(p, w));
  json steps = json::array();
  for (const auto& step : trace.steps) {
    steps.push_back(
        {{"evicted_worker", optional_agent(p, step.evicted_worker)},
         {"firm", optional_agent(p, step.firm)},
         {"offered_contract", optional_contract(p, step.offered_contract)},
         {"rejected_contract", optional_contract(p, step.rejected_contract)},
         {"returned_worker", agent_json(p, step.returned_worker)},
         {"situation", std::string(situation_name(step.situation))},
         {"system", system_json(p, step.system)}});
  }
  return {{"order", workers},
          {"result", system_json(p, trace.result)},
          {"start", system_json(p, trace.start)},
          {"steps", steps}};
}

json equivalence_json(const Problem& p, const EquivalenceReport& report) {
  const Problem& mod = report.split.modified;
  json original = json::array();
  for (ContractSystem s : report.original_stable) {
    original.push_back(system_json(p, s));
  }
  json modified = json::array();
  for (ContractSystem s : report.modified_stable) {
    modified.push_back(system_json(mod, s));
  }
  json pairing = json::array();
  for (const auto& pair : report.pairing) {
    pairing.push_back({{"modified", system_json(mod, pair.modified)},
                       {"original", system_json(p, pair.original)}});
  }
  json counterexample = nullptr;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    counterexample = {{"detail", c.detail},
                      {"modified", system_json(mod, c.modified)},
                      {"original", system_json(p, c.original)},
                      {"property", c.property}};
  }
  std::vector<int> split;
  for (int a = 0; a < p.frame.agent_count(); ++a) {
    if (std::count(report.split.agent_map.begin(), report.split.agent_map.end(),
                   a) > 1) {
      split.push_back(a);
    }
  }
  json workers = json::array();
  for (int w : split) workers.push_back(agent_json(p, w));
  return {{"bijection_ok", report.bijection_ok},
          {"counterexample", counterexample},
          {"iso_ok", optional_flag(report.iso_ok)},
          {"join_ok", optional_flag(report.join_ok)},
          {"lemmas_ok", report.lemmas_ok},
          {"modified_stable", modified},
          {"monotone_ok", report.monotone_ok},
          {"original_stable", original},
          {"pairing", pairing},
          {"split_workers", workers}};
}

}  // namespace plott

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

#include "plott/disaggregation.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "plott/axioms.hpp"
#include "plott/decompose.hpp"
#include "plott/errors.hpp"
#include "plott/stability.hpp"

namespace plott {
namespace {

// Modified problem together with the maps back to the original one.
struct State {
  Problem problem;
  std::vector<int> contract_map;
  std::vector<int> agent_map;
  std::vector<int> floor_of;
};

State identity_state(const Problem& p) {
  State st{p, {}, {}, {}};
  for (int e = 0; e < p.frame.contract_count(); ++e) {
    st.contract_map.push_back(e);
    st.floor_of.push_back(0);
  }
  for (int a = 0; a < p.frame.agent_count(); ++a) st.agent_map.push_back(a);
  return st;
}

struct BinarySplit {
  State next;
  std::vector<int> first_copy;  // previous contract -> copy held by clone 1
  std::vector<int> rest_copy;   // previous contract -> copy held by clone 2
};

// Splits agent `a` of st.problem into `first_name` (CF `first`) and
// `rest_name` (CF `rest`). `copy_names` gives the two copy names of each
// contract of `a`; `floors` gives their levels.
BinarySplit binary_split(const State& st, int a, const ChoiceFunction& first,
                         const ChoiceFunction& rest,
                         const std::string& first_name,
                         const std::string& rest_name,
                         const std::vector<std::pair<std::string, std::string>>&
                             copy_names,
                         std::pair<int, int> floors) {
  const Problem& cur = st.problem;
  const Frame& f = cur.frame;
  const int n = f.contract_count();
  const int agents = f.agent_count();
  const Menu own = f.incidence(a);
  if (n + own.size() > Menu::kMaxElements) {
    fail(ErrorCode::kLimit, "split needs more than 64 contracts");
  }

  std::vector<int> agent_index(agents);
  for (int b = 0; b < agents; ++b) agent_index[b] = b <= a ? b : b + 1;
  const int first_agent = a;
  const int rest_agent = a + 1;

  BinarySplit out;
  out.first_copy.assign(n, -1);
  out.rest_copy.assign(n, -1);
  std::vector<int> plain(n, -1);
  State& nx = out.next;
  Frame& nf = nx.problem.frame;

  auto mapped_participants = [&](int e, int self) {
    std::vector<int> parts;
    for (int b : f.participants[e]) {
      parts.push_back(b == a ? self : agent_index[b]);
    }
    return parts;
  };
  for (int e = 0; e < n; ++e) {
    if (own.contains(e)) {
      out.first_copy[e] = nf.contract_count();
      nf.contracts.push_back(copy_names[e].first);
      nf.participants.push_back(mapped_participants(e, first_agent));
      nx.contract_map.push_back(st.contract_map[e]);
      nx.floor_of.push_back(floors.first);

      out.rest_copy[e] = nf.contract_count();
      nf.contracts.push_back(copy_names[e].second);
      nf.participants.push_back(mapped_participants(e, rest_agent));
      nx.contract_map.push_back(st.contract_map[e]);
      nx.floor_of.push_back(floors.second);
    } else {
      plain[e] = nf.contract_count();
      nf.contracts.push_back(f.contracts[e]);
      nf.participants.push_back(mapped_participants(e, -1));
      nx.contract_map.push_back(st.contract_map[e]);
      nx.floor_of.push_back(st.floor_of[e]);
    }
  }

  GroundSet ground{f.contracts};
  for (int b = 0; b < agents; ++b) {
    const Side side = cur.sides.empty() ? Side::kUnspecified : cur.sides[b];
    if (b == a) {
      nf.agents.push_back(first_name);
      nf.agents.push_back(rest_name);
      nx.problem.cfs.push_back(relabel(first, out.first_copy));
      nx.problem.cfs.push_back(relabel(rest, out.rest_copy));
      nx.problem.sides.push_back(side);
      nx.problem.sides.push_back(side);
      nx.agent_map.push_back(st.agent_map[a]);
      nx.agent_map.push_back(st.agent_map[a]);
      continue;
    }
    nf.agents.push_back(f.agents[b]);
    nx.problem.sides.push_back(side);
    nx.agent_map.push_back(st.agent_map[b]);
    const Menu mine = f.incidence(b);
    if (!mine.intersects(own)) {
      nx.problem.cfs.push_back(relabel(cur.cfs[b], plain));
      continue;
    }
    // Each shared contract e becomes the fiber {e#first > e#rest}.
    std::map<int, int> fiber_of;
    std::map<int, ChoiceFunction> fiber_cfs;
    for (int e : mine) {
      if (own.contains(e)) {
        fiber_of[out.first_copy[e]] = e;
        fiber_of[out.rest_copy[e]] = e;
        fiber_cfs.emplace(e, make_linear({out.first_copy[e], out.rest_copy[e]}));
      } else {
        fiber_of[plain[e]] = e;
        fiber_cfs.emplace(e, make_linear({plain[e]}));
      }
    }
    nx.problem.cfs.push_back(
        integrate(cur.cfs[b], fiber_of, std::move(fiber_cfs), ground));
  }
  return out;
}

// Carries stage CFs given over the original contracts of `w` into the
// current contract space of its unsplit agent `a`.
ChoiceFunction carry_stage(const Problem& original, const State& st, int a,
                           const ChoiceFunction& stage) {
  const Menu domain = st.problem.cfs[a].domain();
  std::vector<int> index(original.frame.contract_count(), -1);
  Menu image;
  bool injective = true;
  for (int e : domain) {
    const int o = st.contract_map[e];
    if (index[o] >= 0) injective = false;
    index[o] = e;
    image = image.with(o);
  }
  if (injective && image == stage.domain()) return relabel(stage, index);
  // The contracts of this agent were copied by an earlier split. Each
  // original contract lies under its copies, ranked by index.
  std::map<int, int> fiber_of;
  std::map<int, std::vector<int>> members;
  for (int e : domain) {
    const int o = st.contract_map[e];
    if (!stage.domain().contains(o)) {
      fail(ErrorCode::kDomain, "stage does not cover contract " +
                                   original.frame.contracts[o]);
    }
    fiber_of[e] = o;
    members[o].push_back(e);
  }
  std::map<int, ChoiceFunction> fiber_cfs;
  for (auto& [o, list] : members) fiber_cfs.emplace(o, make_linear(list));
  return integrate(stage, fiber_of, std::move(fiber_cfs),
                   GroundSet{original.frame.contracts});
}

ChoiceFunction compose_stages(const std::vector<ChoiceFunction>& stages,
                              std::size_t from) {
  if (stages.size() - from == 1) return stages[from];
  return make_sequential(
      std::vector<ChoiceFunction>(stages.begin() + from, stages.end()));
}

void check_stages(const Problem& p, int w,
                  const std::vector<ChoiceFunction>& stages,
                  const SplitOptions& options, const Limits& limits) {
  const std::string& name = p.frame.agents[w];
  if (stages.empty()) {
    fail(ErrorCode::kPrecondition, "empty decomposition for " + name);
  }
  const Menu domain = p.frame.incidence(w);
  for (std::size_t j = 0; j < stages.size(); ++j) {
    if (stages[j].domain() != domain) {
      fail(ErrorCode::kDomain, "stage " + std::to_string(j + 1) + " of " +
                                   name + " is not over E(" + name + ")");
    }
    if (!is_plott(stages[j], limits)) {
      fail(ErrorCode::kPrecondition, "stage " + std::to_string(j + 1) +
                                         " of " + name + " is not Plott");
    }
  }
  if (options.check_faithfulness &&
      !same_choices(compose_stages(stages, 0), p.cfs[w], limits)) {
    fail(ErrorCode::kPrecondition,
         "stages do not compose to the choice function of " + name);
  }
}

SplitResult to_result(State st) {
  return {std::move(st.problem), std::move(st.contract_map),
          std::move(st.agent_map), std::move(st.floor_of)};
}

}  // namespace

SplitResult split_agent_once(const Problem& p, int w,
                             const ChoiceFunction& first,
                             const ChoiceFunction& second,
                             const Limits& limits) {
  return split_workers(p, {{w, {first, second}}}, {}, limits);
}

SplitResult split_workers(const Problem& p, const Decomposition& decomposition,
                          const SplitOptions& options, const Limits& limits) {
  validate_problem(p);
  std::vector<int> workers;
  for (const auto& [w, stages] : decomposition) {
    if (w < 0 || w >= p.frame.agent_count()) {
      fail(ErrorCode::kInput, "no agent with index " + std::to_string(w));
    }
    check_stages(p, w, stages, options, limits);
    workers.push_back(w);
  }
  if (options.check_connectivity) validate_problem(p, &workers);

  State st = identity_state(p);
  for (const auto& [w, stages] : decomposition) {
    const std::size_t q = stages.size();
    if (q == 1) continue;
    int a = -1;
    for (int b = 0; b < st.problem.frame.agent_count(); ++b) {
      if (st.agent_map[b] == w) a = b;
    }
    const std::string base_name = st.problem.frame.agents[a];
    std::vector<ChoiceFunction> carried;
    for (const auto& stage : stages) {
      carried.push_back(carry_stage(p, st, a, stage));
    }
    // Names of this worker's contracts before any of its own copies.
    std::map<int, std::string> base_contract;
    for (int e : st.problem.frame.incidence(a)) {
      base_contract[e] = st.problem.frame.contracts[e];
    }

    for (std::size_t j = 1; j < q; ++j) {
      const int n = st.problem.frame.contract_count();
      std::vector<std::pair<std::string, std::string>> names(n);
      const std::string lo = "#" + std::to_string(j);
      const std::string hi = "#" + std::to_string(j + 1);
      for (const auto& [e, name] : base_contract) names[e] = {name + lo, name + hi};
      const ChoiceFunction rest = compose_stages(carried, j);
      BinarySplit step =
          binary_split(st, a, carried[j - 1], rest, base_name + lo,
                       base_name + hi, names,
                       {static_cast<int>(j), static_cast<int>(j + 1)});
      // Carry the remaining stages and names onto the second clone's copies.
      std::map<int, std::string> next_names;
      for (const auto& [e, name] : base_contract) {
        next_names[step.rest_copy[e]] = name;
      }
      base_contract = std::move(next_names);
      for (std::size_t k = j; k < q; ++k) {
        carried[k] = relabel(carried[k], step.rest_copy);
      }
      st = std::move(step.next);
      a += 1;
    }
  }
  return to_result(std::move(st));
}

std::vector<ChoiceFunction> decomposition_for(const Problem& p, int w,
                                              const Limits& limits) {
  const ChoiceFunction& cf = p.cfs.at(w);
  switch (cf.kind()) {
    case CfKind::kSequential:
      return cf.sequential().stages;
    case CfKind::kQuota: {
      const auto& rep = cf.quota();
      const int q =
          std::min(rep.q, static_cast<int>(rep.order.size()));
      return std::vector<ChoiceFunction>(std::max(q, 1),
                                         make_linear(rep.order));
    }
    case CfKind::kLinear:
      return {cf};
    default:
      break;
  }
  if (!is_plott(cf, limits)) {
    fail(ErrorCode::kPrecondition,
         "choice function of " + p.frame.agents[w] + " is not Plott");
  }
  auto orders =
      find_sequential_decomposition(cf, cf.domain().size(), limits);
  if (!orders) {
    fail(ErrorCode::kPrecondition, "choice function of " + p.frame.agents[w] +
                                       " has no sequential decomposition");
  }
  std::vector<ChoiceFunction> stages;
  for (auto& order : *orders) stages.push_back(make_linear(std::move(order)));
  if (stages.empty()) stages.push_back(cf);
  return stages;
}

Decomposition default_decomposition(const Problem& p) {
  Decomposition out;
  for (int w = 0; w < p.frame.agent_count(); ++w) {
    if (p.sides.empty() || p.sides[w] != Side::kWorker) continue;
    const CfKind kind = p.cfs[w].kind();
    if (kind != CfKind::kSequential && kind != CfKind::kQuota) continue;
    auto stages = decomposition_for(p, w);
    if (stages.size() > 1) out.emplace(w, std::move(stages));
  }
  return out;
}

ContractSystem project_system(const SplitResult& split, ContractSystem s) {
  ContractSystem out;
  for (int e : s) {
    if (e >= static_cast<int>(split.contract_map.size())) {
      fail(ErrorCode::kDomain, "contract index outside the modified problem");
    }
    out = out.with(split.contract_map[e]);
  }
  return out;
}

ContractSystem lift_system(const Problem& original, const SplitResult& split,
                           ContractSystem s) {
  if (!s.subset_of(original.frame.all_contracts())) {
    fail(ErrorCode::kDomain, "system is not inside the original problem");
  }
  if (!is_stable(original, s).stable) {
    fail(ErrorCode::kPrecondition, "lift needs a stable system");
  }
  const Problem& mod = split.modified;
  const int agents = original.frame.agent_count();
  std::vector<std::vector<int>> clones(agents);
  for (int b = 0; b < mod.frame.agent_count(); ++b) {
    clones[split.agent_map[b]].push_back(b);
  }
  std::vector<int> copies(original.frame.contract_count(), 0);
  std::vector<int> only(original.frame.contract_count(), -1);
  for (int e = 0; e < mod.frame.contract_count(); ++e) {
    ++copies[split.contract_map[e]];
    only[split.contract_map[e]] = e;
  }

  ContractSystem out;
  for (int e : s) {
    if (copies[e] == 1) out = out.with(only[e]);
  }
  for (int w = 0; w < agents; ++w) {
    if (clones[w].size() < 2) continue;
    Menu remaining = s & original.frame.incidence(w);
    for (int c : clones[w]) {
      Menu offered;
      for (int e : mod.cfs[c].domain()) {
        if (remaining.contains(split.contract_map[e])) offered = offered.with(e);
      }
      const Menu chosen = mod.cfs[c].choose(offered);
      out |= chosen;
      remaining -= project_system(split, chosen);
    }
  }
  return out;
}

namespace {

struct Checker {
  const Problem& p;
  const Decomposition& d;
  const Limits& limits;
  EquivalenceReport& report;

  void flag(bool& field, std::string property, ContractSystem modified,
            ContractSystem original, std::string detail) {
    field = false;
    if (!report.counterexample) {
      report.counterexample = Counterexample{std::move(property), modified,
                                             original, std::move(detail)};
    }
  }

  // Acceptability of each unsplit agent's projected holding and the floor
  // criteria for each split worker.
  void lemmas(ContractSystem sm, ContractSystem so) {
    const SplitResult& sr = report.split;
    const Problem& mod = sr.modified;
    std::vector<int> clone_count(p.frame.agent_count(), 0);
    for (int b = 0; b < mod.frame.agent_count(); ++b) {
      ++clone_count[sr.agent_map[b]];
    }
    for (int b = 0; b < mod.frame.agent_count(); ++b) {
      const int m = sr.agent_map[b];
      if (clone_count[m] > 1) continue;
      const Menu held = sm & mod.frame.incidence(b);
      const Menu proj = project_system(sr, held);
      if (proj.size() != held.size() || p.cfs[m].choose(proj) != proj) {
        flag(report.lemmas_ok, "holding", sm, so,
             "projected holding of " + p.frame.agents[m] +
                 " is not acceptable");
        return;
      }
    }
    for (const auto& [w, stages] : d) {
      if (stages.size() < 2) continue;
      std::vector<Menu> floor(stages.size());
      for (int e : sm) {
        const int o = sr.contract_map[e];
        const int j = sr.floor_of[e];
        if (j >= 1 && p.frame.incidence(w).contains(o) &&
            j <= static_cast<int>(stages.size())) {
          floor[j - 1] = floor[j - 1].with(o);
        }
      }
      Menu earlier;
      for (std::size_t j = 0; j < stages.size(); ++j) {
        const Menu rest = (so & p.frame.incidence(w)) - earlier;
        if (stages[j].choose(floor[j]) != floor[j] ||
            stages[j].choose(rest) != floor[j]) {
          flag(report.lemmas_ok, "floor", sm, so,
               "floor " + std::to_string(j + 1) + " of " + p.frame.agents[w] +
                   " is not chosen by its stage");
          return;
        }
        for (std::size_t i = 0; i < j; ++i) {
          for (int e : floor[j]) {
            if (stages[i].choose(floor[i].with(e)) != floor[i]) {
              flag(report.lemmas_ok, "floor", sm, so,
                   "contract " + p.frame.contracts[e] + " on floor " +
                       std::to_string(j + 1) + " is desirable at floor " +
                       std::to_string(i + 1));
              return;
            }
          }
        }
        earlier |= floor[j];
      }
    }
  }
};

bool isomorphism_applies(const Problem& p, const Decomposition& d,
                         const Limits& limits) {
  if (!p.is_bipartite_pairwise()) return false;
  for (int m : p.agents_on(Side::kFirm)) {
    if (!is_cardinally_monotone_plott(p.cfs[m], limits)) return false;
  }
  for (int w : p.agents_on(Side::kWorker)) {
    auto it = d.find(w);
    if (it == d.end() || it->second.size() < 2) {
      if (!is_linear_cf(p.cfs[w], limits)) return false;
      continue;
    }
    for (const auto& stage : it->second) {
      if (!is_linear_cf(stage, limits)) return false;
    }
  }
  return true;
}

}  // namespace

EquivalenceReport verify_equivalence(const Problem& p,
                                     const Decomposition& decomposition,
                                     const SplitOptions& options,
                                     const Limits& limits) {
  EquivalenceReport report;
  report.split = split_workers(p, decomposition, options, limits);
  report.original_stable = enumerate_stable(p, limits);
  report.modified_stable = enumerate_stable(report.split.modified, limits);
  const SplitResult& sr = report.split;
  const Problem& mod = sr.modified;
  Checker check{p, decomposition, limits, report};

  const std::set<ContractSystem> original(report.original_stable.begin(),
                                          report.original_stable.end());
  const std::set<ContractSystem> modified(report.modified_stable.begin(),
                                          report.modified_stable.end());
  std::set<ContractSystem> images;
  for (ContractSystem sm : report.modified_stable) {
    const ContractSystem so = project_system(sr, sm);
    report.pairing.push_back({sm, so});
    const bool injective = so.size() == sm.size();
    const bool stable = original.count(so) > 0;
    if (!injective || !stable) {
      std::string detail;
      if (!injective) detail = "projection is not injective";
      if (!stable) {
        detail += std::string(detail.empty() ? "" : "; ") +
                  "projection is not stable";
      }
      check.flag(report.bijection_ok, "projection", sm, so, detail);
      continue;
    }
    if (!images.insert(so).second) {
      check.flag(report.bijection_ok, "projection", sm, so,
                 "two stable systems share a projection");
    }
    if (lift_system(p, sr, so) != sm) {
      check.flag(report.bijection_ok, "lift", sm, so,
                 "lift of the projection differs");
    }
    check.lemmas(sm, so);
  }
  for (ContractSystem so : report.original_stable) {
    const ContractSystem lifted = lift_system(p, sr, so);
    if (!modified.count(lifted) || project_system(sr, lifted) != so) {
      check.flag(report.bijection_ok, "lift", lifted, so,
                 "lift is not a stable preimage");
    }
  }

  // Agents of the modified problem that were not split.
  std::vector<int> kept;
  {
    std::vector<int> count(p.frame.agent_count(), 0);
    for (int b = 0; b < mod.frame.agent_count(); ++b) ++count[sr.agent_map[b]];
    for (int b = 0; b < mod.frame.agent_count(); ++b) {
      if (count[sr.agent_map[b]] == 1) kept.push_back(b);
    }
  }
  for (const auto& [sm, so] : report.pairing) {
    for (const auto& [tm, to] : report.pairing) {
      for (int b : kept) {
        if (blair_compare_systems(mod, b, sm, tm) &&
            !blair_compare_systems(p, sr.agent_map[b], so, to)) {
          check.flag(report.monotone_ok, "monotone", tm, to,
                     "order of " + mod.frame.agents[b] +
                         " is not preserved by projection");
        }
      }
    }
  }

  if (!report.bijection_ok || !isomorphism_applies(p, decomposition, limits)) {
    return report;
  }
  report.iso_ok = true;
  report.join_ok = true;
  require_linear_workers_monotone_firms(mod, limits);
  const std::vector<int> firms = p.agents_on(Side::kFirm);
  for (const auto& [sm, so] : report.pairing) {
    for (const auto& [tm, to] : report.pairing) {
      if (firms_blair_leq(p, so, to) && !firms_blair_leq(mod, sm, tm)) {
        check.flag(*report.iso_ok, "isomorphism", tm, to,
                   "firm order is not reflected after the split");
      }
      const ContractSystem jm = lattice_join_bipartite(mod, sm, tm, limits);
      bool ok = modified.count(jm) && firms_blair_leq(mod, sm, jm) &&
                firms_blair_leq(mod, tm, jm);
      for (ContractSystem um : report.modified_stable) {
        if (!ok) break;
        if (firms_blair_leq(mod, sm, um) && firms_blair_leq(mod, tm, um)) {
          ok = firms_blair_leq(mod, jm, um);
        }
      }
      ContractSystem jo;
      for (int m : firms) {
        const Menu own = p.frame.incidence(m);
        jo |= p.cfs[m].choose((so | to) & own);
      }
      if (!ok || project_system(sr, jm) != jo) {
        check.flag(*report.join_ok, "join", jm, jo,
                   "firm-wise join is not the least stable upper bound");
      }
    }
  }
  return report;
}

}  // namespace plott

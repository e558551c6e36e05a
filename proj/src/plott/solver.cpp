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

#include "plott/solver.hpp"

#include <string>

#include "plott/errors.hpp"
#include "plott/stability.hpp"

namespace plott {

namespace {

// Pair contracts only: the participant of e other than `agent`.
int partner(const Problem& p, int e, int agent) {
  const auto& parts = p.frame.participants[e];
  return parts[0] == agent ? parts[1] : parts[0];
}

int worker_of(const Problem& p, int e) {
  for (int a : p.frame.participants[e]) {
    if (p.sides[a] == Side::kWorker) return a;
  }
  fail(ErrorCode::kInternal, "contract without a worker");
}

void require_worker(const Problem& p, int w) {
  if (w < 0 || w >= p.frame.agent_count()) {
    fail(ErrorCode::kInput, "unknown agent index " + std::to_string(w));
  }
  if (p.sides[w] != Side::kWorker) {
    fail(ErrorCode::kInput, "agent '" + p.frame.agents[w] + "' is not a worker");
  }
}

void require_stable_without(const Problem& p, ContractSystem s0, int w0,
                            Menu universe) {
  const Menu returning = p.cfs[w0].domain();
  if (s0.intersects(returning) ||
      !is_stable_within(p, s0, universe - returning).stable) {
    fail(ErrorCode::kPrecondition, "system is not stable without worker '" +
                                       p.frame.agents[w0] + "'");
  }
}

ContractSystem interested(const Problem& p, ContractSystem s0, int w0) {
  ContractSystem d;
  for (int e : p.cfs[w0].domain()) {
    const ChoiceFunction& firm = p.cfs[partner(p, e, w0)];
    if (firm.choose((s0 & firm.domain()).with(e)).contains(e)) d = d.with(e);
  }
  return d;
}

StepOutcome step(const Problem& p, ContractSystem s0, int w0) {
  StepOutcome out;
  out.returned_worker = w0;
  const ContractSystem d_set = interested(p, s0, w0);
  if (d_set.empty()) {
    out.situation = Situation::kNoInterest;
    out.system = s0;
    return out;
  }
  const Menu best = p.cfs[w0].choose(d_set);
  if (best.size() != 1) {
    fail(ErrorCode::kInternal, "worker '" + p.frame.agents[w0] +
                                   "' did not pick a single contract");
  }
  const int d = best.front();
  const int m = partner(p, d, w0);
  const ChoiceFunction& firm = p.cfs[m];
  const Menu offered = (s0 & firm.domain()).with(d);
  const Menu kept = firm.choose(offered);
  out.firm = m;
  out.offered_contract = d;
  if (kept == offered) {
    out.situation = Situation::kAccepted;
    out.system = s0.with(d);
    return out;
  }
  const Menu rejected = offered - kept;
  if (rejected.size() != 1 || !kept.contains(d)) {
    fail(ErrorCode::kInternal,
         "firm '" + p.frame.agents[m] + "' rejected " +
             std::to_string(rejected.size()) +
             " contracts; its choice is not cardinally monotone");
  }
  const int s = rejected.front();
  out.situation = Situation::kEviction;
  out.system = (s0 - rejected).with(d);
  out.evicted_worker = worker_of(p, s);
  out.rejected_contract = s;
  return out;
}

// Runs steps from (s, missing) until the system settles. Absent workers hold
// no contracts in s, so s alone carries the state of the reduced problem.
void settle(const Problem& p, ContractSystem& s, int missing,
            WorkerReturnTrace& trace, std::uint64_t& budget) {
  while (true) {
    if (budget-- == 0) {
      fail(ErrorCode::kInternal,
           "worker-return loop exceeded its iteration cap");
    }
    StepOutcome out = step(p, s, missing);
    s = out.system;
    const std::optional<int> evicted = out.evicted_worker;
    trace.steps.push_back(std::move(out));
    if (!evicted) return;
    missing = *evicted;
  }
}

std::uint64_t iteration_cap(const Problem& p) {
  const int n = p.frame.contract_count();
  return n >= 62 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
}

void finish(const Problem& p, WorkerReturnTrace& trace, ContractSystem s) {
  trace.result = s;
  if (!is_stable(p, s).stable) {
    fail(ErrorCode::kInternal, "worker-return result is not stable");
  }
}

}  // namespace

std::string_view situation_name(Situation s) {
  switch (s) {
    case Situation::kNoInterest: return "situation0";
    case Situation::kAccepted: return "situation1";
    case Situation::kEviction: return "situation2";
  }
  return "unknown";
}

ContractSystem interested_set(const Problem& p, ContractSystem s0, int w0,
                              const Limits& limits) {
  require_linear_workers_monotone_firms(p, limits);
  require_worker(p, w0);
  require_stable_without(p, s0, w0, p.frame.all_contracts());
  return interested(p, s0, w0);
}

StepOutcome reinstate_step(const Problem& p, ContractSystem s0, int w0,
                           const Limits& limits) {
  require_linear_workers_monotone_firms(p, limits);
  require_worker(p, w0);
  require_stable_without(p, s0, w0, p.frame.all_contracts());
  return step(p, s0, w0);
}

WorkerReturnTrace solve_by_worker_return(
    const Problem& p, const std::optional<std::vector<int>>& order,
    const Limits& limits) {
  require_linear_workers_monotone_firms(p, limits);
  const std::vector<int> workers = p.agents_on(Side::kWorker);
  std::vector<int> sequence = order.value_or(workers);
  std::vector<bool> listed(p.frame.agent_count(), false);
  for (int w : sequence) {
    require_worker(p, w);
    if (listed[w]) {
      fail(ErrorCode::kInput,
           "worker '" + p.frame.agents[w] + "' appears twice in the order");
    }
    listed[w] = true;
  }
  if (sequence.size() != workers.size()) {
    fail(ErrorCode::kInput, "the order must list every worker exactly once");
  }

  WorkerReturnTrace trace;
  ContractSystem s;
  std::uint64_t budget = iteration_cap(p);
  for (int w : sequence) settle(p, s, w, trace, budget);
  finish(p, trace, s);
  return trace;
}

WorkerReturnTrace resume_worker_return(const Problem& p, ContractSystem s0,
                                       int missing, const Limits& limits) {
  require_linear_workers_monotone_firms(p, limits);
  require_worker(p, missing);
  require_stable_without(p, s0, missing, p.frame.all_contracts());
  WorkerReturnTrace trace;
  trace.start = s0;
  ContractSystem s = s0;
  std::uint64_t budget = iteration_cap(p);
  settle(p, s, missing, trace, budget);
  finish(p, trace, s);
  return trace;
}

}  // namespace plott

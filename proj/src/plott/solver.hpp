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

#ifndef PLOTT_SOLVER_HPP_
#define PLOTT_SOLVER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "plott/limits.hpp"
#include "plott/problem.hpp"

namespace plott {

// Outcome of returning one worker w0 to a system stable without it.
enum class Situation {
  kNoInterest,  // no firm wants a contract with w0; the system stands
  kAccepted,    // the firm takes w0's best interested contract d outright
  kEviction,    // the firm takes d and drops exactly one old contract
};

std::string_view situation_name(Situation s);

struct StepOutcome {
  Situation situation = Situation::kNoInterest;
  ContractSystem system;
  int returned_worker = -1;
  // Set for kAccepted and kEviction.
  std::optional<int> firm;
  std::optional<int> offered_contract;
  // Set for kEviction.
  std::optional<int> evicted_worker;
  std::optional<int> rejected_contract;
};

struct WorkerReturnTrace {
  ContractSystem start;  // system before the first step
  ContractSystem result;
  std::vector<StepOutcome> steps;
};

// Contracts of w0 that some firm m would add to its holdings s0(m).
// Requires s0 stable in I(-w0).
ContractSystem interested_set(const Problem& p, ContractSystem s0, int w0,
                              const Limits& limits = {});

// One reinstatement of w0 into s0 (stable in I(-w0)).
StepOutcome reinstate_step(const Problem& p, ContractSystem s0, int w0,
                           const Limits& limits = {});

// Starts from the problem without workers and S = ∅, then returns workers
// one at a time (default: index order), repeating the step on each evicted
// worker until the system settles. The result is checked to be stable.
WorkerReturnTrace solve_by_worker_return(
    const Problem& p, const std::optional<std::vector<int>>& order = {},
    const Limits& limits = {});

// Same loop, starting from s0 stable in I(-missing) with every other worker
// present.
WorkerReturnTrace resume_worker_return(const Problem& p, ContractSystem s0,
                                       int missing,
                                       const Limits& limits = {});

}  // namespace plott

#endif  // PLOTT_SOLVER_HPP_

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

#ifndef PLOTT_DISAGGREGATION_HPP_
#define PLOTT_DISAGGREGATION_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plott/choice.hpp"
#include "plott/limits.hpp"
#include "plott/problem.hpp"

namespace plott {

// Stage CFs C_w(1), ..., C_w(q) per worker, each over the worker's contracts
// in the original problem, with C_w = C_w(1) * ... * C_w(q).
using Decomposition = std::map<int, std::vector<ChoiceFunction>>;

struct SplitOptions {
  // Reject decompositions for workers that share a contract.
  bool check_connectivity = true;
  // Reject stages whose composition differs from the worker's CF.
  bool check_faithfulness = true;
};

// The modified problem and the projection π back onto the original one.
// A split worker w becomes clones "w#1".."w#q" in place; each of its
// contracts e becomes copies "e#1".."e#q", copy j belonging to clone j. Every
// other agent adjacent to w gets the integral of its CF over fibers
// {e#1 > ... > e#q}.
struct SplitResult {
  Problem modified;
  std::vector<int> contract_map;  // modified contract -> original contract
  std::vector<int> agent_map;     // modified agent -> original agent
  std::vector<int> floor_of;      // copy level 1..q, 0 for untouched contracts
};

// Splits w into two clones with CFs `first` and `second`.
SplitResult split_agent_once(const Problem& p, int w,
                             const ChoiceFunction& first,
                             const ChoiceFunction& second,
                             const Limits& limits = {});

// Splits every worker in the decomposition. q-way splits run as repeated
// two-way splits C_w = C_w(1) * (C_w(2) * ... * C_w(q)).
SplitResult split_workers(const Problem& p, const Decomposition& decomposition,
                          const SplitOptions& options = {},
                          const Limits& limits = {});

// Stages for one worker: Sequential stages as given, Quota(order, q) as q
// copies of its order, otherwise a searched sequential decomposition.
std::vector<ChoiceFunction> decomposition_for(const Problem& p, int w,
                                              const Limits& limits = {});
// Every agent on the worker side whose CF is Sequential or Quota with more
// than one stage.
Decomposition default_decomposition(const Problem& p);

ContractSystem project_system(const SplitResult& split, ContractSystem s);
// Inverse of project_system on stable systems: the part of S(w) chosen by
// clone 1 goes to floor 1, clone 2 chooses from what is left, and so on.
ContractSystem lift_system(const Problem& original, const SplitResult& split,
                           ContractSystem s);

struct Counterexample {
  std::string property;
  ContractSystem modified;
  ContractSystem original;
  std::string detail;
};

struct SystemPair {
  ContractSystem modified;
  ContractSystem original;
};

struct EquivalenceReport {
  SplitResult split;
  std::vector<ContractSystem> original_stable;
  std::vector<ContractSystem> modified_stable;
  std::vector<SystemPair> pairing;  // each modified stable system, projected
  bool bijection_ok = true;  // π_* is a bijection with lift as its inverse
  bool lemmas_ok = true;     // per-floor acceptability and fiber criteria
  bool monotone_ok = true;   // S~ ⪯_m~ T~  ⇒  S ⪯_m T
  // Only measured for pairwise bipartite problems whose firms are cardinally
  // monotone and whose workers become linear; absent otherwise.
  std::optional<bool> iso_ok;   // S ⪯_M T  ⇒  S~ ⪯_M~ T~
  std::optional<bool> join_ok;  // firm-wise join is the stable least upper bound
  std::optional<Counterexample> counterexample;  // first failure found

  bool all_ok() const {
    return bijection_ok && lemmas_ok && monotone_ok && iso_ok.value_or(true) &&
           join_ok.value_or(true);
  }
};

// Enumerates the stable systems on both sides of the split and checks the
// correspondence exhaustively.
EquivalenceReport verify_equivalence(const Problem& p,
                                     const Decomposition& decomposition,
                                     const SplitOptions& options = {},
                                     const Limits& limits = {});

}  // namespace plott

#endif  // PLOTT_DISAGGREGATION_HPP_

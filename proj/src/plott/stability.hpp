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

#ifndef PLOTT_STABILITY_HPP_
#define PLOTT_STABILITY_HPP_

#include <vector>

#include "plott/limits.hpp"
#include "plott/problem.hpp"

namespace plott {

struct StabilityReport {
  bool stable = true;
  std::vector<int> acceptability_violations;  // agents with C_a(S(a)) != S(a)
  ContractSystem blocking;  // contracts outside S desirable for all parties
};

StabilityReport is_stable(const Problem& p, ContractSystem s);

// Stability of s in the problem restricted to the contracts in `universe`
// (agents keep their CFs, evaluated on submenus). Equivalent to is_stable on
// the problem with the other contracts deleted.
StabilityReport is_stable_within(const Problem& p, ContractSystem s,
                                 Menu universe);

// Every stable system, in increasing mask order.
std::vector<ContractSystem> enumerate_stable(const Problem& p,
                                             const Limits& limits = {});

// s ⪯_a t: C_a(S(a) ∪ T(a)) ⊆ T(a).
bool blair_compare_systems(const Problem& p, int agent, ContractSystem s,
                           ContractSystem t);
// s ⪯_M t: the conjunction over all firms. Requires a bipartition.
bool firms_blair_leq(const Problem& p, ContractSystem s, ContractSystem t);

// ∪_m C_m(S(m) ∪ T(m)) over firms m. Requires a pairwise bipartite problem
// with linear workers, cardinally monotone Plott firms and stable s, t.
ContractSystem lattice_join_bipartite(const Problem& p, ContractSystem s,
                                      ContractSystem t,
                                      const Limits& limits = {});

// Throws kPrecondition unless p is pairwise bipartite, every worker is
// linear and every firm is a cardinally monotone Plott CF.
void require_linear_workers_monotone_firms(const Problem& p,
                                           const Limits& limits = {});

}  // namespace plott

#endif  // PLOTT_STABILITY_HPP_

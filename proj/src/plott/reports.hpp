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

#ifndef PLOTT_REPORTS_HPP_
#define PLOTT_REPORTS_HPP_

#include <optional>
#include <vector>

#include "json.hpp"
#include "plott/axioms.hpp"
#include "plott/decompose.hpp"
#include "plott/disaggregation.hpp"
#include "plott/problem.hpp"
#include "plott/solver.hpp"
#include "plott/stability.hpp"

namespace plott {

// Report payloads. Systems render as {"names": [...], "indices": [...]},
// names sorted, indices ascending.
nlohmann::json system_json(const Problem& p, ContractSystem s);
nlohmann::json agent_json(const Problem& p, int agent);

nlohmann::json audit_json(const Problem& p, int agent, const AxiomReport& r);
nlohmann::json decomposition_json(const Problem& p, int agent, int max_q,
                                  const std::optional<LinearOrders>& orders);
nlohmann::json stability_json(const Problem& p, ContractSystem s,
                              const StabilityReport& r);
nlohmann::json systems_json(const Problem& p,
                            const std::vector<ContractSystem>& systems);
nlohmann::json trace_json(const Problem& p, const std::vector<int>& order,
                          const WorkerReturnTrace& trace);
nlohmann::json equivalence_json(const Problem& p,
                                const EquivalenceReport& report);

}  // namespace plott

#endif  // PLOTT_REPORTS_HPP_

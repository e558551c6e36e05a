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

#ifndef PLOTT_DECOMPOSE_HPP_
#define PLOTT_DECOMPOSE_HPP_

#include <optional>
#include <vector>

#include "plott/choice.hpp"
#include "plott/limits.hpp"

namespace plott {

// Linear orders, best element first, over the CF's domain.
using LinearOrders = std::vector<std::vector<int>>;

// Looks for linear orders L1..Lq (q <= max_q) with L1 * ... * Lq equal to cf
// on every menu. Linear, Quota and all-linear Sequential representations are
// answered from the representation itself; anything else goes through an
// exhaustive search over order tuples in lexicographic order, pruned by the
// requirement that each stage's maximum lies in the required choice.
//
// Throws kPrecondition if cf is not Plott, kLimit if a search is needed over
// more than Limits::decompose_domain elements or exceeds
// Limits::decompose_budget.
std::optional<LinearOrders> find_sequential_decomposition(
    const ChoiceFunction& cf, int max_q, const Limits& limits = {});

// L1 * ... * Lq as a Sequential CF.
ChoiceFunction sequential_from_orders(const LinearOrders& orders);

}  // namespace plott

#endif  // PLOTT_DECOMPOSE_HPP_

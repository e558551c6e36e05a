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

#include "plott/decompose.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "plott/axioms.hpp"
#include "plott/errors.hpp"

namespace plott {

namespace {

constexpr int kUndefined = -1;

class OrderSearch {
 public:
  OrderSearch(int n, int stages, std::int64_t budget)
      : n_(n), full_((1 << n) - 1), stages_(stages), budget_(budget),
        orders_(stages) {}

  // required[A] is the choice the remaining stages must make from local
  // menu A, or kUndefined when A is unconstrained.
  bool solve(int level, const std::vector<int>& required) {
    std::vector<int> order;
    return extend(level, required, order, 0);
  }

  const std::vector<std::vector<int>>& orders() const { return orders_; }

 private:
  bool extend(int level, const std::vector<int>& required,
              std::vector<int>& order, int placed) {
    if (++nodes_ > budget_) {
      fail(ErrorCode::kLimit, "decomposition search exceeded " +
                                  std::to_string(budget_) + " nodes");
    }
    if (placed == full_) {
      orders_[level] = order;
      if (level + 1 == stages_) return true;
      std::vector<int> residual;
      if (!residual_of(required, order, residual)) return false;
      return solve(level + 1, residual);
    }
    for (int x = 0; x < n_; ++x) {
      if ((placed >> x) & 1) continue;
      if (!admissible(required, placed, x)) continue;
      order.push_back(x);
      if (extend(level, required, order, placed | (1 << x))) return true;
      order.pop_back();
    }
    return false;
  }

  // x becomes the maximum of every menu that contains x and nothing placed
  // before it; it must then belong to the required choice there.
  bool admissible(const std::vector<int>& required, int placed, int x) const {
    const int free = full_ & ~placed & ~(1 << x);
    int s = 0;
    do {
      const int a = s | (1 << x);
      if (required[a] != kUndefined && !((required[a] >> x) & 1)) return false;
      s = (s - free) & free;
    } while (s != 0);
    return true;
  }

  // After the stage picks max(A), the rest must pick required[A] - max(A)
  // from A - max(A).
  bool residual_of(const std::vector<int>& required,
                   const std::vector<int>& order,
                   std::vector<int>& residual) const {
    residual.assign(required.size(), kUndefined);
    residual[0] = 0;
    for (int a = 1; a <= full_; ++a) {
      if (required[a] == kUndefined) continue;
      int top = 0;
      for (int x : order) {
        if ((a >> x) & 1) {
          top = 1 << x;
          break;
        }
      }
      const int rest = a & ~top;
      const int want = required[a] & ~top;
      if (residual[rest] != kUndefined && residual[rest] != want) {
        return false;
      }
      residual[rest] = want;
    }
    return true;
  }

  int n_;
  int full_;
  int stages_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<int>> orders_;
};

std::optional<LinearOrders> from_representation(const ChoiceFunction& cf,
                                                int max_q) {
  LinearOrders orders;
  switch (cf.kind()) {
    case CfKind::kLinear:
      orders.push_back(cf.linear().order);
      break;
    case CfKind::kQuota: {
      const auto& rep = cf.quota();
      const int q = std::min<int>(rep.q, static_cast<int>(rep.order.size()));
      orders.assign(std::max(q, 1), rep.order);
      break;
    }
    case CfKind::kSequential:
      for (const auto& stage : cf.sequential().stages) {
        if (stage.kind() != CfKind::kLinear) return std::nullopt;
        orders.push_back(stage.linear().order);
      }
      break;
    default:
      return std::nullopt;
  }
  if (static_cast<int>(orders.size()) > max_q) return std::nullopt;
  return orders;
}

}  // namespace

ChoiceFunction sequential_from_orders(const LinearOrders& orders) {
  std::vector<ChoiceFunction> stages;
  stages.reserve(orders.size());
  for (const auto& order : orders) stages.push_back(make_linear(order));
  if (stages.size() == 1) return stages.front();
  return make_sequential(std::move(stages));
}

std::optional<LinearOrders> find_sequential_decomposition(
    const ChoiceFunction& cf, int max_q, const Limits& limits) {
  const Menu domain = cf.domain();
  const int n = domain.size();
  const AxiomReport audit = audit_axioms(cf, limits);
  if (!audit.plott) {
    fail(ErrorCode::kPrecondition,
         "sequential decomposition requires a Plott choice function");
  }
  if (max_q < 1) return std::nullopt;
  if (n == 0) return LinearOrders{{}};

  if (auto direct = from_representation(cf, max_q)) {
    if (same_choices(sequential_from_orders(*direct), cf, limits)) {
      return direct;
    }
  }

  // L1 * ... * Lq picks exactly min(q, |A|) elements, so cf must be
  // q-quotable for the q that the search then fixes.
  if (!audit.quota || *audit.quota > max_q) return std::nullopt;
  const int q = *audit.quota;
  if (n > limits.decompose_domain) {
    fail(ErrorCode::kLimit, "decomposition search over " + std::to_string(n) +
                                " elements exceeds limit " +
                                std::to_string(limits.decompose_domain));
  }

  const std::vector<int> elements = domain.elements();
  const ChoiceFunction table = to_table(cf, limits);
  std::vector<int> required(std::size_t{1} << n);
  for (std::size_t a = 0; a < required.size(); ++a) {
    required[a] = static_cast<int>(
        compress(table.table().entries[a], domain));
  }

  OrderSearch search(n, q, limits.decompose_budget);
  if (!search.solve(0, required)) return std::nullopt;

  LinearOrders orders;
  for (const auto& local : search.orders()) {
    std::vector<int> order;
    for (int x : local) order.push_back(elements[x]);
    orders.push_back(std::move(order));
  }
  return orders;
}

}  // namespace plott

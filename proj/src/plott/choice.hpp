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

#ifndef PLOTT_CHOICE_HPP_
#define PLOTT_CHOICE_HPP_

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plott/limits.hpp"
#include "plott/menu.hpp"

namespace plott {

// Display names for the elements of a ground set, indexed 0..size-1.
struct GroundSet {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  Menu all() const { return Menu::first(size()); }
  std::optional<int> find(std::string_view label) const;
};

enum class CfKind {
  kLinear,
  kQuota,
  kWeakOrder,
  kSequential,
  kUnion,
  kIntegral,
  kTable,
};

std::string_view cf_kind_name(CfKind kind);

struct CfNode;
struct LinearRep;
struct QuotaRep;
struct WeakOrderRep;
struct SequentialRep;
struct UnionRep;
struct IntegralRep;
struct TableRep;

// An immutable choice function C with C(A) ⊆ A for every menu A inside its
// domain. Copies share the underlying representation.
class ChoiceFunction {
 public:
  // The empty linear order over the empty domain.
  ChoiceFunction();
  ChoiceFunction(Menu domain, std::shared_ptr<const CfNode> node);

  CfKind kind() const;
  Menu domain() const { return domain_; }

  // C(menu). The caller guarantees menu ⊆ domain(); use evaluate_choice for
  // the checked form.
  Menu choose(Menu menu) const;

  // Representation accessors; each throws kStructure on a kind mismatch.
  const LinearRep& linear() const;
  const QuotaRep& quota() const;
  const WeakOrderRep& weak_order() const;
  const SequentialRep& sequential() const;
  const UnionRep& union_of() const;
  const IntegralRep& integral() const;
  const TableRep& table() const;

 private:
  Menu domain_;
  std::shared_ptr<const CfNode> node_;
};

struct LinearRep {
  std::vector<int> order;  // best first
};

struct QuotaRep {
  std::vector<int> order;  // best first
  int q = 1;
};

struct WeakOrderRep {
  std::vector<Menu> classes;  // best class first
};

struct SequentialRep {
  std::vector<ChoiceFunction> stages;
};

struct UnionRep {
  std::vector<ChoiceFunction> parts;
};

struct IntegralFiber {
  int base = 0;  // base element this fiber lies over
  Menu members;
  ChoiceFunction cf;
};

// D(B) = ∪_{x ∈ C(π(B))} C_x(B ∩ π⁻¹(x)), where C is `base` on its own
// ground set and π is `fiber_of`.
struct IntegralRep {
  ChoiceFunction base;
  GroundSet base_ground;                // labels of the base elements
  std::array<int, Menu::kMaxElements> fiber_of{};  // -1 outside the domain
  std::vector<IntegralFiber> fibers;    // sorted by base element
  std::array<int, Menu::kMaxElements> slot_of_base{};  // index into fibers

  Menu project(Menu menu) const;
};

// entries[compress(A, domain)] = C(A) for every A ⊆ domain.
struct TableRep {
  std::vector<Menu> entries;
};

// --- construction -----------------------------------------------------------

ChoiceFunction make_linear(std::vector<int> order);
ChoiceFunction make_quota(std::vector<int> order, int q);
ChoiceFunction make_weak_order(const std::vector<std::vector<int>>& classes);
// Left-associated F1 * F2 * ... * Fk.
ChoiceFunction make_sequential(std::vector<ChoiceFunction> stages);
ChoiceFunction make_table(Menu domain, std::vector<Menu> entries,
                          const Limits& limits = {});

// (F*G)(A) = F(A) ∪ G(A - F(A)).
ChoiceFunction seq_compose(const ChoiceFunction& f, const ChoiceFunction& g);
ChoiceFunction union_compose(std::vector<ChoiceFunction> parts);
// `fiber_of` maps every element of the new domain to a base element;
// `fiber_cfs` holds one CF per occupied base element, over its fiber.
ChoiceFunction integrate(ChoiceFunction base,
                         const std::map<int, int>& fiber_of,
                         std::map<int, ChoiceFunction> fiber_cfs,
                         GroundSet base_ground = {});

// --- evaluation and extensional forms ---------------------------------------

Menu evaluate_choice(const ChoiceFunction& cf, Menu menu);
ChoiceFunction to_table(const ChoiceFunction& cf, const Limits& limits = {});
// Same domain and same choice on every menu.
bool same_choices(const ChoiceFunction& a, const ChoiceFunction& b,
                  const Limits& limits = {});
// Renames element e to new_index[e]. Integral bases keep their own indices.
ChoiceFunction relabel(const ChoiceFunction& cf,
                       const std::vector<int>& new_index);
// Table form of cf on the submenus of `sub` (which must lie in the domain).
ChoiceFunction restrict_to(const ChoiceFunction& cf, Menu sub,
                           const Limits& limits = {});

// --- revealed preference ----------------------------------------------------

// Blair relation: a ⪯ b iff C(a ∪ b) ⊆ b.
bool blair_leq(const ChoiceFunction& cf, Menu a, Menu b);
// x ∈ C(a ∪ {x}).
bool is_desirable(const ChoiceFunction& cf, Menu a, int x);
// Join of two acceptable menus in the Blair lattice: C(a ∪ b).
Menu acceptable_join(const ChoiceFunction& cf, Menu a, Menu b);

}  // namespace plott

#endif  // PLOTT_CHOICE_HPP_

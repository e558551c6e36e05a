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

#include "plott/choice.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>

#include "plott/errors.hpp"

namespace plott {

struct CfNode {
  std::variant<LinearRep, QuotaRep, WeakOrderRep, SequentialRep, UnionRep,
               IntegralRep, TableRep>
      rep;
};

namespace {

std::string describe(Menu m) {
  std::string out = "{";
  bool first = true;
  for (int e : m) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

ChoiceFunction wrap(Menu domain, auto rep) {
  return ChoiceFunction(domain,
                        std::make_shared<const CfNode>(CfNode{std::move(rep)}));
}

Menu order_domain(const std::vector<int>& order) {
  Menu domain;
  for (int e : order) {
    if (e < 0 || e >= Menu::kMaxElements) {
      fail(ErrorCode::kStructure,
           "order element " + std::to_string(e) + " out of range");
    }
    if (domain.contains(e)) {
      fail(ErrorCode::kStructure,
           "order repeats element " + std::to_string(e));
    }
    domain = domain.with(e);
  }
  return domain;
}

Menu first_in_order(const std::vector<int>& order, Menu menu, int count) {
  Menu out;
  if (count <= 0) return out;
  for (int e : order) {
    if (menu.contains(e)) {
      out = out.with(e);
      if (--count == 0) break;
    }
  }
  return out;
}

void require_same_domains(const std::vector<ChoiceFunction>& cfs,
                          const char* what) {
  if (cfs.empty()) {
    fail(ErrorCode::kStructure, std::string(what) + " needs at least one CF");
  }
  for (const auto& cf : cfs) {
    if (cf.domain() != cfs.front().domain()) {
      fail(ErrorCode::kDomain,
           std::string(what) + " over mismatched domains " +
               describe(cfs.front().domain()) + " and " +
               describe(cf.domain()));
    }
  }
}

}  // namespace

std::optional<int> GroundSet::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

std::string_view cf_kind_name(CfKind kind) {
  switch (kind) {
    case CfKind::kLinear: return "linear";
    case CfKind::kQuota: return "quota";
    case CfKind::kWeakOrder: return "weak";
    case CfKind::kSequential: return "sequential";
    case CfKind::kUnion: return "union";
    case CfKind::kIntegral: return "integral";
    case CfKind::kTable: return "table";
  }
  return "unknown";
}

Menu IntegralRep::project(Menu menu) const {
  Menu out;
  for (int e : menu) out = out.with(fiber_of[e]);
  return out;
}

ChoiceFunction::ChoiceFunction() : ChoiceFunction(make_linear({})) {}

ChoiceFunction::ChoiceFunction(Menu domain, std::shared_ptr<const CfNode> node)
    : domain_(domain), node_(std::move(node)) {}

CfKind ChoiceFunction::kind() const {
  return static_cast<CfKind>(node_->rep.index());
}

namespace {

template <typename Rep>
const Rep& get_rep(const CfNode& node, CfKind expected) {
  if (const Rep* rep = std::get_if<Rep>(&node.rep)) return *rep;
  fail(ErrorCode::kStructure,
       "choice function is not of kind " + std::string(cf_kind_name(expected)));
}

}  // namespace

const LinearRep& ChoiceFunction::linear() const {
  return get_rep<LinearRep>(*node_, CfKind::kLinear);
}
const QuotaRep& ChoiceFunction::quota() const {
  return get_rep<QuotaRep>(*node_, CfKind::kQuota);
}
const WeakOrderRep& ChoiceFunction::weak_order() const {
  return get_rep<WeakOrderRep>(*node_, CfKind::kWeakOrder);
}
const SequentialRep& ChoiceFunction::sequential() const {
  return get_rep<SequentialRep>(*node_, CfKind::kSequential);
}
const UnionRep& ChoiceFunction::union_of() const {
  return get_rep<UnionRep>(*node_, CfKind::kUnion);
}
const IntegralRep& ChoiceFunction::integral() const {
  return get_rep<IntegralRep>(*node_, CfKind::kIntegral);
}
const TableRep& ChoiceFunction::table() const {
  return get_rep<TableRep>(*node_, CfKind::kTable);
}

Menu ChoiceFunction::choose(Menu menu) const {
  struct Visitor {
    Menu menu;
    Menu domain;

    Menu operator()(const LinearRep& r) const {
      return first_in_order(r.order, menu, 1);
    }
    Menu operator()(const QuotaRep& r) const {
      return first_in_order(r.order, menu, r.q);
    }
    Menu operator()(const WeakOrderRep& r) const {
      for (Menu cls : r.classes) {
        if (cls.intersects(menu)) return cls & menu;
      }
      return {};
    }
    Menu operator()(const SequentialRep& r) const {
      Menu chosen;
      Menu rest = menu;
      for (const auto& stage : r.stages) {
        Menu pick = stage.choose(rest);
        chosen |= pick;
        rest -= pick;
      }
      return chosen;
    }
    Menu operator()(const UnionRep& r) const {
      Menu chosen;
      for (const auto& part : r.parts) chosen |= part.choose(menu);
      return chosen;
    }
    Menu operator()(const IntegralRep& r) const {
      Menu chosen;
      for (int x : r.base.choose(r.project(menu))) {
        const IntegralFiber& fiber = r.fibers[r.slot_of_base[x]];
        chosen |= fiber.cf.choose(menu & fiber.members);
      }
      return chosen;
    }
    Menu operator()(const TableRep& r) const {
      return r.entries[compress(menu, domain)];
    }
  };
  return std::visit(Visitor{menu, domain_}, node_->rep);
}

ChoiceFunction make_linear(std::vector<int> order) {
  Menu domain = order_domain(order);
  return wrap(domain, LinearRep{std::move(order)});
}

ChoiceFunction make_quota(std::vector<int> order, int q) {
  if (q < 1) {
    fail(ErrorCode::kStructure, "quota must be positive, got " +
                                    std::to_string(q));
  }
  Menu domain = order_domain(order);
  return wrap(domain, QuotaRep{std::move(order), q});
}

ChoiceFunction make_weak_order(const std::vector<std::vector<int>>& classes) {
  Menu domain;
  WeakOrderRep rep;
  for (const auto& cls : classes) {
    if (cls.empty()) fail(ErrorCode::kStructure, "empty indifference class");
    Menu m = order_domain(cls);
    if (m.intersects(domain)) {
      fail(ErrorCode::kStructure, "indifference classes overlap on " +
                                      describe(m & domain));
    }
    domain |= m;
    rep.classes.push_back(m);
  }
  return wrap(domain, std::move(rep));
}

ChoiceFunction make_sequential(std::vector<ChoiceFunction> stages) {
  require_same_domains(stages, "sequential composition");
  Menu domain = stages.front().domain();
  return wrap(domain, SequentialRep{std::move(stages)});
}

ChoiceFunction make_table(Menu domain, std::vector<Menu> entries,
                          const Limits& limits) {
  if (domain.size() > limits.table) {
    fail(ErrorCode::kLimit, "table over " + std::to_string(domain.size()) +
                                " elements exceeds limit " +
                                std::to_string(limits.table));
  }
  const std::uint64_t count = std::uint64_t{1} << domain.size();
  if (entries.size() != count) {
    fail(ErrorCode::kStructure,
         "table has " + std::to_string(entries.size()) + " entries, expected " +
             std::to_string(count));
  }
  std::uint64_t index = 0;
  for_each_submenu(domain, [&](Menu a) {
    if (!entries[index].subset_of(a)) {
      fail(ErrorCode::kStructure, "table entry for " + describe(a) +
                                      " chooses " + describe(entries[index]) +
                                      " outside the menu");
    }
    ++index;
  });
  return wrap(domain, TableRep{std::move(entries)});
}

ChoiceFunction seq_compose(const ChoiceFunction& f, const ChoiceFunction& g) {
  if (f.domain() != g.domain()) {
    fail(ErrorCode::kDomain, "seq_compose over mismatched domains " +
                                 describe(f.domain()) + " and " +
                                 describe(g.domain()));
  }
  std::vector<ChoiceFunction> stages;
  if (f.kind() == CfKind::kSequential) {
    stages = f.sequential().stages;
  } else {
    stages.push_back(f);
  }
  stages.push_back(g);
  return make_sequential(std::move(stages));
}

ChoiceFunction union_compose(std::vector<ChoiceFunction> parts) {
  require_same_domains(parts, "union");
  Menu domain = parts.front().domain();
  return wrap(domain, UnionRep{std::move(parts)});
}

ChoiceFunction integrate(ChoiceFunction base, const std::map<int, int>& fiber_of,
                         std::map<int, ChoiceFunction> fiber_cfs,
                         GroundSet base_ground) {
  IntegralRep rep;
  rep.fiber_of.fill(-1);
  rep.slot_of_base.fill(-1);
  Menu domain;
  std::map<int, Menu> members;
  for (auto [e, x] : fiber_of) {
    if (e < 0 || e >= Menu::kMaxElements || x < 0 ||
        x >= Menu::kMaxElements) {
      fail(ErrorCode::kStructure, "fiber map entry out of range");
    }
    if (!base.domain().contains(x)) {
      fail(ErrorCode::kStructure, "element " + std::to_string(e) +
                                      " lies over " + std::to_string(x) +
                                      ", outside the base domain");
    }
    rep.fiber_of[e] = x;
    domain = domain.with(e);
    members[x] = members[x].with(e);
  }
  for (const auto& [x, fiber] : members) {
    auto it = fiber_cfs.find(x);
    if (it == fiber_cfs.end()) {
      fail(ErrorCode::kStructure,
           "no fiber choice function over base element " + std::to_string(x));
    }
    if (it->second.domain() != fiber) {
      fail(ErrorCode::kStructure,
           "fiber choice function over " + std::to_string(x) +
               " has domain " + describe(it->second.domain()) +
               ", fiber is " + describe(fiber));
    }
    rep.slot_of_base[x] = static_cast<int>(rep.fibers.size());
    rep.fibers.push_back({x, fiber, std::move(it->second)});
    fiber_cfs.erase(it);
  }
  if (!fiber_cfs.empty()) {
    fail(ErrorCode::kStructure,
         "fiber choice function over " +
             std::to_string(fiber_cfs.begin()->first) + " has an empty fiber");
  }
  rep.base = std::move(base);
  rep.base_ground = std::move(base_ground);
  return wrap(domain, std::move(rep));
}

Menu evaluate_choice(const ChoiceFunction& cf, Menu menu) {
  if (!menu.subset_of(cf.domain())) {
    fail(ErrorCode::kDomain, "menu " + describe(menu) +
                                 " is not inside the domain " +
                                 describe(cf.domain()));
  }
  return cf.choose(menu);
}

ChoiceFunction to_table(const ChoiceFunction& cf, const Limits& limits) {
  if (cf.kind() == CfKind::kTable) return cf;
  const Menu domain = cf.domain();
  if (domain.size() > limits.table) {
    fail(ErrorCode::kLimit, "domain of " + std::to_string(domain.size()) +
                                " elements exceeds table limit " +
                                std::to_string(limits.table));
  }
  std::vector<Menu> entries;
  entries.reserve(std::size_t{1} << domain.size());
  for_each_submenu(domain, [&](Menu a) { entries.push_back(cf.choose(a)); });
  return wrap(domain, TableRep{std::move(entries)});
}

bool same_choices(const ChoiceFunction& a, const ChoiceFunction& b,
                  const Limits& limits) {
  if (a.domain() != b.domain()) return false;
  return to_table(a, limits).table().entries ==
         to_table(b, limits).table().entries;
}

namespace {

int relabel_element(int e, const std::vector<int>& new_index) {
  if (e >= static_cast<int>(new_index.size()) || new_index[e] < 0 ||
      new_index[e] >= Menu::kMaxElements) {
    fail(ErrorCode::kDomain,
         "relabel has no image for element " + std::to_string(e));
  }
  return new_index[e];
}

Menu relabel_menu(Menu m, const std::vector<int>& new_index) {
  Menu out;
  for (int e : m) out = out.with(relabel_element(e, new_index));
  return out;
}

std::vector<int> relabel_order(const std::vector<int>& order,
                               const std::vector<int>& new_index) {
  std::vector<int> out;
  out.reserve(order.size());
  for (int e : order) out.push_back(relabel_element(e, new_index));
  return out;
}

}  // namespace

ChoiceFunction relabel(const ChoiceFunction& cf,
                       const std::vector<int>& new_index) {
  switch (cf.kind()) {
    case CfKind::kLinear:
      return make_linear(relabel_order(cf.linear().order, new_index));
    case CfKind::kQuota:
      return make_quota(relabel_order(cf.quota().order, new_index),
                        cf.quota().q);
    case CfKind::kWeakOrder: {
      std::vector<std::vector<int>> classes;
      for (Menu cls : cf.weak_order().classes) {
        classes.push_back(relabel_menu(cls, new_index).elements());
      }
      return make_weak_order(classes);
    }
    case CfKind::kSequential: {
      std::vector<ChoiceFunction> stages;
      for (const auto& s : cf.sequential().stages) {
        stages.push_back(relabel(s, new_index));
      }
      return make_sequential(std::move(stages));
    }
    case CfKind::kUnion: {
      std::vector<ChoiceFunction> parts;
      for (const auto& p : cf.union_of().parts) {
        parts.push_back(relabel(p, new_index));
      }
      return union_compose(std::move(parts));
    }
    case CfKind::kIntegral: {
      const IntegralRep& rep = cf.integral();
      std::map<int, int> fiber_of;
      for (int e : cf.domain()) {
        fiber_of[relabel_element(e, new_index)] = rep.fiber_of[e];
      }
      std::map<int, ChoiceFunction> fiber_cfs;
      for (const auto& fiber : rep.fibers) {
        fiber_cfs.emplace(fiber.base, relabel(fiber.cf, new_index));
      }
      return integrate(rep.base, fiber_of, std::move(fiber_cfs),
                       rep.base_ground);
    }
    case CfKind::kTable: {
      const Menu old_domain = cf.domain();
      const Menu domain = relabel_menu(old_domain, new_index);
      if (domain.size() != old_domain.size()) {
        fail(ErrorCode::kDomain, "relabel is not injective on the domain");
      }
      const auto& old_entries = cf.table().entries;
      std::vector<Menu> entries(old_entries.size());
      std::uint64_t index = 0;
      for_each_submenu(old_domain, [&](Menu a) {
        entries[compress(relabel_menu(a, new_index), domain)] =
            relabel_menu(old_entries[index++], new_index);
      });
      return wrap(domain, TableRep{std::move(entries)});
    }
  }
  fail(ErrorCode::kInternal, "unhandled choice function kind");
}

ChoiceFunction restrict_to(const ChoiceFunction& cf, Menu sub,
                           const Limits& limits) {
  if (!sub.subset_of(cf.domain())) {
    fail(ErrorCode::kDomain, "restriction " + describe(sub) +
                                 " is not inside the domain " +
                                 describe(cf.domain()));
  }
  if (sub.size() > limits.table) {
    fail(ErrorCode::kLimit, "restriction of " + std::to_string(sub.size()) +
                                " elements exceeds table limit");
  }
  std::vector<Menu> entries;
  entries.reserve(std::size_t{1} << sub.size());
  for_each_submenu(sub, [&](Menu a) { entries.push_back(cf.choose(a)); });
  return wrap(sub, TableRep{std::move(entries)});
}

bool blair_leq(const ChoiceFunction& cf, Menu a, Menu b) {
  return evaluate_choice(cf, a | b).subset_of(b);
}

bool is_desirable(const ChoiceFunction& cf, Menu a, int x) {
  if (x < 0 || x >= Menu::kMaxElements) {
    fail(ErrorCode::kDomain, "element " + std::to_string(x) + " out of range");
  }
  return evaluate_choice(cf, a.with(x)).contains(x);
}

Menu acceptable_join(const ChoiceFunction& cf, Menu a, Menu b) {
  if (evaluate_choice(cf, a) != a) {
    fail(ErrorCode::kPrecondition, "menu " + describe(a) + " is not acceptable");
  }
  if (evaluate_choice(cf, b) != b) {
    fail(ErrorCode::kPrecondition, "menu " + describe(b) + " is not acceptable");
  }
  return cf.choose(a | b);
}

}  // namespace plott

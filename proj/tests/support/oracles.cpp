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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace plott::test {

Set to_set(Menu m) {
  Set out;
  for (int e = 0; e < Menu::kMaxElements; ++e) {
    if (m.contains(e)) out.insert(e);
  }
  return out;
}

Menu to_menu(const Set& s) {
  Menu out;
  for (int e : s) out = out.with(e);
  return out;
}

std::vector<Set> subsets(const Set& s) {
  const std::vector<int> items(s.begin(), s.end());
  std::vector<Set> out;
  for (unsigned long mask = 0; mask < (1ul << items.size()); ++mask) {
    Set sub;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) sub.insert(items[i]);
    }
    out.push_back(sub);
  }
  return out;
}

Set range_set(int n) {
  Set out;
  for (int i = 0; i < n; ++i) out.insert(i);
  return out;
}

Set linear_oracle(const std::vector<int>& order, const Set& a) {
  return quota_oracle(order, 1, a);
}

Set quota_oracle(const std::vector<int>& order, int q, const Set& a) {
  Set out;
  for (int e : order) {
    if (static_cast<int>(out.size()) == q) break;
    if (a.count(e)) out.insert(e);
  }
  return out;
}

Set weak_oracle(const std::vector<Set>& classes, const Set& a) {
  for (const Set& cls : classes) {
    Set hit;
    for (int e : cls) {
      if (a.count(e)) hit.insert(e);
    }
    if (!hit.empty()) return hit;
  }
  return {};
}

Set sequential_oracle(const std::vector<OracleFn>& stages, const Set& a) {
  Set left = a;
  Set out;
  for (const auto& stage : stages) {
    for (int e : stage(left)) {
      out.insert(e);
      left.erase(e);
    }
  }
  return out;
}

Set union_oracle(const std::vector<OracleFn>& parts, const Set& a) {
  Set out;
  for (const auto& part : parts) {
    for (int e : part(a)) out.insert(e);
  }
  return out;
}

Tabulated tabulate(const ChoiceFunction& cf) {
  Tabulated t;
  t.domain = to_set(cf.domain());
  for (const Set& a : subsets(t.domain)) {
    t.choice[a] = to_set(cf.choose(to_menu(a)));
  }
  return t;
}

Tabulated tabulate(const OracleFn& fn, const Set& domain) {
  Tabulated t;
  t.domain = domain;
  for (const Set& a : subsets(domain)) t.choice[a] = fn(a);
  return t;
}

namespace {

bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Set intersect(const Set& a, const Set& b) {
  Set out;
  for (int e : a) {
    if (b.count(e)) out.insert(e);
  }
  return out;
}

}  // namespace

bool consistent_oracle(const Tabulated& t) {
  for (const auto& [a, ca] : t.choice) {
    for (const Set& b : subsets(a)) {
      if (includes(b, ca) && t(b) != ca) return false;
    }
  }
  return true;
}

bool substitutable_oracle(const Tabulated& t) {
  for (const auto& [a, ca] : t.choice) {
    for (const Set& b : subsets(a)) {
      if (!includes(t(b), intersect(ca, b))) return false;
    }
  }
  return true;
}

bool path_independent_oracle(const Tabulated& t) {
  for (const auto& [a, ca] : t.choice) {
    for (const auto& [b, cb] : t.choice) {
      if (t(unite(a, b)) != t(unite(ca, b))) return false;
    }
  }
  return true;
}

bool cardinally_monotone_oracle(const Tabulated& t) {
  for (const auto& [a, ca] : t.choice) {
    for (const Set& b : subsets(a)) {
      if (t(b).size() > ca.size()) return false;
    }
  }
  return true;
}

std::optional<int> quota_of_oracle(const Tabulated& t) {
  for (int q = 1; q <= static_cast<int>(t.domain.size()); ++q) {
    bool ok = true;
    for (const auto& [a, ca] : t.choice) {
      if (static_cast<int>(ca.size()) !=
          std::min<int>(q, static_cast<int>(a.size()))) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

bool blair_leq_oracle(const Tabulated& t, const Set& a, const Set& b) {
  return includes(b, t(unite(a, b)));
}

namespace {

// Menus sorted by size so that mismatches on small menus end a branch early.
std::vector<Set> menus_by_size(const Set& domain) {
  std::vector<Set> out = subsets(domain);
  std::stable_sort(out.begin(), out.end(),
                   [](const Set& x, const Set& y) { return x.size() < y.size(); });
  return out;
}

bool extend(const Tabulated& t, const std::vector<Set>& menus,
            const std::vector<std::vector<int>>& perms,
            std::vector<std::vector<int>>& chosen, int q) {
  const int depth = static_cast<int>(chosen.size());
  for (const auto& order : perms) {
    chosen.push_back(order);
    bool ok = true;
    for (const Set& a : menus) {
      // After depth+1 stages the choice so far must lie inside C(A).
      Set left = a;
      Set got;
      for (const auto& stage : chosen) {
        for (int e : linear_oracle(stage, left)) {
          got.insert(e);
          left.erase(e);
        }
      }
      const Set& want = t(a);
      if (depth + 1 == q ? got != want : !includes(want, got)) {
        ok = false;
        break;
      }
    }
    if (ok && (depth + 1 == q || extend(t, menus, perms, chosen, q))) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool sequential_exists_oracle(const Tabulated& t, int q) {
  std::vector<int> items(t.domain.begin(), t.domain.end());
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  std::vector<std::vector<int>> chosen;
  return extend(t, menus_by_size(t.domain), perms, chosen, q);
}

bool stable_oracle(const Problem& p, const Set& s) {
  const Frame& f = p.frame;
  std::vector<Set> held(f.agent_count());
  for (int e : s) {
    for (int a : f.participants[e]) held[a].insert(e);
  }
  for (int a = 0; a < f.agent_count(); ++a) {
    if (to_set(p.cfs[a].choose(to_menu(held[a]))) != held[a]) return false;
  }
  for (int e = 0; e < f.contract_count(); ++e) {
    if (s.count(e)) continue;
    bool blocks = true;
    for (int a : f.participants[e]) {
      Set offer = held[a];
      offer.insert(e);
      if (!to_set(p.cfs[a].choose(to_menu(offer))).count(e)) {
        blocks = false;
        break;
      }
    }
    if (blocks) return false;
  }
  return true;
}

std::vector<Set> enumerate_oracle(const Problem& p) {
  std::vector<Set> out;
  for (const Set& s : subsets(range_set(p.frame.contract_count()))) {
    if (stable_oracle(p, s)) out.push_back(s);
  }
  return out;
}

std::vector<int> random_order(Rng& rng, Menu domain) {
  std::vector<int> order = domain.elements();
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

ChoiceFunction random_linear(Rng& rng, Menu domain) {
  return make_linear(random_order(rng, domain));
}

ChoiceFunction random_quota(Rng& rng, Menu domain, int max_q) {
  std::uniform_int_distribution<int> q(1, max_q);
  return make_quota(random_order(rng, domain), q(rng));
}

ChoiceFunction random_sequential(Rng& rng, Menu domain, int stages) {
  std::vector<ChoiceFunction> parts;
  for (int i = 0; i < stages; ++i) parts.push_back(random_linear(rng, domain));
  return make_sequential(std::move(parts));
}

ChoiceFunction random_weak(Rng& rng, Menu domain) {
  const std::vector<int> order = random_order(rng, domain);
  std::vector<std::vector<int>> classes;
  std::bernoulli_distribution cut(0.5);
  for (int e : order) {
    if (classes.empty() || cut(rng)) classes.emplace_back();
    classes.back().push_back(e);
  }
  return make_weak_order(classes);
}

ChoiceFunction random_union(Rng& rng, Menu domain) {
  std::uniform_int_distribution<int> k(1, 3);
  std::vector<ChoiceFunction> parts;
  for (int i = k(rng); i > 0; --i) parts.push_back(random_linear(rng, domain));
  return union_compose(std::move(parts));
}

ChoiceFunction random_plott(Rng& rng, Menu domain) {
  std::uniform_int_distribution<int> pick(0, 5);
  switch (pick(rng)) {
    case 0:
      return random_linear(rng, domain);
    case 1:
      return random_quota(rng, domain);
    case 2:
      return random_sequential(rng, domain, 2);
    case 3:
      return random_weak(rng, domain);
    case 4:
      return random_union(rng, domain);
    default:
      return seq_compose(random_union(rng, domain), random_weak(rng, domain));
  }
}

ChoiceFunction random_monotone(Rng& rng, Menu domain) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0:
      return random_linear(rng, domain);
    case 1:
      return random_quota(rng, domain);
    default:
      return random_sequential(rng, domain, 2);
  }
}

ChoiceFunction random_table(Rng& rng, Menu domain) {
  std::vector<Menu> entries;
  for_each_submenu(domain, [&](Menu a) {
    entries.push_back(Menu(a.bits() & rng()));
  });
  return make_table(domain, std::move(entries));
}

Problem random_bipartite(Rng& rng, const InstanceShape& shape) {
  Problem p;
  Frame& f = p.frame;
  for (int i = 1; i <= shape.firms; ++i) {
    f.agents.push_back("f" + std::to_string(i));
    p.sides.push_back(Side::kFirm);
  }
  for (int i = 1; i <= shape.workers; ++i) {
    f.agents.push_back("w" + std::to_string(i));
    p.sides.push_back(Side::kWorker);
  }
  std::uniform_int_distribution<int> firm(0, shape.firms - 1);
  std::uniform_int_distribution<int> worker(shape.firms,
                                            shape.firms + shape.workers - 1);
  std::uniform_int_distribution<int> count(std::min(4, shape.max_contracts),
                                           shape.max_contracts);
  const int n = count(rng);
  for (int e = 0; e < n; ++e) {
    // The first two contracts go to the sequential worker.
    const int w = shape.sequential_worker && e < 2 ? shape.firms : worker(rng);
    f.contracts.push_back("e" + std::to_string(e + 1));
    f.participants.push_back({firm(rng), w});
  }
  std::bernoulli_distribution coin(0.5);
  for (int a = 0; a < f.agent_count(); ++a) {
    const Menu domain = f.incidence(a);
    if (a < shape.firms) {
      p.cfs.push_back(shape.monotone_firms ? random_monotone(rng, domain)
                                           : random_plott(rng, domain));
    } else if (a == shape.firms && shape.sequential_worker) {
      p.cfs.push_back(coin(rng) ? random_sequential(rng, domain, 2)
                                : make_quota(random_order(rng, domain), 2));
    } else {
      p.cfs.push_back(random_linear(rng, domain));
    }
  }
  validate_problem(p);
  return p;
}

}  // namespace plott::test

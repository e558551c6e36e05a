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

#include "plott/axioms.hpp"

#include <bit>
#include <cstdint>

namespace plott {

namespace {

// The CF as a dense table over local masks 0 .. 2^n - 1.
struct LocalTable {
  int n = 0;
  Menu domain;
  std::vector<std::uint32_t> choice;

  std::uint32_t full() const { return (std::uint32_t{1} << n) - 1; }
  Menu global(std::uint32_t local) const { return expand(local, domain); }
};

LocalTable localize(const ChoiceFunction& cf, const Limits& limits) {
  ChoiceFunction table = to_table(cf, limits);
  LocalTable out;
  out.domain = cf.domain();
  out.n = out.domain.size();
  const auto& entries = table.table().entries;
  out.choice.reserve(entries.size());
  for (Menu m : entries) {
    out.choice.push_back(static_cast<std::uint32_t>(compress(m, out.domain)));
  }
  return out;
}

// Iterates sub ⊆ mask in increasing order; stops when fn returns true.
template <typename Fn>
bool any_submask(std::uint32_t mask, Fn&& fn) {
  std::uint32_t s = 0;
  do {
    if (fn(s)) return true;
    s = (s - mask) & mask;
  } while (s != 0);
  return false;
}

bool consistency_one_step(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const std::uint32_t c = t.choice[a];
    for (std::uint32_t rest = a & ~c; rest != 0; rest &= rest - 1) {
      const std::uint32_t b = a & ~(rest & -rest);
      if (t.choice[b] != c) return false;
    }
  }
  return true;
}

std::optional<AxiomWitness> consistency_witness(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const std::uint32_t c = t.choice[a];
    std::optional<AxiomWitness> found;
    any_submask(a & ~c, [&](std::uint32_t extra) {
      const std::uint32_t b = c | extra;
      if (t.choice[b] == c) return false;
      found = AxiomWitness{Axiom::kConsistency, t.global(a), t.global(b)};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool substitution_one_step(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const std::uint32_t c = t.choice[a];
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      const std::uint32_t drop = rest & -rest;
      const std::uint32_t b = a & ~drop;
      if ((c & ~drop & ~t.choice[b]) != 0) return false;
    }
  }
  return true;
}

std::optional<AxiomWitness> substitution_witness(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const std::uint32_t c = t.choice[a];
    std::optional<AxiomWitness> found;
    any_submask(a, [&](std::uint32_t b) {
      if ((c & b & ~t.choice[b]) == 0) return false;
      found = AxiomWitness{Axiom::kSubstitution, t.global(a), t.global(b)};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<AxiomWitness> path_independence_witness(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const std::uint32_t ca = t.choice[a];
    for (std::uint32_t b = 0; b <= t.full(); ++b) {
      if (t.choice[a | b] != t.choice[ca | b]) {
        return AxiomWitness{Axiom::kPathIndependence, t.global(a),
                            t.global(b)};
      }
    }
  }
  return std::nullopt;
}

bool monotone_one_step(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const int size = std::popcount(t.choice[a]);
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      const std::uint32_t b = a & ~(rest & -rest);
      if (std::popcount(t.choice[b]) > size) return false;
    }
  }
  return true;
}

std::optional<AxiomWitness> monotone_witness(const LocalTable& t) {
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const int size = std::popcount(t.choice[a]);
    std::optional<AxiomWitness> found;
    any_submask(t.full() & ~a, [&](std::uint32_t extra) {
      const std::uint32_t b = a | extra;
      if (std::popcount(t.choice[b]) >= size) return false;
      found = AxiomWitness{Axiom::kCardinalMonotonicity, t.global(a),
                           t.global(b)};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<AxiomWitness> nonempty_witness(const LocalTable& t) {
  for (std::uint32_t a = 1; a <= t.full(); ++a) {
    if (t.choice[a] == 0) {
      return AxiomWitness{Axiom::kNonemptyValued, t.global(a), Menu{}};
    }
  }
  return std::nullopt;
}

std::optional<int> find_quota(const LocalTable& t) {
  const int q = std::popcount(t.choice[t.full()]);
  if (q == 0) return std::nullopt;
  for (std::uint32_t a = 0; a <= t.full(); ++a) {
    const int expected = std::min(q, std::popcount(a));
    if (std::popcount(t.choice[a]) != expected) return std::nullopt;
  }
  return q;
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kConsistency: return "consistency";
    case Axiom::kSubstitution: return "substitution";
    case Axiom::kPathIndependence: return "path_independence";
    case Axiom::kCardinalMonotonicity: return "cardinal_monotonicity";
    case Axiom::kNonemptyValued: return "nonempty_valued";
  }
  return "unknown";
}

const AxiomWitness* AxiomReport::witness(Axiom axiom) const {
  for (const auto& w : witnesses) {
    if (w.axiom == axiom) return &w;
  }
  return nullptr;
}

namespace {

AxiomReport audit(const ChoiceFunction& cf, const Limits& limits,
                  bool with_path_independence) {
  const LocalTable t = localize(cf, limits);
  AxiomReport report;
  auto record = [&](bool& flag, std::optional<AxiomWitness> w) {
    flag = !w.has_value();
    if (w) report.witnesses.push_back(*w);
  };

  // The single-step forms are equivalent to the full axioms (chain the
  // removals); the full pair scan only runs to locate the first witness.
  if (!consistency_one_step(t)) {
    record(report.consistent, consistency_witness(t));
  }
  if (!substitution_one_step(t)) {
    record(report.substitutable, substitution_witness(t));
  }
  report.plott = report.consistent && report.substitutable;

  if (with_path_independence && t.n <= limits.pair_audit) {
    bool pi = true;
    record(pi, path_independence_witness(t));
    report.path_independent = pi;
  }
  if (!monotone_one_step(t)) {
    record(report.cardinally_monotone, monotone_witness(t));
  }
  record(report.nonempty_valued, nonempty_witness(t));
  report.quota = find_quota(t);
  return report;
}

}  // namespace

AxiomReport audit_axioms(const ChoiceFunction& cf, const Limits& limits) {
  return audit(cf, limits, true);
}

bool is_plott(const ChoiceFunction& cf, const Limits& limits) {
  return audit(cf, limits, false).plott;
}

bool is_linear_cf(const ChoiceFunction& cf, const Limits& limits) {
  if (cf.domain().empty()) return true;
  if (cf.kind() == CfKind::kLinear) return true;
  AxiomReport r = audit(cf, limits, false);
  return r.plott && r.quota == 1;
}

bool is_cardinally_monotone_plott(const ChoiceFunction& cf,
                                  const Limits& limits) {
  AxiomReport r = audit(cf, limits, false);
  return r.plott && r.cardinally_monotone;
}

}  // namespace plott

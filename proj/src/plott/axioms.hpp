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

#ifndef PLOTT_AXIOMS_HPP_
#define PLOTT_AXIOMS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "plott/choice.hpp"
#include "plott/limits.hpp"
#include "plott/menu.hpp"

namespace plott {

enum class Axiom {
  kConsistency,           // C(A) ⊆ B ⊆ A  ⇒  C(B) = C(A)
  kSubstitution,          // B ⊆ A  ⇒  C(A) ∩ B ⊆ C(B)
  kPathIndependence,      // C(A ∪ B) = C(C(A) ∪ B)
  kCardinalMonotonicity,  // A ⊆ B  ⇒  |C(A)| ≤ |C(B)|
  kNonemptyValued,        // A ≠ ∅  ⇒  C(A) ≠ ∅
};

std::string_view axiom_name(Axiom axiom);

// A violating pair, named as in the axiom. For kNonemptyValued, b = C(a).
struct AxiomWitness {
  Axiom axiom;
  Menu a;
  Menu b;
};

struct AxiomReport {
  bool consistent = true;
  bool substitutable = true;
  // Absent when the domain exceeds Limits::pair_audit.
  std::optional<bool> path_independent;
  bool plott = true;
  bool cardinally_monotone = true;
  bool nonempty_valued = true;
  // The q with |C(A)| = min(q, |A|) for all A, if any (smallest such q).
  std::optional<int> quota;
  // One entry per failed axiom: the first violating pair in (a, b) mask order.
  std::vector<AxiomWitness> witnesses;

  const AxiomWitness* witness(Axiom axiom) const;
};

// Exhaustive audit over every menu (and menu pair) of the domain.
AxiomReport audit_axioms(const ChoiceFunction& cf, const Limits& limits = {});

// Convenience predicates built on audit_axioms.
bool is_plott(const ChoiceFunction& cf, const Limits& limits = {});
// Plott with quota 1, or the empty domain.
bool is_linear_cf(const ChoiceFunction& cf, const Limits& limits = {});
bool is_cardinally_monotone_plott(const ChoiceFunction& cf,
                                  const Limits& limits = {});

}  // namespace plott

#endif  // PLOTT_AXIOMS_HPP_

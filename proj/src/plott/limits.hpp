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

#ifndef PLOTT_LIMITS_HPP_
#define PLOTT_LIMITS_HPP_

#include <cstdint>

namespace plott {

// Bounds on exhaustive work. All sizes count ground-set elements (contracts).
struct Limits {
  int table = 16;             // to_table and single-menu audits (2^n menus)
  int pair_audit = 12;        // path-independence audit (4^n menu pairs)
  int enumerate = 20;         // enumerate_stable (2^|E| systems)
  int decompose_domain = 6;   // find_sequential_decomposition
  std::int64_t decompose_budget = 20'000'000;  // search nodes

  // Defaults overridden by PLOTT_AUDIT_LIMIT, PLOTT_PAIR_AUDIT_LIMIT and
  // PLOTT_ENUM_LIMIT when set to a positive integer.
  static Limits from_env();
};

}  // namespace plott

#endif  // PLOTT_LIMITS_HPP_

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

#include "plott/errors.hpp"

#include <cstdlib>
#include <string>

#include "plott/limits.hpp"

namespace plott {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kInput: return "input";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kStructure: return "structure";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kConnectivity: return "connectivity";
    case ErrorCode::kLimit: return "limit";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

void read_env_int(const char* name, int& target) {
  const char* value = std::getenv(name);
  if (value == nullptr) return;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (end != value && *end == '\0' && parsed > 0 && parsed <= 64) {
    target = static_cast<int>(parsed);
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_env_int("PLOTT_AUDIT_LIMIT", limits.table);
  read_env_int("PLOTT_PAIR_AUDIT_LIMIT", limits.pair_audit);
  read_env_int("PLOTT_ENUM_LIMIT", limits.enumerate);
  return limits;
}

}  // namespace plott

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

#ifndef PLOTT_ERRORS_HPP_
#define PLOTT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace plott {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto plott_status values.
enum class ErrorCode {
  kSyntax,        // malformed instance text
  kInput,         // unknown name, bad argument
  kDomain,        // menu or CF outside the expected domain
  kStructure,     // representation invariant violated
  kPrecondition,  // operation precondition does not hold
  kConnectivity,  // split workers share a contract
  kLimit,         // exhaustive work exceeds the configured limit
  kInternal,      // an invariant the library relies on was broken
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace plott

#endif  // PLOTT_ERRORS_HPP_

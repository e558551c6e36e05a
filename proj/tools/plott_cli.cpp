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

// Command-line front end over the C interface. Each run writes one JSON
// document to stdout:
//   {"command": {...}, "exit_code": N, "result": ..., "status": "..."}
// Exit codes: 0 success or property true, 1 checked property false,
// 2 usage, input or precondition error. Timing goes to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plott/plott.h"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct ProblemDeleter {
  void operator()(plott_problem* p) const { plott_problem_free(p); }
};
using ProblemPtr = std::unique_ptr<plott_problem, ProblemDeleter>;

struct StringDeleter {
  void operator()(char* s) const { plott_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Error raised by a library call, carrying its status.
struct CallFailed {
  plott_status status;
  std::string message;
};

void check(plott_status status) {
  if (status != PLOTT_OK) throw CallFailed{status, plott_last_error()};
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto first = name.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    out.push_back(name.substr(first, name.find_last_not_of(' ') - first + 1));
  }
  return out;
}

// Keeps a name list alive as the char pointer array the C API expects.
class NameArray {
 public:
  explicit NameArray(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) ptrs_.push_back(n.c_str());
  }
  const char* const* data() const { return ptrs_.empty() ? empty_ : ptrs_.data(); }
  size_t size() const { return ptrs_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<const char*> ptrs_;
  static constexpr const char* empty_[1] = {nullptr};
};

struct Outcome {
  json result;
  int exit_code = kExitTrue;
};

Outcome from_report(OwnedString text) {
  Outcome out;
  out.result = json::parse(text.get());
  if (auto it = out.result.find("verdict"); it != out.result.end()) {
    out.exit_code = it->get<bool>() ? kExitTrue : kExitFalse;
  }
  return out;
}

ProblemPtr load(const std::string& path) {
  plott_problem* raw = nullptr;
  check(plott_problem_load(path.c_str(), &raw));
  return ProblemPtr(raw);
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw CallFailed{PLOTT_ERR_INPUT, "cannot write '" + path + "'"};
  }
}

struct Args {
  std::string file;
  std::string agent;
  int max_q = 0;
  std::string system;
  std::string order;
  std::string s;
  std::string t;
  std::string workers;
  std::string out;
  std::string map;
};

void emit(const json& command, int exit_code, const json& result,
          const std::string& status, const std::string& error = {}) {
  json doc = {{"command", command},
              {"exit_code", exit_code},
              {"result", result},
              {"status", status}};
  if (!error.empty()) doc["error"] = error;
  std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plott choice functions, stable contract systems and worker "
               "disaggregation."};
  app.name("plott");
  app.require_subcommand(1);
  Args args;

  CLI::App* cf = app.add_subcommand("cf", "Choice function tools");
  cf->require_subcommand(1);
  CLI::App* audit = cf->add_subcommand("audit", "Audit the axioms of agents' CFs");
  audit->add_option("file", args.file, "Instance file")->required();
  audit->add_option("--agent", args.agent, "Audit only this agent");
  CLI::App* decompose =
      cf->add_subcommand("decompose", "Search a sequential decomposition");
  decompose->add_option("file", args.file, "Instance file")->required();
  decompose->add_option("--agent", args.agent, "Agent whose CF to decompose")
      ->required();
  decompose->add_option("--max-q", args.max_q, "Largest number of stages")
      ->check(CLI::PositiveNumber);

  CLI::App* stable = app.add_subcommand("stable", "Stable contract systems");
  stable->require_subcommand(1);
  CLI::App* check_cmd = stable->add_subcommand("check", "Check a system");
  check_cmd->add_option("file", args.file, "Instance file")->required();
  check_cmd->add_option("--system", args.system, "Contracts, comma separated")
      ->required();
  CLI::App* enumerate = stable->add_subcommand("enumerate", "List stable systems");
  enumerate->add_option("file", args.file, "Instance file")->required();
  CLI::App* solve = stable->add_subcommand("solve", "Worker-return procedure");
  solve->add_option("file", args.file, "Instance file")->required();
  CLI::Option* order_opt =
      solve->add_option("--order", args.order, "Workers in return order");
  CLI::App* compare = stable->add_subcommand("compare", "Blair comparison S <= T");
  compare->add_option("file", args.file, "Instance file")->required();
  compare->add_option("--s", args.s, "System S")->required();
  compare->add_option("--t", args.t, "System T")->required();
  CLI::Option* compare_agent =
      compare->add_option("--agent", args.agent, "Compare for this agent only");

  CLI::App* split = app.add_subcommand("split", "Split sequential workers");
  split->add_option("file", args.file, "Instance file")->required();
  CLI::Option* split_workers =
      split->add_option("--workers", args.workers, "Workers to split");
  split->add_option("--out", args.out, "Modified instance file")->required();
  split->add_option("--map", args.map, "Mapping file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check the split equivalence");
  verify->add_option("file", args.file, "Instance file")->required();
  CLI::Option* verify_workers =
      verify->add_option("--workers", args.workers, "Workers to split");

  json command = {{"argv", std::vector<std::string>(argv + 1, argv + argc)}};
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "plott: " << e.what() << "\n";
    emit(command, kExitError, nullptr, "usage", e.what());
    return kExitError;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::vector<std::pair<CLI::App*, const char*>> names = {
      {audit, "cf audit"},         {decompose, "cf decompose"},
      {check_cmd, "stable check"}, {enumerate, "stable enumerate"},
      {solve, "stable solve"},     {compare, "stable compare"},
      {split, "split"},            {verify, "verify"}};
  std::string name;
  for (const auto& [sub, label] : names) {
    if (sub->parsed()) name = label;
  }
  command["name"] = name;
  Outcome outcome;
  try {
    ProblemPtr problem = load(args.file);
    char* raw = nullptr;
    if (audit->parsed()) {
      check(plott_audit(problem.get(),
                        audit->count("--agent") ? args.agent.c_str() : nullptr,
                        &raw));
      outcome = from_report(OwnedString(raw));
    } else if (decompose->parsed()) {
      check(plott_decompose(problem.get(), args.agent.c_str(), args.max_q, &raw));
      outcome = from_report(OwnedString(raw));
    } else if (check_cmd->parsed()) {
      NameArray system(parse_list(args.system));
      check(plott_check(problem.get(), system.data(), system.size(), &raw));
      outcome = from_report(OwnedString(raw));
    } else if (enumerate->parsed()) {
      check(plott_enumerate(problem.get(), &raw));
      outcome = from_report(OwnedString(raw));
    } else if (solve->parsed()) {
      NameArray order(parse_list(args.order));
      check(plott_solve(problem.get(), order_opt->count() ? order.data() : nullptr,
                        order.size(), &raw));
      outcome = from_report(OwnedString(raw));
    } else if (compare->parsed()) {
      NameArray s(parse_list(args.s));
      NameArray t(parse_list(args.t));
      check(plott_compare(problem.get(), s.data(), s.size(), t.data(), t.size(),
                          compare_agent->count() ? args.agent.c_str() : nullptr,
                          &raw));
      outcome = from_report(OwnedString(raw));
    } else if (split->parsed()) {
      NameArray workers(parse_list(args.workers));
      char* instance = nullptr;
      char* mapping = nullptr;
      check(plott_split(problem.get(),
                        split_workers->count() ? workers.data() : nullptr,
                        workers.size(), &instance, &mapping, &raw));
      OwnedString instance_text(instance);
      OwnedString mapping_text(mapping);
      outcome = from_report(OwnedString(raw));
      write_file(args.out, instance_text.get());
      write_file(args.map, mapping_text.get());
      outcome.result["out"] = args.out;
      outcome.result["map"] = args.map;
    } else if (verify->parsed()) {
      NameArray workers(parse_list(args.workers));
      check(plott_verify(problem.get(),
                         verify_workers->count() ? workers.data() : nullptr,
                         workers.size(), &raw));
      outcome = from_report(OwnedString(raw));
    }
  } catch (const CallFailed& e) {
    std::cerr << "plott: " << plott_status_name(e.status) << ": " << e.message
              << "\n";
    emit(command, kExitError, nullptr, plott_status_name(e.status), e.message);
    return kExitError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "plott: " << name << " took " << elapsed.count() << " ms\n";
  emit(command, outcome.exit_code, outcome.result,
       outcome.exit_code == kExitTrue ? "ok" : "false");
  return outcome.exit_code;
}

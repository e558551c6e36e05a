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

#include "plott/plott.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "plott/axioms.hpp"
#include "plott/decompose.hpp"
#include "plott/disaggregation.hpp"
#include "plott/errors.hpp"
#include "plott/instance_io.hpp"
#include "plott/reports.hpp"
#include "plott/solver.hpp"
#include "plott/stability.hpp"

struct plott_problem {
  plott::Problem problem;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

plott_status to_status(plott::ErrorCode code) {
  return static_cast<plott_status>(static_cast<int>(code) + 1);
}

char* copy_out(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs `body`, converting exceptions into status codes.
template <typename Fn>
plott_status guarded(Fn&& body) {
  last_error.clear();
  try {
    body();
    return PLOTT_OK;
  } catch (const plott::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return PLOTT_ERR_INTERNAL;
  }
}

plott_status bad_argument(const char* what) {
  last_error = what;
  return PLOTT_ERR_ARGUMENT;
}

std::vector<std::string> names_of(const char* const* names, size_t count) {
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) {
    if (names[i] == nullptr) plott::fail(plott::ErrorCode::kInput, "NULL name");
    out.emplace_back(names[i]);
  }
  return out;
}

std::vector<int> agents_of(const plott::Problem& p, const char* const* names,
                           size_t count) {
  std::vector<int> out;
  for (const auto& name : names_of(names, count)) out.push_back(p.agent(name));
  return out;
}

void emit(const json& doc, char** out) { *out = copy_out(plott::dump_canonical(doc)); }

plott::Decomposition decomposition_of(const plott::Problem& p,
                                      const char* const* workers, size_t count,
                                      const plott::Limits& limits) {
  if (workers == nullptr) return plott::default_decomposition(p);
  plott::Decomposition d;
  for (int w : agents_of(p, workers, count)) {
    d[w] = plott::decomposition_for(p, w, limits);
  }
  return d;
}

}  // namespace

extern "C" {

const char* plott_status_name(plott_status status) {
  switch (status) {
    case PLOTT_OK:
      return "ok";
    case PLOTT_ERR_ARGUMENT:
      return "argument";
    default:
      break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(plott::ErrorCode::kInternal)) {
    return "unknown";
  }
  return plott::error_code_name(static_cast<plott::ErrorCode>(code)).data();
}

const char* plott_last_error(void) { return last_error.c_str(); }

plott_status plott_problem_parse(const char* text, size_t length,
                                 plott_problem** out) {
  if (text == nullptr || out == nullptr) return bad_argument("NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto p = plott::parse_instance(std::string_view(text, length),
                                   plott::Limits::from_env());
    *out = new plott_problem{std::move(p)};
  });
}

plott_status plott_problem_load(const char* path, plott_problem** out) {
  if (path == nullptr || out == nullptr) return bad_argument("NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto p = plott::load_instance(path, plott::Limits::from_env());
    *out = new plott_problem{std::move(p)};
  });
}

void plott_problem_free(plott_problem* problem) { delete problem; }

void plott_string_free(char* text) { delete[] text; }

plott_status plott_serialize(const plott_problem* problem, char** out_json) {
  if (problem == nullptr || out_json == nullptr) return bad_argument("NULL argument");
  return guarded(
      [&] { *out_json = copy_out(plott::serialize_instance(problem->problem)); });
}

plott_status plott_audit(const plott_problem* problem, const char* agent,
                         char** out_json) {
  if (problem == nullptr || out_json == nullptr) return bad_argument("NULL argument");
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const plott::Limits limits = plott::Limits::from_env();
    std::vector<int> agents;
    if (agent != nullptr) {
      agents.push_back(p.agent(agent));
    } else {
      for (int a = 0; a < p.frame.agent_count(); ++a) agents.push_back(a);
    }
    json reports = json::array();
    bool all = true;
    for (int a : agents) {
      const plott::AxiomReport r = plott::audit_axioms(p.cfs[a], limits);
      all = all && r.plott;
      reports.push_back(plott::audit_json(p, a, r));
    }
    emit({{"agents", reports}, {"verdict", all}}, out_json);
  });
}

plott_status plott_decompose(const plott_problem* problem, const char* agent,
                             int max_q, char** out_json) {
  if (problem == nullptr || agent == nullptr || out_json == nullptr) {
    return bad_argument("NULL argument");
  }
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const int a = p.agent(agent);
    const int q = max_q > 0 ? max_q : p.cfs[a].domain().size();
    auto orders = plott::find_sequential_decomposition(
        p.cfs[a], q, plott::Limits::from_env());
    json doc = plott::decomposition_json(p, a, q, orders);
    doc["verdict"] = orders.has_value();
    emit(doc, out_json);
  });
}

plott_status plott_check(const plott_problem* problem,
                         const char* const* system, size_t count,
                         char** out_json) {
  if (problem == nullptr || out_json == nullptr || (system == nullptr && count)) {
    return bad_argument("NULL argument");
  }
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const plott::ContractSystem s = p.system(names_of(system, count));
    const plott::StabilityReport r = plott::is_stable(p, s);
    json doc = plott::stability_json(p, s, r);
    doc["verdict"] = r.stable;
    emit(doc, out_json);
  });
}

plott_status plott_enumerate(const plott_problem* problem, char** out_json) {
  if (problem == nullptr || out_json == nullptr) return bad_argument("NULL argument");
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    emit(plott::systems_json(
             p, plott::enumerate_stable(p, plott::Limits::from_env())),
         out_json);
  });
}

plott_status plott_solve(const plott_problem* problem,
                         const char* const* order, size_t count,
                         char** out_json) {
  if (problem == nullptr || out_json == nullptr) return bad_argument("NULL argument");
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    std::optional<std::vector<int>> chosen;
    if (order != nullptr) chosen = agents_of(p, order, count);
    const auto trace =
        plott::solve_by_worker_return(p, chosen, plott::Limits::from_env());
    emit(plott::trace_json(p, chosen ? *chosen : p.agents_on(plott::Side::kWorker),
                           trace),
         out_json);
  });
}

plott_status plott_compare(const plott_problem* problem, const char* const* s,
                           size_t s_count, const char* const* t,
                           size_t t_count, const char* agent,
                           char** out_json) {
  if (problem == nullptr || out_json == nullptr || (s == nullptr && s_count) ||
      (t == nullptr && t_count)) {
    return bad_argument("NULL argument");
  }
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const plott::ContractSystem sa = p.system(names_of(s, s_count));
    const plott::ContractSystem ta = p.system(names_of(t, t_count));
    json agents = json::array();
    bool all = true;
    bool firms = true;
    for (int a = 0; a < p.frame.agent_count(); ++a) {
      const bool st = plott::blair_compare_systems(p, a, sa, ta);
      const bool ts = plott::blair_compare_systems(p, a, ta, sa);
      all = all && st;
      if (!p.sides.empty() && p.sides[a] == plott::Side::kFirm) firms = firms && st;
      json row = plott::agent_json(p, a);
      row["s_leq_t"] = st;
      row["t_leq_s"] = ts;
      agents.push_back(std::move(row));
    }
    json doc = {{"agents", agents},
                {"s", plott::system_json(p, sa)},
                {"t", plott::system_json(p, ta)}};
    if (agent != nullptr) {
      const int a = p.agent(agent);
      doc["scope"] = plott::agent_json(p, a);
      doc["verdict"] = plott::blair_compare_systems(p, a, sa, ta);
    } else if (p.has_bipartition()) {
      doc["scope"] = "firms";
      doc["verdict"] = firms;
    } else {
      doc["scope"] = "agents";
      doc["verdict"] = all;
    }
    emit(doc, out_json);
  });
}

plott_status plott_split(const plott_problem* problem,
                         const char* const* workers, size_t count,
                         char** out_instance, char** out_mapping,
                         char** out_json) {
  if (problem == nullptr || out_instance == nullptr || out_mapping == nullptr ||
      out_json == nullptr) {
    return bad_argument("NULL argument");
  }
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const plott::Limits limits = plott::Limits::from_env();
    const plott::Decomposition d = decomposition_of(p, workers, count, limits);
    const plott::SplitResult sr = plott::split_workers(p, d, {}, limits);
    json split = json::array();
    for (const auto& [w, stages] : d) {
      json row = plott::agent_json(p, w);
      row["stages"] = stages.size();
      split.push_back(std::move(row));
    }
    const std::string instance = plott::serialize_instance(sr.modified);
    const std::string mapping = plott::serialize_mapping(p, sr);
    const std::string report = plott::dump_canonical(
        {{"agents", sr.modified.frame.agent_count()},
         {"contracts", sr.modified.frame.contract_count()},
         {"split_workers", split}});
    *out_instance = copy_out(instance);
    *out_mapping = copy_out(mapping);
    *out_json = copy_out(report);
  });
}

plott_status plott_verify(const plott_problem* problem,
                          const char* const* workers, size_t count,
                          char** out_json) {
  if (problem == nullptr || out_json == nullptr) return bad_argument("NULL argument");
  return guarded([&] {
    const plott::Problem& p = problem->problem;
    const plott::Limits limits = plott::Limits::from_env();
    const plott::EquivalenceReport report = plott::verify_equivalence(
        p, decomposition_of(p, workers, count, limits), {}, limits);
    json doc = plott::equivalence_json(p, report);
    doc["verdict"] = report.all_ok();
    emit(doc, out_json);
  });
}

}  // extern "C"

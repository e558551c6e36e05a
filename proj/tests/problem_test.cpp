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

#include <gtest/gtest.h>

#include "plott/axioms.hpp"
#include "plott/instance_io.hpp"
#include "plott/problem.hpp"
#include "support/expect_error.hpp"

namespace plott {
namespace {

Problem fixture(const char* name) {
  return load_instance(std::string(PLOTT_FIXTURE_DIR "/") + name);
}

// Two agents sharing contracts x and y, both linear x > y.
Problem pair_problem() {
  Problem p;
  p.frame.agents = {"a", "b"};
  p.frame.contracts = {"x", "y"};
  p.frame.participants = {{0, 1}, {0, 1}};
  p.cfs = {make_linear({0, 1}), make_linear({0, 1})};
  p.sides = {Side::kFirm, Side::kWorker};
  return p;
}

TEST(ProblemTest, IncidenceAndLookup) {
  const Problem p = fixture("fix-a.json");
  EXPECT_EQ(p.frame.agent_count(), 3);
  EXPECT_EQ(p.frame.contract_count(), 3);
  const int m = p.agent("m");
  const int w0 = p.agent("w0");
  EXPECT_EQ(p.frame.incidence(m), p.system({"l", "r", "e"}));
  EXPECT_EQ(p.frame.incidence(w0), p.system({"e"}));
  EXPECT_EQ(p.names_of(p.system({"r", "l"})), (std::vector<std::string>{"l", "r"}));
  EXPECT_PLOTT_ERROR(p.agent("nobody"), ErrorCode::kInput);
  EXPECT_PLOTT_ERROR(p.system({"l", "zz"}), ErrorCode::kInput);
  EXPECT_TRUE(p.has_bipartition());
  EXPECT_TRUE(p.is_bipartite_pairwise());
  EXPECT_EQ(p.agents_on(Side::kWorker), (std::vector<int>{1, 2}));
}

TEST(ProblemTest, ValidationCatchesBrokenFrames) {
  validate_problem(pair_problem());

  Problem dup = pair_problem();
  dup.frame.agents[1] = "a";
  EXPECT_PLOTT_ERROR(validate_problem(dup), ErrorCode::kStructure);

  Problem lonely = pair_problem();
  lonely.frame.participants[1] = {};
  EXPECT_PLOTT_ERROR(validate_problem(lonely), ErrorCode::kStructure);

  Problem wrong_domain = pair_problem();
  wrong_domain.cfs[1] = make_linear({0});
  EXPECT_PLOTT_ERROR(validate_problem(wrong_domain), ErrorCode::kDomain);

  Problem missing_cf = pair_problem();
  missing_cf.cfs.pop_back();
  EXPECT_PLOTT_ERROR(validate_problem(missing_cf), ErrorCode::kStructure);
}

TEST(ProblemTest, ConnectivityOfSplitWorkers) {
  const Problem p = pair_problem();
  const std::vector<int> one = {1};
  const std::vector<int> both = {0, 1};
  validate_problem(p, &one);
  EXPECT_PLOTT_ERROR(validate_problem(p, &both), ErrorCode::kConnectivity);
}

TEST(ProblemTest, SidesWithoutPairContractsAreNotPairwise) {
  Problem p = pair_problem();
  p.sides = {Side::kFirm, Side::kFirm};
  EXPECT_TRUE(p.has_bipartition());
  EXPECT_FALSE(p.is_bipartite_pairwise());
  p.sides = {Side::kUnspecified, Side::kWorker};
  EXPECT_FALSE(p.has_bipartition());
}

TEST(ProblemTest, DeleteAgentRestrictsNeighbours) {
  const Problem p = fixture("fix-a.json");
  const Problem q = delete_agent(p, p.agent("w0"));
  validate_problem(q);
  EXPECT_EQ(q.frame.agents, (std::vector<std::string>{"m", "w"}));
  EXPECT_EQ(q.frame.contracts, (std::vector<std::string>{"l", "r"}));
  const ChoiceFunction& m = q.cfs[q.agent("m")];
  EXPECT_TRUE(is_linear_cf(m));
  EXPECT_EQ(m.choose(q.system({"l", "r"})), q.system({"l"}));
  // Untouched agents keep their representation.
  EXPECT_EQ(q.cfs[q.agent("w")].kind(), CfKind::kLinear);
  EXPECT_PLOTT_ERROR(delete_agent(p, 7), ErrorCode::kInput);
}

TEST(ProblemTest, SideNames) {
  EXPECT_EQ(side_name(Side::kFirm), "firm");
  EXPECT_EQ(side_name(Side::kWorker), "worker");
}

}  // namespace
}  // namespace plott

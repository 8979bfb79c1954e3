// Copyright 2026 The cyclat Authors
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

#include "cyclat/checks.h"

#include <gtest/gtest.h>

#include "cyclat/error.h"
#include "json.hpp"

namespace cyclat {
namespace {

TEST(ChecksTest, AllPassAtFour) {
  const auto reports = RunAllChecks(4);
  EXPECT_EQ(reports.size(), Checks().size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.ToText();
    EXPECT_EQ(r.n, 4);
    EXPECT_FALSE(r.witness.has_value()) << r.ToText();
  }
}

TEST(ChecksTest, ModularityAtFiveCarriesWitness) {
  const auto r = RunCheck("modularity-witness", 5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.check, "modularity");
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->find("ranks 4+4 != 3+6"), std::string::npos) << *r.witness;
  EXPECT_NE(r.witness->find("(1,4,2,5,3)"), std::string::npos);
  EXPECT_NE(r.witness->find("(1,3,5,4,2)"), std::string::npos);
  const auto json = nlohmann::json::parse(r.ToJson());
  EXPECT_EQ(json["check"], "modularity");
  EXPECT_EQ(json["pass"], true);
  EXPECT_TRUE(json.contains("witness"));
}

TEST(ChecksTest, SelectedChecks) {
  EXPECT_TRUE(RunCheck("eulerian", 6).pass);
  EXPECT_TRUE(RunCheck("distributivity", 5).pass);
  EXPECT_TRUE(RunCheck("young", 6).pass);
  EXPECT_TRUE(RunCheck("fc", 12).pass);
  EXPECT_TRUE(RunCheck("alpha", 5).pass);
  EXPECT_TRUE(RunCheck("interval-iso", 5).pass);
  EXPECT_TRUE(RunCheck("lattice", 6).pass);
  const auto json = nlohmann::json::parse(RunCheck("grading", 3).ToJson());
  EXPECT_FALSE(json.contains("witness"));
}

TEST(ChecksTest, Errors) {
  try {
    RunCheck("frobnicate", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCheck);
  }
  try {
    RunCheck("mobius", 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(RunCheck("fc", 2), Error);
  EXPECT_EQ(FindCheck("young-limit").name, "young");
}

}  // namespace
}  // namespace cyclat

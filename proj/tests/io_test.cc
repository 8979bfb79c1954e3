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

#include "cyclat/io.h"

#include <random>

#include <gtest/gtest.h>

#include "cyclat/error.h"
#include "json.hpp"

namespace cyclat {
namespace {

TEST(DetectTest, LeadingCharacter) {
  EXPECT_EQ(DetectForm("(1,2,3)"), Form::kCycle);
  EXPECT_EQ(DetectForm("  [[0,1],[0]]"), Form::kVector);
  EXPECT_EQ(DetectForm("[ [0]]"), Form::kVector);
  EXPECT_EQ(DetectForm("[-2,1,4,7]"), Form::kWindow);
  EXPECT_EQ(DetectForm(R"({"n":4,"window":[-2,1,4,7]})"), Form::kWindow);
  EXPECT_EQ(DetectForm(R"({"n":4,"v":[[0,1,2],[0,1],[0]]})"), Form::kVector);
  EXPECT_EQ(DetectForm(R"({"cycle":[1,3,2]})"), Form::kCycle);
  EXPECT_THROW(DetectForm("1,2,3"), Error);
  EXPECT_THROW(DetectForm(""), Error);
  EXPECT_THROW(DetectForm(R"({"x":1})"), Error);
  EXPECT_EQ(FormFromName("window"), Form::kWindow);
  EXPECT_FALSE(FormFromName("matrix").has_value());
}

TEST(ParseTest, Vectors) {
  const auto v = ParseVector(R"({"n": 4, "v": [[0,1,2],[0,1],[0]]})");
  EXPECT_EQ(v, AdmittedVector::Max(4));
  EXPECT_EQ(ParseVector("[[0,1,2],[0,1],[0]]"), v);
  EXPECT_EQ(VectorToJson(v), R"({"n":4,"v":[[0,1,2],[0,1],[0]]})");
  try {
    ParseVector("[[0,2],[0]]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeltaOutOfRange);
  }
  try {
    ParseVector("[[0,1],[0]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  EXPECT_THROW(ParseVector(R"({"n":5,"v":[[0,1],[0]]})"), Error);
  EXPECT_THROW(ParseVector("[[0,1.5],[0]]"), Error);
}

TEST(ParseTest, WindowsAndCycles) {
  EXPECT_EQ(ParseWindow(R"({"n":4,"window":[-2,1,4,7]})"), TopWindow(4));
  EXPECT_EQ(ParseWindow("[-2,1,4,7]"), TopWindow(4));
  EXPECT_THROW(ParseWindow(R"({"n":3,"window":[-2,1,4,7]})"), Error);
  EXPECT_THROW(ParseWindow(R"({"window":[1,5,3,4]})"), Error);
  EXPECT_EQ(WindowToJson(TopWindow(4)), R"({"n":4,"window":[-2,1,4,7]})");
  const auto c = ParseCycle(R"({"n":6,"cycle":[4,2,3,5,1,6]})");
  EXPECT_EQ(c.ToString(), "(1,6,4,2,3,5)");
  EXPECT_EQ(CycleToJson(c), R"({"n":6,"cycle":[1,6,4,2,3,5]})");
  EXPECT_THROW(ParseCycle(R"({"cycle":[1,1,2]})"), Error);
}

TEST(ConvertTest, Examples) {
  EXPECT_EQ(FormatElement(ParseElement("(1,2,3,4)"), Form::kVector, false),
            "[[0,0,0],[0,0],[0]]");
  EXPECT_EQ(FormatElement(ParseElement("(1,4,3,2)"), Form::kWindow, false),
            "[-2,1,4,7]");
  EXPECT_EQ(ParseElement("[-2,1,4,7]"), CircularPermutation::Top(4));
  EXPECT_EQ(ParseElement("[[0,1,2],[0,1],[0]]"), CircularPermutation::Top(4));
  EXPECT_THROW(ParseElement("[2,1,3,4]"), Error);
  EXPECT_EQ(ParseElement("(1,3,2)", Form::kCycle), CircularPermutation::Top(3));
}

TEST(ConvertTest, RoundTripsThroughEveryForm) {
  std::mt19937_64 rng(2);
  std::vector<CircularPermutation> all;
  ForEachCircularPermutation(6, [&](const CircularPermutation& s) {
    all.push_back(s);
  });
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& s = all[pick(rng)];
    for (Form f : {Form::kCycle, Form::kVector, Form::kWindow}) {
      for (bool json : {false, true}) {
        ASSERT_EQ(ParseElement(FormatElement(s, f, json)), s);
      }
    }
  }
}

TEST(ExportTest, DotAndJson) {
  const auto d = Build(4);
  const auto dot = DiagramToDot(d);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("label=\"(1,2,3,4)\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"(1,4)\""), std::string::npos);
  int arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos;
       p = dot.find("->", p + 1)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 6);
  EXPECT_EQ(DiagramToDot(Build(4)), dot);

  const auto parsed = nlohmann::json::parse(DiagramToJson(Build(5)));
  EXPECT_EQ(parsed["n"], 5);
  EXPECT_EQ(parsed["nodes"].size(), 24u);
  EXPECT_EQ(parsed["ranks"].size(), 24u);
  EXPECT_EQ(parsed["nodes"][0], "(1,2,3,4,5)");
  BuildOptions threaded;
  threaded.workers = 3;
  EXPECT_EQ(DiagramToJson(Build(6)), DiagramToJson(Build(6, threaded)));
}

}  // namespace
}  // namespace cyclat

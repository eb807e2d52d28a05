// Copyright 2026 The natplan Authors.
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

#include "natplan/harness/hardcode.hpp"
#include "support.hpp"

namespace natplan::harness {
namespace {

const Plan kTripGold = TripPlan({{1, 4, "Madrid"}, {4, 6, "Dublin"}, {6, 7, "Tallinn"}});
const Plan kLoopPlan = CalendarPlan{Weekday::kMonday, Interval(600, 660)};

TEST(Hardcode, LiteralItineraryIsSuspected) {
  auto v = detect_hardcoding(testing::data_text("programs/hardcoded_trip.py"), kTripGold);
  EXPECT_TRUE(v.suspected);
  EXPECT_DOUBLE_EQ(v.matched_atoms, 1.0);
  EXPECT_FALSE(v.search_tokens_found);
}

TEST(Hardcode, SearchingProgramIsNotSuspected) {
  auto v = detect_hardcoding(testing::data_text("programs/loop_calendar.py"), kLoopPlan);
  EXPECT_FALSE(v.suspected);
  EXPECT_TRUE(v.search_tokens_found);
  EXPECT_NE(std::find(v.search_tokens.begin(), v.search_tokens.end(), "while"),
            v.search_tokens.end());
  EXPECT_LT(v.matched_atoms, kHardcodeThreshold);
}

TEST(Hardcode, SolverProgramHasSolverTokens) {
  auto v = detect_hardcoding(testing::data_text("programs/z3_calendar.py"), kLoopPlan);
  EXPECT_FALSE(v.suspected);
  for (const char* t : {"z3", "Optimize", "minimize", "check"}) {
    EXPECT_NE(std::find(v.search_tokens.begin(), v.search_tokens.end(), t), v.search_tokens.end())
        << t;
  }
}

TEST(Hardcode, CommentsAndStringsDoNotCountAsSearch) {
  const std::string src =
      "# for each city we loop while searching\n"
      "print('for while permutations')\n"
      "print('{\"start\": {\"day\": \"Monday\", \"time\": \"10:00\"}, "
      "\"end\": {\"day\": \"Monday\", \"time\": \"11:00\"}}')\n";
  auto v = detect_hardcoding(src, kLoopPlan);
  EXPECT_FALSE(v.search_tokens_found);
  EXPECT_TRUE(v.suspected);
}

TEST(Hardcode, RecursionCountsAsSearch) {
  const std::string src =
      "def solve(i):\n"
      "    if i > 3:\n"
      "        return 0\n"
      "    return solve(i + 1)\n"
      "x = ['Day 1-4', 'Madrid', 'Day 4-6', 'Dublin', 'Day 6-7', 'Tallinn']\n";
  auto v = detect_hardcoding(src, kTripGold);
  ASSERT_EQ(v.search_tokens, std::vector<std::string>{"recursion:solve"});
  EXPECT_GE(v.matched_atoms, kHardcodeThreshold);
  EXPECT_FALSE(v.suspected);
}

TEST(Hardcode, ScatteredLiteralsStaySeparate) {
  // Literals interrupted by literal-free statements fall in separate clusters.
  const std::string src =
      "a = 'Madrid'\n"
      "b = a\n"
      "c = 'Dublin'\n"
      "d = c\n"
      "e = 'Tallinn'\n";
  auto v = detect_hardcoding(src, kTripGold);
  EXPECT_LT(v.matched_atoms, kHardcodeThreshold);
  EXPECT_FALSE(v.suspected);
}

TEST(Hardcode, TwelveHourLiteralsMatchClockAtoms) {
  const std::string src =
      "plan = [('Ann', '9:30AM', '10:15AM')]\n";
  auto v = detect_hardcoding(
      src, MeetingPlan({{"Ann", "Pier", TimeOfDay::hm(9, 30), TimeOfDay::hm(10, 15)}}));
  EXPECT_DOUBLE_EQ(v.matched_atoms, 1.0);
  EXPECT_TRUE(v.suspected);
}

TEST(Hardcode, VerdictJson) {
  auto j = to_json(detect_hardcoding("print(1)", kLoopPlan));
  EXPECT_EQ(j.at("suspected"), false);
  EXPECT_TRUE(j.at("search_tokens").is_array());
}

}  // namespace
}  // namespace natplan::harness

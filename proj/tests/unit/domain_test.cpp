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

#include "natplan/domain.hpp"

namespace natplan {
namespace {

constexpr Weekday kMon = Weekday::kMonday;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

TEST(Task, NamesRoundTrip) {
  for (Task t : {Task::kCalendar, Task::kTrip, Task::kMeeting}) {
    EXPECT_EQ(parse_task(to_string(t)), t);
  }
  EXPECT_THROW(parse_task("chess"), Error);
}

TEST(CalendarProblem, EnforcesInvariants) {
  const Interval work(540, 1020);
  EXPECT_THROW(CalendarProblem({}, {kMon}, work, 30, {}), Error);
  EXPECT_THROW(CalendarProblem({"A", "A"}, {kMon}, work, 30, {}), Error);
  EXPECT_THROW(CalendarProblem({"A"}, {}, work, 30, {}), Error);
  EXPECT_THROW(CalendarProblem({"A"}, {kMon}, work, 0, {}), Error);
  EXPECT_THROW(CalendarProblem({"A"}, {kMon}, work, 481, {}), Error);
  EXPECT_THROW(CalendarProblem({"A"}, {kMon}, work, 30, {{"B", {{kMon, Interval(600, 630)}}}}),
               Error);
  EXPECT_NO_THROW(CalendarProblem({"A"}, {kMon}, work, 480, {}));
}

TEST(CalendarProblem, DropsEmptyBusyEntries) {
  CalendarProblem p({"A", "B"}, {kMon}, Interval(540, 1020), 30,
                    {{"A", {}}, {"B", {{kMon, Interval(600, 630)}}}});
  EXPECT_EQ(p.busy().size(), 1u);
  EXPECT_TRUE(p.busy_of("A").empty());
  EXPECT_EQ(p.busy_of("B").size(), 1u);
  EXPECT_EQ(p, CalendarProblem({"A", "B"}, {kMon}, Interval(540, 1020), 30,
                               {{"B", {{kMon, Interval(600, 630)}}}}));
}

TEST(CityPair, IsUnordered) {
  EXPECT_EQ(CityPair("Rome", "Oslo"), CityPair("Oslo", "Rome"));
  EXPECT_EQ(CityPair("Rome", "Oslo").first(), "Oslo");
  EXPECT_THROW(CityPair("Rome", "Rome"), Error);
}

TEST(TripProblem, DurationSumMustMatch) {
  const std::set<CityPair> flights = {{"A", "B"}};
  EXPECT_NO_THROW(TripProblem(5, {{"A", 3}, {"B", 3}}, flights));
  EXPECT_EQ(code_of([&] { TripProblem(5, {{"A", 3}, {"B", 2}}, flights); }),
            ErrorCode::kDurationSumMismatch);
}

TEST(TripProblem, EnforcesInvariants) {
  EXPECT_EQ(code_of([] { TripProblem(0, {{"A", 1}}, {}); }), ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { TripProblem(3, {}, {}); }), ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { TripProblem(3, {{"A", 3}}, {{"A", "Z"}}); }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { TripProblem(3, {{"A", 3}}, {}, {{"Z", 1, 1}}); }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { TripProblem(3, {{"A", 3}}, {}, {{"A", 2, 4}}); }),
            ErrorCode::kInvariantViolation);
}

TEST(TripPlan, RejectsEmptyOrBackwards) {
  EXPECT_THROW(TripPlan({}), Error);
  EXPECT_THROW(TripPlan({{3, 2, "A"}}), Error);
}

MeetingProblem::TravelMap full_travel(const std::set<std::string>& locs, int minutes) {
  MeetingProblem::TravelMap t;
  for (const auto& a : locs) {
    for (const auto& b : locs) {
      if (a != b) t[{a, b}] = minutes;
    }
  }
  return t;
}

TEST(MeetingProblem, RequiresCompleteTravelMatrix) {
  const std::set<std::string> locs = {"X", "Y", "Z"};
  auto travel = full_travel(locs, 10);
  EXPECT_NO_THROW(MeetingProblem("X", TimeOfDay(540), locs, travel, {}));
  travel.erase({"Z", "Y"});
  EXPECT_EQ(code_of([&] { MeetingProblem("X", TimeOfDay(540), locs, travel, {}); }),
            ErrorCode::kMissingTravelEntry);
}

TEST(MeetingProblem, EnforcesInvariants) {
  const std::set<std::string> locs = {"X", "Y"};
  const auto travel = full_travel(locs, 10);
  EXPECT_THROW(MeetingProblem("W", TimeOfDay(540), locs, travel, {}), Error);
  auto neg = travel;
  neg[{"X", "Y"}] = -1;
  EXPECT_THROW(MeetingProblem("X", TimeOfDay(540), locs, neg, {}), Error);
  EXPECT_THROW(
      MeetingProblem("X", TimeOfDay(540), locs, travel, {{"F", "Q", Interval(600, 700), 30}}),
      Error);
  MeetingProblem ok("X", TimeOfDay(540), locs, travel, {{"F", "Y", Interval(600, 700), 30}});
  EXPECT_EQ(ok.travel("X", "Y"), 10);
  EXPECT_EQ(ok.travel("X", "X"), 0);
  ASSERT_NE(ok.find_friend("F"), nullptr);
  EXPECT_EQ(ok.find_friend("G"), nullptr);
}

TEST(MeetingPlan, SortsByStart) {
  MeetingPlan plan({{"B", "Y", TimeOfDay(700), TimeOfDay(730)},
                    {"A", "X", TimeOfDay(600), TimeOfDay(630)}});
  EXPECT_EQ(plan.meetings().front().person, "A");
  EXPECT_THROW(MeetingPlan({{"A", "X", TimeOfDay(600), TimeOfDay(600)}}), Error);
}

TEST(Variants, TaskOfFollowsAlternative) {
  Problem p = TripProblem(1, {{"A", 1}}, {});
  EXPECT_EQ(task_of(p), Task::kTrip);
  Plan plan = MeetingPlan();
  EXPECT_EQ(task_of(plan), Task::kMeeting);
}

}  // namespace
}  // namespace natplan

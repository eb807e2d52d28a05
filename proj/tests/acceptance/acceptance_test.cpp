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

// Acceptance suite. Each test is one criterion; a listener prints a single
// PASS or FAIL line per criterion.

#include <gtest/gtest.h>

#include <chrono>
#include <iostream>

#include "natplan/natplan.hpp"
#include "oracles/naive.hpp"
#include "support.hpp"

namespace natplan {
namespace {

using Clock = std::chrono::steady_clock;
using harness::Category;
using testing::CannedRunner;
using testing::ok_response;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Plan kCalendarGold = CalendarPlan{Weekday::kMonday, Interval(810, 870)};
const Plan kTripGold = TripPlan({{1, 4, "Madrid"}, {4, 6, "Dublin"}, {6, 7, "Tallinn"}});

// ---------------------------------------------------------------------------

TEST(Acceptance, CalendarGolden) {
  const auto t0 = Clock::now();
  const auto parsed = parse_calendar(testing::data_text("appendix/calendar.txt"));
  const auto solved = solve_calendar(parsed.problem);
  ASSERT_EQ(solved.status, SolveStatus::kSatisfiable);
  EXPECT_EQ(Plan(*solved.plan), kCalendarGold);
  const Problem p = parsed.problem;
  EXPECT_EQ(verify(p, kCalendarGold).verdict, Verdict::kCorrect);
  const auto bad = verify(p, Plan(CalendarPlan{Weekday::kMonday, Interval(780, 840)}));
  EXPECT_EQ(bad.verdict, Verdict::kWrongPlan);
  EXPECT_TRUE(bad.cites("busy/John/2"));
  EXPECT_LT(seconds_since(t0), 1.0);
}

TEST(Acceptance, TripGolden) {
  const auto t0 = Clock::now();
  const auto p = parse_trip(testing::data_text("appendix/trip.txt")).problem;
  const auto solved = solve_trip(p);
  ASSERT_EQ(solved.status, SolveStatus::kSatisfiable);
  EXPECT_EQ(Plan(*solved.plan), kTripGold);
  const auto all = oracle::trip_all_itineraries(p);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all.front(), std::get<TripPlan>(kTripGold).segments());
  EXPECT_EQ(verify(Problem(p), kTripGold).verdict, Verdict::kCorrect);
  EXPECT_LT(seconds_since(t0), 1.0);
}

TEST(Acceptance, MeetingGolden) {
  const auto t0 = Clock::now();
  const auto p = parse_meeting(testing::data_text("appendix/meeting.txt")).problem;
  EXPECT_EQ(max_meetable(p), 3);
  EXPECT_EQ(oracle::meeting_max_count(p), 3);
  const auto solved = solve_meeting(p);
  ASSERT_EQ(solved.status, SolveStatus::kSatisfiable);
  const auto set = compile(p);
  ASSERT_NE(set.find("max_count"), nullptr);
  const auto report = verify(set, p, *solved.plan);
  EXPECT_EQ(report.verdict, Verdict::kCorrect);
  EXPECT_EQ(report.checked, set.size());
  const auto gold =
      meeting_plan_from_json(Json::parse(testing::data_text("appendix/meeting_gold.json")));
  EXPECT_EQ(verify(set, p, gold).verdict, Verdict::kCorrect);
  EXPECT_LT(seconds_since(t0), 5.0);
}

// ---------------------------------------------------------------------------
// Instance corpora: generated problems with varied knobs plus their
// single-constraint mutations.

struct Corpus {
  std::vector<Problem> problems;
  std::vector<Plan> witnesses;  // parallel to problems
  std::vector<testing::Mutation> mutations;
  std::vector<std::size_t> mutated_from;  // witness index per mutation
};

Corpus calendar_corpus() {
  Corpus c;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    GenParams g;
    g.seed = seed;
    g.calendar.participants = 1 + static_cast<int>(seed % 5);
    g.calendar.days = 1 + static_cast<int>(seed % 4);
    // Roughly four blocks fit in one working day next to the witness.
    g.calendar.blocks_per_participant =
        std::min(static_cast<int>(seed % 6), 4 * g.calendar.days / g.calendar.participants);
    g.calendar.preferences = static_cast<int>(seed % 3);
    auto gen = gen_calendar(g);
    for (auto& m : testing::calendar_mutations(gen.problem, gen.witness)) {
      c.mutations.push_back(std::move(m));
      c.mutated_from.push_back(c.problems.size());
    }
    c.problems.push_back(gen.problem);
    c.witnesses.push_back(gen.witness);
  }
  return c;
}

Corpus trip_corpus() {
  Corpus c;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    GenParams g;
    g.seed = seed;
    g.trip.cities = 2 + static_cast<int>(seed % 5);
    g.trip.events = static_cast<int>(seed % 3);
    g.trip.edge_density = 0.1 * static_cast<double>(seed % 6);
    auto gen = gen_trip(g);
    for (auto& m : testing::trip_mutations(gen.problem, gen.witness)) {
      c.mutations.push_back(std::move(m));
      c.mutated_from.push_back(c.problems.size());
    }
    c.problems.push_back(gen.problem);
    c.witnesses.push_back(gen.witness);
  }
  return c;
}

Corpus meeting_corpus() {
  Corpus c;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    GenParams g;
    g.seed = seed;
    g.meeting.friends = static_cast<int>(seed % 7);
    g.meeting.locations = 2 + static_cast<int>(seed % 5);
    auto gen = gen_meeting(g);
    for (auto& m : testing::meeting_mutations(gen.problem, gen.witness)) {
      c.mutations.push_back(std::move(m));
      c.mutated_from.push_back(c.problems.size());
    }
    c.problems.push_back(gen.problem);
    c.witnesses.push_back(gen.witness);
  }
  return c;
}

const Corpus& corpus(Task task) {
  static const Corpus kCalendar = calendar_corpus();
  static const Corpus kTrip = trip_corpus();
  static const Corpus kMeeting = meeting_corpus();
  switch (task) {
    case Task::kCalendar: return kCalendar;
    case Task::kTrip: return kTrip;
    case Task::kMeeting: break;
  }
  return kMeeting;
}

struct Agreement {
  int instances = 0;
  int satisfiable = 0;
  int unsatisfiable = 0;
};

void check_calendar(const CalendarProblem& p, Agreement& a) {
  const auto solved = solve_calendar(p);
  const auto expected = oracle::calendar_first_slot(p);
  ++a.instances;
  ASSERT_EQ(solved.status == SolveStatus::kSatisfiable, expected.has_value()) << to_json(p);
  if (!expected) {
    ++a.unsatisfiable;
    return;
  }
  ++a.satisfiable;
  EXPECT_EQ(*solved.plan, *expected) << to_json(p);
  EXPECT_EQ(verify(Problem(p), Plan(*solved.plan)).verdict, Verdict::kCorrect) << to_json(p);
}

void check_trip(const TripProblem& p, Agreement& a) {
  const auto solved = solve_trip(p);
  const auto all = oracle::trip_all_itineraries(p);
  ++a.instances;
  ASSERT_EQ(solved.status == SolveStatus::kSatisfiable, !all.empty()) << to_json(p);
  if (all.empty()) {
    ++a.unsatisfiable;
    return;
  }
  ++a.satisfiable;
  EXPECT_NE(std::find(all.begin(), all.end(), solved.plan->segments()), all.end()) << to_json(p);
  EXPECT_EQ(verify(Problem(p), Plan(*solved.plan)).verdict, Verdict::kCorrect) << to_json(p);
}

void check_meeting(const MeetingProblem& p, Agreement& a) {
  const auto solved = solve_meeting(p);
  ASSERT_EQ(solved.status, SolveStatus::kSatisfiable);
  const int expected = oracle::meeting_max_count(p);
  ++a.instances;
  ++a.satisfiable;
  if (expected < static_cast<int>(p.friends().size())) ++a.unsatisfiable;
  EXPECT_EQ(static_cast<int>(solved.plan->size()), expected) << to_json(p);
  EXPECT_EQ(verify(Problem(p), Plan(*solved.plan)).verdict, Verdict::kCorrect) << to_json(p);
}

TEST(Acceptance, OracleEquivalence) {
  const auto t0 = Clock::now();
  Agreement calendar, trip, meeting;
  for (Task task : {Task::kCalendar, Task::kTrip, Task::kMeeting}) {
    const Corpus& c = corpus(task);
    std::vector<const Problem*> all;
    for (const auto& p : c.problems) all.push_back(&p);
    for (const auto& m : c.mutations) all.push_back(&m.problem);
    for (const Problem* p : all) {
      if (const auto* cp = std::get_if<CalendarProblem>(p)) check_calendar(*cp, calendar);
      else if (const auto* tp = std::get_if<TripProblem>(p)) check_trip(*tp, trip);
      else check_meeting(std::get<MeetingProblem>(*p), meeting);
    }
  }
  std::cout << "  calendar: " << calendar.instances << " instances (" << calendar.unsatisfiable
            << " unsatisfiable)\n"
            << "  trip: " << trip.instances << " instances (" << trip.unsatisfiable
            << " unsatisfiable)\n"
            << "  meeting: " << meeting.instances << " instances (" << meeting.unsatisfiable
            << " with fewer than all friends)\n";
  EXPECT_GE(calendar.instances, 500);
  EXPECT_GE(trip.instances, 500);
  EXPECT_GE(meeting.instances, 500);
  EXPECT_GT(calendar.unsatisfiable, 0);
  EXPECT_GT(trip.unsatisfiable, 0);
  EXPECT_GT(meeting.unsatisfiable, 0);
  EXPECT_LT(seconds_since(t0), 300.0);
}

TEST(Acceptance, WitnessesAndMutations) {
  int witnesses = 0;
  int mutations = 0;
  for (Task task : {Task::kCalendar, Task::kTrip, Task::kMeeting}) {
    const Corpus& c = corpus(task);
    for (std::size_t i = 0; i < c.problems.size(); ++i) {
      ++witnesses;
      EXPECT_EQ(verify(c.problems[i], c.witnesses[i]).verdict, Verdict::kCorrect)
          << to_json(c.problems[i]);
    }
  }
  for (Task task : {Task::kCalendar, Task::kTrip, Task::kMeeting}) {
    const Corpus& c = corpus(task);
    for (std::size_t i = 0; i < c.mutations.size(); ++i) {
      const auto& m = c.mutations[i];
      ++mutations;
      const auto report = verify(m.problem, c.witnesses[c.mutated_from[i]]);
      EXPECT_EQ(report.verdict, Verdict::kWrongPlan) << m.target;
      EXPECT_TRUE(report.cites(m.target)) << m.target << " " << to_json(report);
    }
  }
  std::cout << "  " << witnesses << " witnesses, " << mutations << " mutations\n";
  EXPECT_GE(mutations, 200);
}

// ---------------------------------------------------------------------------

harness::EvalRecord record(Task task, harness::Method method, std::string output) {
  harness::EvalRecord r;
  r.id = "fixture";
  r.task = task;
  r.method = method;
  r.model_name = "fixture";
  r.output_text = std::move(output);
  r.problem_ref = Json::object();
  return r;
}

TEST(Acceptance, OutcomeTaxonomy) {
  const Problem calendar = testing::appendix_calendar();
  const Problem trip = testing::appendix_trip();
  const Problem meeting = testing::appendix_meeting();
  using harness::Method;
  using harness::RunStatus;

  struct Fixture {
    std::string name;
    Category expected;
    harness::EvalRecord rec;
    const Problem* problem;
    harness::RunnerResponse response;
  };
  const std::string calendar_gold = testing::data_text("appendix/calendar_gold.json");
  const std::string trip_gold = testing::data_text("appendix/trip_gold.json");
  const std::string meeting_gold = testing::data_text("appendix/meeting_gold.json");
  const std::vector<Fixture> fixtures = {
      {"syntax error", Category::kError, record(Task::kCalendar, Method::kNativeCode, "def ("),
       &calendar, {RunStatus::kSyntaxError, "", "SyntaxError: invalid syntax", 4}},
      {"runtime error", Category::kError, record(Task::kTrip, Method::kNativeCode, "1/0"), &trip,
       {RunStatus::kRuntimeError, "", "ZeroDivisionError", 4}},
      {"timeout", Category::kError,
       record(Task::kMeeting, Method::kSolverCode, "while True: pass"), &meeting,
       {RunStatus::kTimeout, "", "", 30000}},
      {"refusal", Category::kNoPlan,
       record(Task::kCalendar, Method::kPlan, "I'm sorry, I can't find a time that works."),
       &calendar, ok_response("")},
      {"no JSON", Category::kNoPlan,
       record(Task::kTrip, Method::kPlan, "Start in Madrid for four days, then Dublin, then Tallinn."),
       &trip, ok_response("")},
      {"program printed prose", Category::kNoPlan,
       record(Task::kMeeting, Method::kNativeCode, "print('meet everyone')"), &meeting,
       ok_response("meet everyone\n")},
      {"calendar clash", Category::kWrongPlan,
       record(Task::kCalendar, Method::kPlan,
              R"({"start": {"day": "Monday", "time": "13:00"}, "end": {"day": "Monday", "time": "14:00"}})"),
       &calendar, ok_response("")},
      {"trip without flight", Category::kWrongPlan,
       record(Task::kTrip, Method::kPlan,
              R"({"itinerary": [{"day_range": "Day 1-4", "place": "Madrid"}, {"day_range": "Day 4-5", "place": "Tallinn"}, {"day_range": "Day 5-7", "place": "Dublin"}]})"),
       &trip, ok_response("")},
      {"meeting too few friends", Category::kWrongPlan,
       record(Task::kMeeting, Method::kNativeCode, "print(plan)"), &meeting,
       ok_response(R"({"itinerary": [{"action": "meet", "location": "Chinatown", "person": "Anthony", "start_time": "13:15", "end_time": "14:15"}]})")},
      {"calendar gold", Category::kCorrect, record(Task::kCalendar, Method::kPlan, calendar_gold),
       &calendar, ok_response("")},
      {"trip gold", Category::kCorrect, record(Task::kTrip, Method::kSolverCode, "print(plan)"),
       &trip, ok_response(trip_gold)},
      {"meeting gold", Category::kCorrect, record(Task::kMeeting, Method::kPlan, meeting_gold),
       &meeting, ok_response("")},
  };

  std::array<int, 4> per_category{};
  for (const auto& f : fixtures) {
    CannedRunner runner(f.response);
    const auto outcome = harness::evaluate_record(f.rec, *f.problem, runner);
    EXPECT_EQ(outcome.category, f.expected)
        << f.name << ": got " << harness::to_string(outcome.category) << " (" << outcome.detail
        << ")";
    EXPECT_EQ(runner.calls(), f.rec.method == Method::kPlan ? 0 : 1) << f.name;
    ++per_category[static_cast<std::size_t>(f.expected)];
  }
  EXPECT_EQ(fixtures.size(), 12u);
  EXPECT_EQ(per_category, (std::array<int, 4>{3, 3, 3, 3}));
}

TEST(Acceptance, ComplexityAndBuckets) {
  EXPECT_EQ(complexity(Problem(testing::appendix_calendar())), 7);
  EXPECT_EQ(complexity(Problem(testing::appendix_trip())), 7);
  EXPECT_EQ(complexity(Problem(testing::appendix_meeting())), 19);
  EXPECT_EQ(complexity(compile(testing::appendix_meeting())), 19);

  std::vector<int> values(100);
  for (int i = 0; i < 100; ++i) values[static_cast<std::size_t>(i)] = (i * 37) % 100;
  const auto buckets = assign_buckets(values, harness::kComplexityBuckets);
  std::array<int, 5> sizes{};
  for (int b : buckets) ++sizes[static_cast<std::size_t>(b)];
  EXPECT_EQ(sizes, (std::array<int, 5>{20, 20, 20, 20, 20}));

  std::vector<harness::ScoredRecord> rows;
  std::map<std::string, int> cx;
  for (int i = 0; i < 100; ++i) {
    const std::string id = "r" + std::to_string(i);
    rows.push_back({id, "m", Task::kTrip, harness::Method::kPlan, std::nullopt, Category::kCorrect});
    cx[id] = values[static_cast<std::size_t>(i)];
  }
  const auto report = harness::aggregate(rows, cx);
  ASSERT_EQ(report.groups.size(), 1u);
  ASSERT_EQ(report.groups[0].buckets.size(), 5u);
  for (const auto& b : report.groups[0].buckets) EXPECT_EQ(b.stats.records, 20u);
}

TEST(Acceptance, HardcodeDetector) {
  const auto hard =
      harness::detect_hardcoding(testing::data_text("programs/hardcoded_trip.py"), kTripGold);
  EXPECT_TRUE(hard.suspected);
  const auto loop = harness::detect_hardcoding(
      testing::data_text("programs/loop_calendar.py"),
      Plan(CalendarPlan{Weekday::kMonday, Interval(600, 660)}));
  EXPECT_FALSE(loop.suspected);
}

// ---------------------------------------------------------------------------

class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const auto it = kLabels.find(info.name());
    const std::string label = it == kLabels.end() ? info.name() : it->second;
    std::cout << (info.result()->Passed() ? "PASS" : "FAIL") << "  " << label << std::endl;
  }

 private:
  const std::map<std::string, std::string> kLabels = {
      {"CalendarGolden", "calendar golden instance"},
      {"TripGolden", "trip golden instance"},
      {"MeetingGolden", "meeting golden instance"},
      {"OracleEquivalence", "solver agrees with exhaustive oracles"},
      {"WitnessesAndMutations", "witnesses verify and mutations are caught"},
      {"OutcomeTaxonomy", "outcome taxonomy fixtures"},
      {"ComplexityAndBuckets", "complexity counts and quantile buckets"},
      {"HardcodeDetector", "hardcoded-answer detector"},
  };
};

}  // namespace
}  // namespace natplan

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new natplan::CriterionPrinter);
  return RUN_ALL_TESTS();
}

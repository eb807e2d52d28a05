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

#include <random>
#include <sstream>

#include "natplan/harness/report.hpp"
#include "support.hpp"

namespace natplan::harness {
namespace {

ScoredRecord row(std::string id, Category c, std::optional<long long> tokens = std::nullopt,
                 std::string model = "m", Method method = Method::kPlan) {
  return {std::move(id), std::move(model), Task::kTrip, method, tokens, c};
}

TEST(Aggregate, GroupsByModelTaskMethod) {
  std::vector<ScoredRecord> rows = {row("a", Category::kCorrect, 10), row("b", Category::kError, 20),
                                    row("c", Category::kCorrect, std::nullopt, "n"),
                                    row("d", Category::kNoPlan, std::nullopt, "m", Method::kSolverCode)};
  std::map<std::string, int> cx = {{"a", 3}, {"b", 4}, {"c", 5}, {"d", 6}};
  auto report = aggregate(rows, cx);
  ASSERT_EQ(report.groups.size(), 3u);
  const auto& g = report.groups[0];
  EXPECT_EQ(g.model, "m");
  EXPECT_EQ(g.method, Method::kPlan);
  EXPECT_EQ(g.overall.records, 2u);
  EXPECT_DOUBLE_EQ(g.overall.accuracy(), 0.5);
  EXPECT_DOUBLE_EQ(*g.overall.mean_reasoning_tokens, 15.0);
  EXPECT_FALSE(report.groups[2].overall.mean_reasoning_tokens.has_value());
}

TEST(Aggregate, HundredRecordsFillFiveBuckets) {
  std::vector<ScoredRecord> rows;
  std::map<std::string, int> cx;
  for (int i = 0; i < 100; ++i) {
    const std::string id = "r" + std::to_string(i);
    rows.push_back(row(id, i % 4 == 0 ? Category::kCorrect : Category::kWrongPlan));
    cx[id] = i;
  }
  auto report = aggregate(rows, cx);
  ASSERT_EQ(report.groups.size(), 1u);
  const auto& buckets = report.groups[0].buckets;
  ASSERT_EQ(buckets.size(), 5u);
  for (int b = 0; b < 5; ++b) {
    EXPECT_EQ(buckets[static_cast<std::size_t>(b)].stats.records, 20u);
    EXPECT_EQ(buckets[static_cast<std::size_t>(b)].complexity_lo, 20 * b);
    EXPECT_EQ(buckets[static_cast<std::size_t>(b)].complexity_hi, 20 * b + 19);
  }
}

TEST(Aggregate, IndependentOfInputOrder) {
  std::vector<ScoredRecord> rows;
  std::map<std::string, int> cx;
  for (int i = 0; i < 37; ++i) {
    const std::string id = "r" + std::to_string(i);
    rows.push_back(row(id, static_cast<Category>(i % 4)));
    cx[id] = i % 5;
  }
  std::stringstream first, second;
  write_csv(aggregate(rows, cx), first);
  std::shuffle(rows.begin(), rows.end(), std::mt19937(3));
  write_csv(aggregate(rows, cx), second);
  EXPECT_EQ(first.str(), second.str());
}

TEST(Aggregate, SmallGroupsKeepOnlyNonEmptyBuckets) {
  auto report = aggregate({row("a", Category::kCorrect), row("b", Category::kCorrect)},
                          {{"a", 1}, {"b", 2}});
  EXPECT_EQ(report.groups[0].buckets.size(), 2u);
}

TEST(Aggregate, MissingComplexity) {
  try {
    aggregate({row("a", Category::kCorrect)}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingComplexity);
    EXPECT_EQ(e.subject(), "a");
  }
}

TEST(WriteCsv, HeaderAndRows) {
  auto report = aggregate({row("a", Category::kCorrect, 8, "gpt, big")}, {{"a", 4}});
  std::ostringstream out;
  write_csv(report, out);
  EXPECT_EQ(out.str(),
            "model,task,method,bucket,complexity_lo,complexity_hi,records,accuracy,error,no_plan,"
            "wrong_plan,correct,mean_reasoning_tokens\n"
            "\"gpt, big\",trip,plan,0,4,4,1,1.0000,0,0,0,1,8.0\n");
}

TEST(WriteMarkdown, OneRowPerGroup) {
  auto report = aggregate({row("a", Category::kCorrect), row("b", Category::kNoPlan)},
                          {{"a", 4}, {"b", 9}});
  std::ostringstream out;
  write_markdown(report, out);
  const std::string md = out.str();
  EXPECT_NE(md.find("| m | trip | plan | 2 | 0.500 | 0 | 1 | 0 | 1 | - | 4-4: 1.00, 9-9: 0.00 |"),
            std::string::npos)
      << md;
}

TEST(OutcomeLines, RoundTrip) {
  EvalRecord r;
  r.id = "x1";
  r.task = Task::kMeeting;
  r.method = Method::kNativeCode;
  r.model_name = "m";
  r.reasoning_token_count = 99;
  Outcome o{Category::kWrongPlan, "d", {}, std::nullopt};
  std::stringstream io;
  io << outcome_line(r, o, 19).dump() << "\n\n";
  auto [rows, cx] = read_outcome_lines(io);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].id, "x1");
  EXPECT_EQ(rows[0].category, Category::kWrongPlan);
  EXPECT_EQ(rows[0].method, Method::kNativeCode);
  EXPECT_EQ(rows[0].reasoning_token_count, 99);
  EXPECT_EQ(cx.at("x1"), 19);
}

TEST(OutcomeLines, BadLinesAreMalformed) {
  for (const char* text : {"nope", R"({"id": "a"})",
                           R"({"id": "a", "model_name": "m", "task": "trip", "method": "plan", "category": "Meh"})"}) {
    std::istringstream in(text);
    try {
      read_outcome_lines(in);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
      EXPECT_EQ(e.line(), 1u);
    }
  }
}

}  // namespace
}  // namespace natplan::harness

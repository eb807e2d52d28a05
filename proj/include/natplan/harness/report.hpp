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

// Aggregation of evaluated records into per (model, task, method) accuracy,
// outcome histograms, complexity-bucket accuracy and mean reasoning tokens.

#ifndef NATPLAN_HARNESS_REPORT_HPP_
#define NATPLAN_HARNESS_REPORT_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "natplan/constraints.hpp"
#include "natplan/harness/evaluate.hpp"
#include "natplan/harness/record.hpp"

namespace natplan::harness {

inline constexpr int kComplexityBuckets = 5;

struct Stats {
  std::size_t records = 0;
  std::array<std::size_t, 4> histogram{};  // indexed by Category
  std::optional<double> mean_reasoning_tokens;

  std::size_t count(Category c) const { return histogram[static_cast<std::size_t>(c)]; }
  double accuracy() const {
    return records ? static_cast<double>(count(Category::kCorrect)) / static_cast<double>(records)
                   : 0.0;
  }
};

struct BucketStats {
  int bucket = 0;
  int complexity_lo = 0;
  int complexity_hi = 0;
  Stats stats;
};

struct GroupReport {
  std::string model;
  Task task;
  Method method;
  Stats overall;
  std::vector<BucketStats> buckets;  // non-empty buckets only, ascending
};

struct Report {
  std::vector<GroupReport> groups;
};

// The unit the report folds over: record metadata plus its outcome category.
struct ScoredRecord {
  std::string id;
  std::string model;
  Task task;
  Method method;
  std::optional<long long> reasoning_token_count;
  Category category;
};

namespace report_detail {

inline Stats stats_of(const std::vector<const ScoredRecord*>& rows) {
  Stats s;
  long double tokens = 0;
  std::size_t with_tokens = 0;
  for (const auto* r : rows) {
    ++s.records;
    ++s.histogram[static_cast<std::size_t>(r->category)];
    if (r->reasoning_token_count) {
      tokens += static_cast<long double>(*r->reasoning_token_count);
      ++with_tokens;
    }
  }
  if (with_tokens) s.mean_reasoning_tokens = static_cast<double>(tokens / with_tokens);
  return s;
}

inline std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace report_detail

// Buckets are rank-based within each group; ties in complexity are ordered by
// record id so the result does not depend on input order.
inline Report aggregate(const std::vector<ScoredRecord>& rows,
                        const std::map<std::string, int>& complexities) {
  using Key = std::tuple<std::string, Task, Method>;
  std::map<Key, std::vector<const ScoredRecord*>> groups;
  for (const auto& r : rows) {
    if (!complexities.count(r.id)) {
      throw Error(ErrorCode::kMissingComplexity, r.id, "no complexity for record '" + r.id + "'");
    }
    groups[{r.model, r.task, r.method}].push_back(&r);
  }

  Report report;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [&](const ScoredRecord* a, const ScoredRecord* b) {
      return std::pair(complexities.at(a->id), a->id) < std::pair(complexities.at(b->id), b->id);
    });
    GroupReport g{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                  report_detail::stats_of(members), {}};

    std::vector<int> values;
    for (const auto* r : members) values.push_back(complexities.at(r->id));
    const auto buckets = assign_buckets(values, kComplexityBuckets);
    for (int b = 0; b < kComplexityBuckets; ++b) {
      std::vector<const ScoredRecord*> in_bucket;
      BucketStats bs;
      bs.bucket = b;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (buckets[i] != b) continue;
        if (in_bucket.empty()) bs.complexity_lo = values[i];
        bs.complexity_hi = values[i];
        in_bucket.push_back(members[i]);
      }
      if (in_bucket.empty()) continue;
      bs.stats = report_detail::stats_of(in_bucket);
      g.buckets.push_back(bs);
    }
    report.groups.push_back(std::move(g));
  }
  return report;
}

inline Report aggregate(const std::vector<std::pair<EvalRecord, Outcome>>& outcomes,
                        const std::map<std::string, int>& complexities) {
  std::vector<ScoredRecord> rows;
  rows.reserve(outcomes.size());
  for (const auto& [record, outcome] : outcomes) {
    rows.push_back({record.id, record.model_name, record.task, record.method,
                    record.reasoning_token_count, outcome.category});
  }
  return aggregate(rows, complexities);
}

// One row per model x task x method x bucket.
inline void write_csv(const Report& report, std::ostream& out) {
  using report_detail::csv_field;
  using report_detail::fixed;
  out << "model,task,method,bucket,complexity_lo,complexity_hi,records,accuracy,"
         "error,no_plan,wrong_plan,correct,mean_reasoning_tokens\n";
  for (const auto& g : report.groups) {
    for (const auto& b : g.buckets) {
      const Stats& s = b.stats;
      out << csv_field(g.model) << ',' << to_string(g.task) << ',' << to_string(g.method) << ','
          << b.bucket << ',' << b.complexity_lo << ',' << b.complexity_hi << ',' << s.records
          << ',' << fixed(s.accuracy()) << ',' << s.count(Category::kError) << ','
          << s.count(Category::kNoPlan) << ',' << s.count(Category::kWrongPlan) << ','
          << s.count(Category::kCorrect) << ','
          << (s.mean_reasoning_tokens ? fixed(*s.mean_reasoning_tokens, 1) : "") << '\n';
    }
  }
}

inline void write_markdown(const Report& report, std::ostream& out) {
  using report_detail::fixed;
  out << "| model | task | method | records | accuracy | Error | NoPlan | WrongPlan | Correct "
         "| mean reasoning tokens | accuracy by complexity bucket |\n";
  out << "|---|---|---|---:|---:|---:|---:|---:|---:|---:|---|\n";
  for (const auto& g : report.groups) {
    const Stats& s = g.overall;
    std::string by_bucket;
    for (const auto& b : g.buckets) {
      if (!by_bucket.empty()) by_bucket += ", ";
      by_bucket += std::to_string(b.complexity_lo) + "-" + std::to_string(b.complexity_hi) +
                   ": " + fixed(b.stats.accuracy(), 2);
    }
    out << "| " << g.model << " | " << to_string(g.task) << " | " << to_string(g.method)
        << " | " << s.records << " | " << fixed(s.accuracy(), 3) << " | "
        << s.count(Category::kError) << " | " << s.count(Category::kNoPlan) << " | "
        << s.count(Category::kWrongPlan) << " | " << s.count(Category::kCorrect) << " | "
        << (s.mean_reasoning_tokens ? fixed(*s.mean_reasoning_tokens, 1) : "-") << " | "
        << by_bucket << " |\n";
  }
}

// Outcome dump line: record metadata, complexity and the outcome.
inline Json outcome_line(const EvalRecord& record, const Outcome& outcome, int complexity) {
  Json j = to_json(outcome);
  j["id"] = record.id;
  j["model_name"] = record.model_name;
  j["task"] = std::string(to_string(record.task));
  j["method"] = std::string(to_string(record.method));
  j["reasoning_token_count"] =
      record.reasoning_token_count ? Json(*record.reasoning_token_count) : Json();
  j["complexity"] = complexity;
  return j;
}

// Reads an outcome dump back into report rows and complexities.
inline std::pair<std::vector<ScoredRecord>, std::map<std::string, int>> read_outcome_lines(
    std::istream& in) {
  std::vector<ScoredRecord> rows;
  std::map<std::string, int> complexities;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedRecord, "line " + std::to_string(line),
                   "outcome on line " + std::to_string(line) + ": " + why, line);
    };
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw bad("not a JSON object");
    try {
      ScoredRecord r;
      r.id = j.at("id").get<std::string>();
      r.model = j.at("model_name").get<std::string>();
      r.task = parse_task(j.at("task").get<std::string>());
      auto method = method_from_name(j.at("method").get<std::string>());
      if (!method) throw bad("unknown method");
      r.method = *method;
      auto category = category_from_name(j.at("category").get<std::string>());
      if (!category) throw bad("unknown category");
      r.category = *category;
      if (j.contains("reasoning_token_count") && !j["reasoning_token_count"].is_null()) {
        r.reasoning_token_count = j["reasoning_token_count"].get<long long>();
      }
      if (j.contains("complexity") && !j["complexity"].is_null()) {
        complexities[r.id] = j["complexity"].get<int>();
      }
      rows.push_back(std::move(r));
    } catch (const Json::exception& e) {
      throw bad(e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kMalformedRecord) throw;
      throw bad(e.what());
    }
  }
  return {std::move(rows), std::move(complexities)};
}

}  // namespace natplan::harness

#endif  // NATPLAN_HARNESS_REPORT_HPP_

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

// Outcome classification:
//
//   runner syntax_error / runtime_error / timeout   -> Error
//   no plan JSON in the output, or an undecodable one -> NoPlan
//   plan violating a constraint                     -> WrongPlan
//   otherwise                                       -> Correct
//
// Plan records are classified from their text and never reach the runner.

#ifndef NATPLAN_HARNESS_EVALUATE_HPP_
#define NATPLAN_HARNESS_EVALUATE_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "natplan/constraints.hpp"
#include "natplan/domain.hpp"
#include "natplan/extract.hpp"
#include "natplan/harness/hardcode.hpp"
#include "natplan/harness/record.hpp"
#include "natplan/harness/runner.hpp"
#include "natplan/serialize.hpp"

namespace natplan::harness {

enum class Category { kError, kNoPlan, kWrongPlan, kCorrect };
inline constexpr std::array<Category, 4> kCategories = {Category::kError, Category::kNoPlan,
                                                        Category::kWrongPlan, Category::kCorrect};

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::kError: return "Error";
    case Category::kNoPlan: return "NoPlan";
    case Category::kWrongPlan: return "WrongPlan";
    case Category::kCorrect: return "Correct";
  }
  return "?";
}

inline std::optional<Category> category_from_name(std::string_view name) {
  for (auto c : kCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

struct Outcome {
  Category category = Category::kNoPlan;
  std::string detail;
  std::vector<Violation> violations;       // empty unless WrongPlan
  std::optional<HardcodeVerdict> hardcode;  // programs that produced a plan
};

inline Json to_json(const Outcome& o) {
  Json violations = Json::array();
  for (const auto& v : o.violations) {
    violations.push_back({{"id", v.constraint_id}, {"explanation", v.explanation}});
  }
  Json j = {{"category", std::string(to_string(o.category))},
            {"detail", o.detail},
            {"violations", std::move(violations)}};
  j["hardcode"] = o.hardcode ? to_json(*o.hardcode) : Json();
  return j;
}

struct EvalOptions {
  int timeout_ms = kDefaultTimeoutMs;
  int memory_mb = kDefaultMemoryMb;
  VerifyOptions verify;
};

namespace evaluate_detail {

struct TextVerdict {
  Outcome outcome;
  std::optional<Plan> plan;
};

inline TextVerdict classify_text(std::string_view text, const Problem& problem,
                                 const VerifyOptions& options) {
  const Task task = task_of(problem);
  ExtractResult extracted = extract_plan(text, task);
  if (extracted.status != ExtractStatus::kPlan) {
    return {{Category::kNoPlan, extracted.detail, {}, std::nullopt}, std::nullopt};
  }
  VerificationReport report = verify(problem, *extracted.plan, options);
  if (report.verdict == Verdict::kCorrect) {
    return {{Category::kCorrect, "", {}, std::nullopt}, std::move(extracted.plan)};
  }
  std::string ids;
  for (const auto& v : report.violations) ids += (ids.empty() ? "" : ", ") + v.constraint_id;
  return {{Category::kWrongPlan, "violated: " + ids, std::move(report.violations), std::nullopt},
          std::move(extracted.plan)};
}

inline std::string tail(const std::string& text, std::size_t n = 400) {
  return text.size() <= n ? text : "..." + text.substr(text.size() - n);
}

}  // namespace evaluate_detail

inline Outcome classify_output(const RunnerResponse& response, const Problem& problem,
                               const VerifyOptions& options = {}) {
  if (response.status != RunStatus::kOk) {
    std::string detail(to_string(response.status));
    if (!response.stderr_text.empty()) {
      detail += ": " + evaluate_detail::tail(response.stderr_text);
    }
    return {Category::kError, detail, {}, std::nullopt};
  }
  return evaluate_detail::classify_text(response.stdout_text, problem, options).outcome;
}

inline Outcome evaluate_record(const EvalRecord& record, const Problem& problem, Runner& runner,
                               const EvalOptions& options = {}) {
  if (task_of(problem) != record.task) {
    throw Error(ErrorCode::kProblemResolutionFailed, record.id,
                "record '" + record.id + "' is a " + std::string(to_string(record.task)) +
                    " record but its problem is " + std::string(to_string(task_of(problem))));
  }
  if (record.method == Method::kPlan) {
    return evaluate_detail::classify_text(record.output_text, problem, options.verify).outcome;
  }
  RunnerRequest request{record.output_text, options.timeout_ms, options.memory_mb,
                        record.method == Method::kNativeCode ? RunMode::kNativeCode
                                                             : RunMode::kSolverCode};
  RunnerResponse response = runner.run(request);
  if (response.status != RunStatus::kOk) return classify_output(response, problem, options.verify);
  auto verdict = evaluate_detail::classify_text(response.stdout_text, problem, options.verify);
  if (verdict.plan) verdict.outcome.hardcode = detect_hardcoding(record.output_text, *verdict.plan);
  return verdict.outcome;
}

inline Outcome evaluate_record(const EvalRecord& record,
                               const std::filesystem::path& problems_dir, Runner& runner,
                               const EvalOptions& options = {}) {
  return evaluate_record(record, resolve_problem(record, problems_dir), runner, options);
}

// Evaluates `records` on up to `workers` threads. Results are in input order.
// The first exception raised by any record is rethrown after all workers stop.
template <class Fn>
std::vector<Outcome> evaluate_parallel(std::size_t count, unsigned workers, Fn&& evaluate_one) {
  std::vector<Outcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
      try {
        outcomes[i] = evaluate_one(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return outcomes;
}

inline std::vector<Outcome> evaluate_batch(const std::vector<EvalRecord>& records,
                                           const std::vector<Problem>& problems, Runner& runner,
                                           unsigned workers, const EvalOptions& options = {}) {
  require(records.size() == problems.size(), "evaluate.aligned",
          "one problem per record is required");
  return evaluate_parallel(records.size(), workers, [&](std::size_t i) {
    return evaluate_record(records[i], problems[i], runner, options);
  });
}

}  // namespace natplan::harness

#endif  // NATPLAN_HARNESS_EVALUATE_HPP_

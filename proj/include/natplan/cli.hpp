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

// The natplan command line. dispatch() is the whole program; main() only
// forwards argv.
//
// Exit codes: 0 success or Correct, 1 WrongPlan / no plan / unsatisfiable,
// 2 usage or input error, 3 internal error.

#ifndef NATPLAN_CLI_HPP_
#define NATPLAN_CLI_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "natplan/constraints.hpp"
#include "natplan/domain.hpp"
#include "natplan/emit.hpp"
#include "natplan/error.hpp"
#include "natplan/extract.hpp"
#include "natplan/generator.hpp"
#include "natplan/harness/evaluate.hpp"
#include "natplan/harness/record.hpp"
#include "natplan/harness/report.hpp"
#include "natplan/harness/runner.hpp"
#include "natplan/parser.hpp"
#include "natplan/serialize.hpp"
#include "natplan/solver.hpp"

namespace natplan::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInternal = 3 };

inline constexpr const char* kRunnerEnv = "NATPLAN_RUNNER";

namespace cli_detail {

struct Diagnostics {
  std::ostream& err;
  bool quiet = false;
  void note(const std::string& message) const {
    if (!quiet) err << message << '\n';
  }
};

inline Task task_flag(const std::string& name) { return parse_task(name); }

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, path.string(), "cannot write " + path.string());
  }
  return out;
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kRunnerFailure:
    case ErrorCode::kSearchBudgetExceeded:
      return kInternal;
    default:
      return kUsage;
  }
}

template <class PlanT>
int print_solve(const SolveOutcome<PlanT>& outcome, std::ostream& out,
                const Diagnostics& diag) {
  out << to_json(outcome).dump(2) << '\n';
  if (outcome.status == SolveStatus::kSatisfiable) return kOk;
  diag.note("solve: " + std::string(to_string(outcome.status)));
  return kFailed;
}

inline std::pair<Problem, Plan> generate(Task task, const GenParams& params) {
  switch (task) {
    case Task::kCalendar: {
      auto g = gen_calendar(params);
      return {std::move(g.problem), std::move(g.witness)};
    }
    case Task::kTrip: {
      auto g = gen_trip(params);
      return {std::move(g.problem), std::move(g.witness)};
    }
    case Task::kMeeting:
      break;
  }
  auto g = gen_meeting(params);
  return {std::move(g.problem), std::move(g.witness)};
}

}  // namespace cli_detail

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Natural-language planning: parse, solve, verify, generate and evaluate"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress diagnostics on stderr");

  const std::vector<std::string> kTasks = {"calendar", "trip", "meeting"};

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "prompt text -> Problem JSON");
  std::string parse_task_name;
  std::string parse_input;
  parse_cmd->add_option("--task", parse_task_name)->required()->check(CLI::IsMember(kTasks));
  parse_cmd->add_option("--input", parse_input, "prompt text file")->required()
      ->check(CLI::ExistingFile);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Problem -> plan and search statistics");
  std::string solve_task_name;
  std::string solve_problem;
  int step_minutes = 30;
  SearchLimits limits;
  solve_cmd->add_option("--task", solve_task_name)->required()->check(CLI::IsMember(kTasks));
  solve_cmd->add_option("--problem", solve_problem, "Problem JSON or prompt text (*.txt)")
      ->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--step-minutes", step_minutes, "calendar start-time grid")
      ->check(CLI::IsMember({1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
  solve_cmd->add_option("--max-nodes", limits.max_nodes)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-wall-ms", limits.max_wall_ms)->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Problem + plan -> verification report");
  std::string verify_task_name;
  std::string verify_problem;
  std::string verify_plan;
  bool soft_preferences = false;
  verify_cmd->add_option("--task", verify_task_name)->required()->check(CLI::IsMember(kTasks));
  verify_cmd->add_option("--problem", verify_problem)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--plan", verify_plan, "plan JSON, or any text ending in one")
      ->required()->check(CLI::ExistingFile);
  verify_cmd->add_flag("--soft-preferences", soft_preferences,
                       "do not fail plans that only break stated preferences");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write seeded instances with witness plans");
  std::string gen_task_name;
  std::string gen_out;
  int gen_count = 1;
  GenParams gen;
  std::optional<int> target;
  gen_cmd->add_option("--task", gen_task_name)->required()->check(CLI::IsMember(kTasks));
  gen_cmd->add_option("--out", gen_out, "output directory")->required();
  gen_cmd->add_option("--seed", gen.seed, "first seed");
  gen_cmd->add_option("--count", gen_count, "instances, one per consecutive seed")
      ->check(CLI::Range(1, 100000));
  gen_cmd->add_option("--participants", gen.calendar.participants);
  gen_cmd->add_option("--blocks", gen.calendar.blocks_per_participant);
  gen_cmd->add_option("--days", gen.calendar.days);
  gen_cmd->add_option("--preferences", gen.calendar.preferences);
  gen_cmd->add_option("--duration", gen.calendar.duration_minutes);
  gen_cmd->add_option("--cities", gen.trip.cities);
  gen_cmd->add_option("--total-days", gen.trip.total_days);
  gen_cmd->add_option("--edge-density", gen.trip.edge_density);
  gen_cmd->add_option("--events", gen.trip.events);
  gen_cmd->add_option("--friends", gen.meeting.friends);
  gen_cmd->add_option("--locations", gen.meeting.locations);
  gen_cmd->add_option("--target-constraints", target);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "records JSONL -> outcomes JSONL");
  std::string records_path;
  std::string problems_dir = ".";
  std::string outcomes_path;
  std::string runner_path;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  harness::EvalOptions eval_options;
  eval_cmd->add_option("--records", records_path)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--problems", problems_dir, "directory for relative problem_ref paths")
      ->check(CLI::ExistingDirectory);
  eval_cmd->add_option("--out", outcomes_path, "outcomes JSONL (default stdout)");
  eval_cmd->add_option("--runner", runner_path,
                       std::string("runner executable (default $") + kRunnerEnv + ")");
  eval_cmd->add_option("--workers", workers)->check(CLI::Range(1u, 1024u));
  eval_cmd->add_option("--timeout-ms", eval_options.timeout_ms)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--memory-mb", eval_options.memory_mb)->check(CLI::PositiveNumber);

  // report
  auto* report_cmd = app.add_subcommand("report", "outcomes JSONL -> CSV and markdown");
  std::string report_input;
  std::string csv_path;
  std::string markdown_path;
  report_cmd->add_option("--outcomes", report_input)->required()->check(CLI::ExistingFile);
  report_cmd->add_option("--csv", csv_path, "CSV output (default: not written)");
  report_cmd->add_option("--markdown", markdown_path, "markdown output (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Diagnostics diag{err, quiet};
  try {
    if (*parse_cmd) {
      const Task task = task_flag(parse_task_name);
      auto parsed = parse_problem(task, harness::read_file(parse_input));
      for (const auto& w : parsed.diagnostics.warnings) diag.note("warning: " + w.message);
      for (const auto& s : parsed.diagnostics.unrecognized_sentences) {
        diag.note("ignored: " + s);
      }
      out << to_json(parsed.problem).dump(2) << '\n';
      return kOk;
    }

    if (*solve_cmd) {
      const Task task = task_flag(solve_task_name);
      const Problem problem = harness::load_problem(task, solve_problem);
      if (const auto* c = std::get_if<CalendarProblem>(&problem)) {
        return print_solve(solve_calendar(*c, step_minutes, limits), out, diag);
      }
      if (const auto* t = std::get_if<TripProblem>(&problem)) {
        return print_solve(solve_trip(*t, limits), out, diag);
      }
      return print_solve(solve_meeting(std::get<MeetingProblem>(problem), limits), out, diag);
    }

    if (*verify_cmd) {
      const Task task = task_flag(verify_task_name);
      const Problem problem = harness::load_problem(task, verify_problem);
      ExtractResult extracted = extract_plan(harness::read_file(verify_plan), task);
      if (extracted.status != ExtractStatus::kPlan) {
        diag.note("verify: no plan: " + extracted.detail);
        return kFailed;
      }
      VerifyOptions options;
      options.preferences = soft_preferences ? PreferenceMode::kSoft : PreferenceMode::kHard;
      const VerificationReport report = verify(problem, *extracted.plan, options);
      out << to_json(report).dump(2) << '\n';
      for (const auto& v : report.violations) diag.note(v.constraint_id + ": " + v.explanation);
      return report.verdict == Verdict::kCorrect ? kOk : kFailed;
    }

    if (*gen_cmd) {
      const Task task = task_flag(gen_task_name);
      gen.target_constraint_count = target;
      std::filesystem::create_directories(gen_out);
      Json index = Json::array();
      for (int i = 0; i < gen_count; ++i) {
        GenParams params = gen;
        params.seed = gen.seed + static_cast<std::uint64_t>(i);
        auto [problem, witness] = generate(task, params);
        const std::string stem = std::string(to_string(task)) + "-" + std::to_string(params.seed);
        const std::filesystem::path dir(gen_out);
        open_output(dir / (stem + ".json")) << to_json(problem).dump(2) << '\n';
        open_output(dir / (stem + ".txt")) << emit_problem(problem) << '\n';
        open_output(dir / (stem + "-witness.json")) << to_json(witness).dump(2) << '\n';
        index.push_back({{"id", stem},
                         {"seed", params.seed},
                         {"problem", stem + ".json"},
                         {"text", stem + ".txt"},
                         {"witness", stem + "-witness.json"},
                         {"complexity", complexity(problem)}});
      }
      out << index.dump(2) << '\n';
      return kOk;
    }

    if (*eval_cmd) {
      auto records = harness::load_records(records_path);
      std::vector<Problem> problems;
      std::vector<int> complexities;
      bool needs_runner = false;
      for (const auto& r : records) {
        problems.push_back(harness::resolve_problem(r, problems_dir));
        complexities.push_back(complexity(problems.back()));
        needs_runner = needs_runner || r.method != harness::Method::kPlan;
      }
      std::unique_ptr<harness::Runner> runner;
      if (runner_path.empty()) {
        if (const char* env = std::getenv(kRunnerEnv)) runner_path = env;
      }
      if (needs_runner) {
        if (runner_path.empty()) {
          err << "eval: program records need a runner (--runner or $" << kRunnerEnv << ")\n";
          return kUsage;
        }
        runner = std::make_unique<harness::SubprocessRunner>(runner_path);
      }
      struct NoRunner final : harness::Runner {
        harness::RunnerResponse run(const harness::RunnerRequest&) override {
          throw Error(ErrorCode::kRunnerFailure, "runner", "no runner configured");
        }
      } no_runner;
      harness::Runner& active = runner ? *runner : static_cast<harness::Runner&>(no_runner);
      const auto outcomes =
          harness::evaluate_batch(records, problems, active, workers, eval_options);

      std::ofstream file;
      if (!outcomes_path.empty()) file = open_output(outcomes_path);
      std::ostream& sink = outcomes_path.empty() ? out : file;
      std::map<std::string, std::size_t> tally;
      for (std::size_t i = 0; i < records.size(); ++i) {
        sink << harness::outcome_line(records[i], outcomes[i], complexities[i]).dump() << '\n';
        ++tally[std::string(to_string(outcomes[i].category))];
      }
      std::string summary = "eval: " + std::to_string(records.size()) + " records";
      for (const auto& [name, n] : tally) summary += ", " + name + " " + std::to_string(n);
      diag.note(summary);
      return kOk;
    }

    if (*report_cmd) {
      std::ifstream in(report_input);
      auto [rows, complexities] = harness::read_outcome_lines(in);
      const harness::Report report = harness::aggregate(rows, complexities);
      if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        harness::write_csv(report, csv);
      }
      if (!markdown_path.empty()) {
        auto md = open_output(markdown_path);
        harness::write_markdown(report, md);
      } else {
        harness::write_markdown(report, out);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace natplan::cli

#endif  // NATPLAN_CLI_HPP_

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

// Evaluation records: one candidate output per JSON line.
//
//   {"id": "cal-17-plan", "task": "calendar", "method": "plan",
//    "model_name": "m", "output_text": "...", "reasoning_token_count": 812,
//    "problem_ref": "cal-17.json"}
//
// method is one of plan, native_code, solver_code. problem_ref is either a
// path (relative paths resolve against the problems directory; *.txt holds
// prompt text, anything else Problem JSON) or an inline Problem JSON object.

#ifndef NATPLAN_HARNESS_RECORD_HPP_
#define NATPLAN_HARNESS_RECORD_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/parser.hpp"
#include "natplan/serialize.hpp"

namespace natplan::harness {

enum class Method { kPlan, kNativeCode, kSolverCode };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::kPlan: return "plan";
    case Method::kNativeCode: return "native_code";
    case Method::kSolverCode: return "solver_code";
  }
  return "?";
}

inline std::optional<Method> method_from_name(std::string_view name) {
  if (name == "plan" || name == "Plan") return Method::kPlan;
  if (name == "native_code" || name == "NativeCode" || name == "python") {
    return Method::kNativeCode;
  }
  if (name == "solver_code" || name == "SolverCode" || name == "z3") return Method::kSolverCode;
  return std::nullopt;
}

using ProblemRef = std::variant<std::filesystem::path, Json>;

struct EvalRecord {
  std::string id;
  Task task;
  Method method;
  std::string model_name;
  std::string output_text;
  std::optional<long long> reasoning_token_count;
  ProblemRef problem_ref;
};

inline Json to_json(const EvalRecord& r) {
  Json j = {{"id", r.id},
            {"task", std::string(to_string(r.task))},
            {"method", std::string(to_string(r.method))},
            {"model_name", r.model_name},
            {"output_text", r.output_text}};
  j["reasoning_token_count"] =
      r.reasoning_token_count ? Json(*r.reasoning_token_count) : Json();
  if (const auto* path = std::get_if<std::filesystem::path>(&r.problem_ref)) {
    j["problem_ref"] = path->generic_string();
  } else {
    j["problem_ref"] = std::get<Json>(r.problem_ref);
  }
  return j;
}

namespace record_detail {

[[noreturn]] inline void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kMalformedRecord, "line " + std::to_string(line),
              "record on line " + std::to_string(line) + ": " + why, line);
}

inline std::string text_field(const Json& j, const char* key, std::size_t line) {
  if (!j.contains(key) || !j[key].is_string()) {
    malformed(line, std::string("field '") + key + "' must be a string");
  }
  return j[key].get<std::string>();
}

}  // namespace record_detail

// Parses one JSON line; `line` is only used for error reporting.
inline EvalRecord record_from_json_line(std::string_view text, std::size_t line) {
  using record_detail::malformed;
  using record_detail::text_field;
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) malformed(line, "not a JSON object");

  EvalRecord r;
  r.id = text_field(j, "id", line);
  if (r.id.empty()) malformed(line, "empty id");
  try {
    r.task = parse_task(text_field(j, "task", line));
  } catch (const Error& e) {
    malformed(line, e.what());
  }
  auto method = method_from_name(text_field(j, "method", line));
  if (!method) malformed(line, "unknown method '" + j["method"].get<std::string>() + "'");
  r.method = *method;
  r.model_name = text_field(j, "model_name", line);
  r.output_text = text_field(j, "output_text", line);
  if (j.contains("reasoning_token_count") && !j["reasoning_token_count"].is_null()) {
    const Json& n = j["reasoning_token_count"];
    if (!n.is_number_integer() || n.get<long long>() < 0) {
      malformed(line, "reasoning_token_count must be a non-negative integer");
    }
    r.reasoning_token_count = n.get<long long>();
  }
  if (!j.contains("problem_ref")) malformed(line, "missing problem_ref");
  const Json& ref = j["problem_ref"];
  if (ref.is_string()) {
    r.problem_ref = std::filesystem::path(ref.get<std::string>());
  } else if (ref.is_object()) {
    r.problem_ref = ref;
  } else {
    malformed(line, "problem_ref must be a path or a Problem object");
  }
  return r;
}

// Blank lines are skipped; the whole batch is rejected on the first bad line.
inline std::vector<EvalRecord> read_records(std::istream& in) {
  std::vector<EvalRecord> records;
  std::set<std::string> ids;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    EvalRecord r = record_from_json_line(text, line);
    if (!ids.insert(r.id).second) record_detail::malformed(line, "duplicate id '" + r.id + "'");
    records.push_back(std::move(r));
  }
  return records;
}

inline std::vector<EvalRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, path.string(), "cannot open " + path.string());
  return read_records(in);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, path.string(), "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads a problem file: *.txt is prompt text, anything else Problem JSON.
inline Problem load_problem(Task task, const std::filesystem::path& path) {
  const std::string content = read_file(path);
  if (path.extension() == ".txt") return parse_problem(task, content).problem;
  Json j = Json::parse(content, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kInvalidArgument, path.string(), path.string() + " is not valid JSON");
  }
  return problem_from_json(task, j);
}

inline Problem resolve_problem(const EvalRecord& record,
                               const std::filesystem::path& problems_dir) {
  try {
    if (const auto* path = std::get_if<std::filesystem::path>(&record.problem_ref)) {
      return load_problem(record.task, path->is_absolute() ? *path : problems_dir / *path);
    }
    return problem_from_json(record.task, std::get<Json>(record.problem_ref));
  } catch (const Error& e) {
    throw Error(ErrorCode::kProblemResolutionFailed, record.id,
                "record '" + record.id + "': " + e.what());
  }
}

}  // namespace natplan::harness

#endif  // NATPLAN_HARNESS_RECORD_HPP_

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

#ifndef NATPLAN_EXTRACT_HPP_
#define NATPLAN_EXTRACT_HPP_

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/serialize.hpp"

namespace natplan {

enum class ExtractStatus { kPlan, kNoPlanFound, kMalformedPlan };

struct ExtractResult {
  ExtractStatus status;
  std::optional<Plan> plan;
  std::string detail;
};

namespace extract_detail {

struct Span {
  std::size_t begin;
  std::size_t end;  // one past the closing brace
};

// Every balanced {...} span, nested ones included, ordered by start offset.
// `truncated` is set when an object is opened but never closed.
inline std::vector<Span> object_spans(std::string_view text, bool& truncated) {
  std::vector<Span> spans;
  std::vector<std::size_t> open;
  bool in_string = false;
  truncated = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    // Quotes only delimit strings inside an object; prose apostrophes and
    // stray quotes outside JSON must not swallow the rest of the text.
    if (c == '"' && !open.empty()) {
      in_string = true;
    } else if (c == '{') {
      open.push_back(i);
    } else if (c == '}' && !open.empty()) {
      spans.push_back({open.back(), i + 1});
      open.pop_back();
    }
  }
  truncated = !open.empty();
  std::sort(spans.begin(), spans.end(),
            [](const Span& a, const Span& b) { return a.begin < b.begin; });
  return spans;
}

// Repairs `"key"value"` (a dropped colon and opening quote, as in
// `"time"13:30"`) and `"key" "value"` (a dropped colon).
inline std::string repair_missing_colons(const std::string& text) {
  static const std::regex kGlued(R"_(("[A-Za-z_]+")([^\s:,"{}\[\]][^"]*"))_");
  static const std::regex kSpaced(R"_(("[A-Za-z_]+")\s+("))_");
  std::string out = std::regex_replace(text, kGlued, "$1:\"$2");
  return std::regex_replace(out, kSpaced, "$1: $2");
}

inline std::optional<Json> parse_object(const std::string& candidate) {
  Json j = Json::parse(candidate, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    j = Json::parse(repair_missing_colons(candidate), nullptr, false);
  }
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

inline bool keys_match(Task task, const Json& j) {
  if (task == Task::kCalendar) return j.contains("start") && j.contains("end");
  return j.contains("itinerary");
}

}  // namespace extract_detail

// Decodes the plan from the last JSON object in `text` whose top-level keys
// fit the task ("start"/"end" for calendar, "itinerary" otherwise). Later
// objects win because reasoning output tends to contain earlier drafts.
// Never throws.
inline ExtractResult extract_plan(std::string_view text, Task task) {
  bool truncated = false;
  auto spans = extract_detail::object_spans(text, truncated);
  for (auto it = spans.rbegin(); it != spans.rend(); ++it) {
    auto j = extract_detail::parse_object(std::string(text.substr(it->begin, it->end - it->begin)));
    if (!j || !extract_detail::keys_match(task, *j)) continue;
    try {
      return {ExtractStatus::kPlan, plan_from_json(task, *j), ""};
    } catch (const Error& e) {
      return {ExtractStatus::kMalformedPlan, std::nullopt, e.what()};
    }
  }
  std::string detail = "no JSON object with the " + std::string(to_string(task)) +
                       " plan keys";
  if (truncated) detail += " (truncated JSON: an object is never closed)";
  return {ExtractStatus::kNoPlanFound, std::nullopt, detail};
}

}  // namespace natplan

#endif  // NATPLAN_EXTRACT_HPP_

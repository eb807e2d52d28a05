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

#ifndef NATPLAN_ERROR_HPP_
#define NATPLAN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace natplan {

enum class ErrorCode {
  kInvariantViolation,
  kInvalidArgument,
  kUnrecognizedTimeFormat,
  kUnconsumedConstraintSentence,
  kMissingDuration,
  kMissingTravelEntry,
  kDurationSumMismatch,
  kMalformedPlan,
  kPlanTaskMismatch,
  kEmptyInput,
  kInfeasibleParams,
  kMalformedRecord,
  kProblemResolutionFailed,
  kMissingComplexity,
  kSearchBudgetExceeded,
  kRunnerFailure,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnrecognizedTimeFormat: return "UnrecognizedTimeFormat";
    case ErrorCode::kUnconsumedConstraintSentence:
      return "UnconsumedConstraintSentence";
    case ErrorCode::kMissingDuration: return "MissingDuration";
    case ErrorCode::kMissingTravelEntry: return "MissingTravelEntry";
    case ErrorCode::kDurationSumMismatch: return "DurationSumMismatch";
    case ErrorCode::kMalformedPlan: return "MalformedPlan";
    case ErrorCode::kPlanTaskMismatch: return "PlanTaskMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kProblemResolutionFailed: return "ProblemResolutionFailed";
    case ErrorCode::kMissingComplexity: return "MissingComplexity";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kRunnerFailure: return "RunnerFailure";
  }
  return "Unknown";
}

// All recoverable failures in the library are reported as Error. `subject`
// names what was violated: an invariant name for validation failures, the
// offending sentence for parse failures, a record id for harness failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& message,
        std::size_t line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        subject_(std::move(subject)),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  // 1-based input line for record-level errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::string subject_;
  std::size_t line_;
};

inline void require(bool condition, std::string_view invariant,
                    const std::string& message) {
  if (!condition) {
    throw Error(ErrorCode::kInvariantViolation, std::string(invariant),
                std::string(invariant) + ": " + message);
  }
}

}  // namespace natplan

#endif  // NATPLAN_ERROR_HPP_

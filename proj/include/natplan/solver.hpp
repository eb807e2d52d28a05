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

// Exact solvers for the three tasks.
//
// Tie-breaking is total so every solve is deterministic:
//  - calendar: earliest weekday, then earliest start on the step grid;
//  - trip: depth-first over city orderings, branches in city-name order;
//  - meeting: branch and bound over friend orderings, branches in friend-name
//    order, keeping the first schedule that reaches the best count.
//
// Each solve is bounded by SearchLimits and reports kTimeout instead of
// running unbounded.

#ifndef NATPLAN_SOLVER_HPP_
#define NATPLAN_SOLVER_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/serialize.hpp"
#include "natplan/time.hpp"

namespace natplan {

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  std::int64_t max_wall_ms = 30'000;
};

enum class SolveStatus { kSatisfiable, kUnsatisfiable, kTimeout };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSatisfiable: return "satisfiable";
    case SolveStatus::kUnsatisfiable: return "unsatisfiable";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "?";
}

template <class PlanT>
struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnsatisfiable;
  std::optional<PlanT> plan;  // set iff status == kSatisfiable
  std::uint64_t explored_nodes = 0;
  std::int64_t wall_ms = 0;
};

template <class PlanT>
Json to_json(const SolveOutcome<PlanT>& outcome) {
  Json j = {{"status", std::string(to_string(outcome.status))},
            {"explored_nodes", outcome.explored_nodes},
            {"wall_ms", outcome.wall_ms}};
  j["plan"] = outcome.plan ? to_json(*outcome.plan) : Json();
  return j;
}

namespace solver_detail {

class Budget {
 public:
  explicit Budget(const SearchLimits& limits)
      : limits_(limits), started_(std::chrono::steady_clock::now()) {}

  // Counts one node; false once either limit is exhausted.
  bool tick() {
    ++nodes_;
    if (nodes_ > limits_.max_nodes) exhausted_ = true;
    if ((nodes_ & 1023) == 0 && elapsed_ms() > limits_.max_wall_ms) exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - started_)
        .count();
  }

 private:
  SearchLimits limits_;
  std::chrono::steady_clock::time_point started_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

template <class PlanT>
SolveOutcome<PlanT> finish(const Budget& budget, std::optional<PlanT> plan) {
  SolveOutcome<PlanT> out;
  out.explored_nodes = budget.nodes();
  out.wall_ms = budget.elapsed_ms();
  if (plan) {
    out.status = SolveStatus::kSatisfiable;
    out.plan = std::move(plan);
  } else {
    out.status = budget.exhausted() ? SolveStatus::kTimeout : SolveStatus::kUnsatisfiable;
  }
  return out;
}

}  // namespace solver_detail

// ---------------------------------------------------------------------------
// Calendar

// Scans candidate starts work_start, work_start + step, ... on each allowed
// weekday (Monday first) and returns the first slot that avoids every busy
// block and every stated preference.
inline SolveOutcome<CalendarPlan> solve_calendar(const CalendarProblem& problem,
                                                 int step_minutes = 30,
                                                 const SearchLimits& limits = {}) {
  if (step_minutes <= 0 || 60 % step_minutes != 0) {
    throw Error(ErrorCode::kInvalidArgument, "step_minutes",
                "step_minutes must divide 60, got " + std::to_string(step_minutes));
  }
  solver_detail::Budget budget(limits);
  std::vector<Weekday> days = problem.allowed_days();
  std::sort(days.begin(), days.end());
  days.erase(std::unique(days.begin(), days.end()), days.end());

  const int first = problem.work_window().start().minutes();
  const int last_start = problem.work_window().end().minutes() - problem.duration_minutes();
  for (Weekday day : days) {
    for (int start = first; start <= last_start; start += step_minutes) {
      if (!budget.tick()) return solver_detail::finish<CalendarPlan>(budget, std::nullopt);
      const Interval slot(start, start + problem.duration_minutes());
      auto clashes = [&](const DayInterval& d) {
        return d.day == day && overlaps(d.interval, slot);
      };
      bool free = std::none_of(problem.preferences().begin(), problem.preferences().end(),
                               clashes);
      for (const auto& who : problem.participants()) {
        if (!free) break;
        const auto& blocks = problem.busy_of(who);
        free = std::none_of(blocks.begin(), blocks.end(), clashes);
      }
      if (free) return solver_detail::finish(budget, std::optional(CalendarPlan{day, slot}));
    }
  }
  return solver_detail::finish<CalendarPlan>(budget, std::nullopt);
}

// ---------------------------------------------------------------------------
// Trip

// Each city is visited exactly once. Day ranges follow from the ordering: a
// city entered on day d with duration k occupies [d, d + k - 1] and the next
// city is entered on day d + k - 1 (the flight day counts for both).
inline SolveOutcome<TripPlan> solve_trip(const TripProblem& problem,
                                         const SearchLimits& limits = {}) {
  solver_detail::Budget budget(limits);
  std::vector<std::string> cities;
  for (const auto& [city, days] : problem.city_durations()) cities.push_back(city);

  std::vector<bool> used(cities.size(), false);
  std::vector<TripSegment> path;

  auto events_fit = [&](const TripSegment& seg) {
    for (const auto& e : problem.events()) {
      if (e.city == seg.city && !(seg.day_lo <= e.day_lo && e.day_hi <= seg.day_hi)) {
        return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto& self, int day) -> bool {
    if (path.size() == cities.size()) return true;
    for (std::size_t i = 0; i < cities.size(); ++i) {
      if (used[i]) continue;
      if (!budget.tick()) return false;
      if (!path.empty() && !problem.connected(path.back().city, cities[i])) continue;
      TripSegment seg{day, day + problem.city_durations().at(cities[i]) - 1, cities[i]};
      if (seg.day_hi > problem.total_days() || !events_fit(seg)) continue;
      used[i] = true;
      path.push_back(seg);
      if (self(self, seg.day_hi)) return true;
      if (budget.exhausted()) return false;
      path.pop_back();
      used[i] = false;
    }
    return false;
  };

  if (dfs(dfs, 1)) return solver_detail::finish(budget, std::optional(TripPlan(path)));
  return solver_detail::finish<TripPlan>(budget, std::nullopt);
}

// ---------------------------------------------------------------------------
// Meeting

namespace solver_detail {

// Branch and bound over friend orderings. For a fixed ordering, meeting each
// friend as early as possible (start = max(arrival, window start), for exactly
// the minimum duration) finishes every prefix no later than any other
// schedule of that ordering, so exploring orderings with greedy timing is
// exact.
class MeetingSearch {
 public:
  MeetingSearch(const MeetingProblem& problem, const SearchLimits& limits)
      : problem_(problem), budget_(limits) {
    for (std::size_t i = 0; i < problem.friends().size(); ++i) order_.push_back(i);
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return problem.friends()[a].name < problem.friends()[b].name;
    });
    used_.assign(problem.friends().size(), false);
  }

  void run() {
    dfs(problem_.start_location(), problem_.start_time().minutes());
  }

  const Budget& budget() const { return budget_; }
  std::vector<Meeting> best() const { return best_; }

 private:
  // Friends still reachable in principle: unused and with a latest feasible
  // start no earlier than `now`. Travel is never negative, so this bounds
  // what any extension can add even when travel times break the triangle
  // inequality.
  std::size_t optimistic_remaining(int now) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < used_.size(); ++i) {
      const Friend& f = problem_.friends()[i];
      if (!used_[i] && f.window.end().minutes() - f.min_duration_minutes >= now) ++n;
    }
    return n;
  }

  void dfs(const std::string& location, int now) {
    if (current_.size() > best_.size()) best_ = current_;
    if (best_.size() == used_.size()) return;
    if (current_.size() + optimistic_remaining(now) <= best_.size()) return;
    for (std::size_t i : order_) {
      if (used_[i]) continue;
      if (!budget_.tick()) return;
      const Friend& f = problem_.friends()[i];
      const int arrive = now + problem_.travel(location, f.location);
      const int start = std::max(arrive, f.window.start().minutes());
      const int end = start + f.min_duration_minutes;
      if (end > f.window.end().minutes()) continue;
      used_[i] = true;
      current_.push_back({f.name, f.location, TimeOfDay(start), TimeOfDay(end)});
      dfs(f.location, end);
      current_.pop_back();
      used_[i] = false;
      if (budget_.exhausted() || best_.size() == used_.size()) return;
    }
  }

  const MeetingProblem& problem_;
  Budget budget_;
  std::vector<std::size_t> order_;
  std::vector<bool> used_;
  std::vector<Meeting> current_;
  std::vector<Meeting> best_;
};

}  // namespace solver_detail

// A schedule meeting the maximum number of friends, each for exactly their
// minimum duration. Always kSatisfiable (possibly with zero meetings) unless
// the search budget runs out.
inline SolveOutcome<MeetingPlan> solve_meeting(const MeetingProblem& problem,
                                               const SearchLimits& limits = {}) {
  solver_detail::MeetingSearch search(problem, limits);
  search.run();
  if (search.budget().exhausted()) {
    return solver_detail::finish<MeetingPlan>(search.budget(), std::nullopt);
  }
  return solver_detail::finish(search.budget(), std::optional(MeetingPlan(search.best())));
}

// Throws kSearchBudgetExceeded when the limits are hit before the optimum is
// proven.
inline int max_meetable(const MeetingProblem& problem, const SearchLimits& limits = {}) {
  auto outcome = solve_meeting(problem, limits);
  if (outcome.status != SolveStatus::kSatisfiable) {
    throw Error(ErrorCode::kSearchBudgetExceeded, "max_meetable",
                "meeting search exceeded its budget after " +
                    std::to_string(outcome.explored_nodes) + " nodes");
  }
  return static_cast<int>(outcome.plan->size());
}

}  // namespace natplan

#endif  // NATPLAN_SOLVER_HPP_

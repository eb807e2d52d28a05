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

// Renders problems as benchmark-style prompt text. parse_*(emit(p)) == p for
// every problem whose preferences lie inside the work window.

#ifndef NATPLAN_EMIT_HPP_
#define NATPLAN_EMIT_HPP_

#include <string>
#include <variant>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/time.hpp"

namespace natplan {

namespace emit_detail {

inline std::string join(const std::vector<std::string>& items, const std::string& conjunction) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += (i + 1 == items.size()) ? " " + conjunction + " " : ", ";
    out += items[i];
  }
  return out;
}

inline std::string duration_phrase(int minutes) {
  switch (minutes) {
    case 30: return "half an hour";
    case 60: return "one hour";
    case 90: return "one and a half hours";
    case 120: return "two hours";
    default: return std::to_string(minutes) + " minutes";
  }
}

// "9:00" rather than "09:00".
inline std::string clock(TimeOfDay t) {
  std::string s = format_time(t);
  return s.front() == '0' ? s.substr(1) : s;
}

}  // namespace emit_detail

inline std::string emit_calendar(const CalendarProblem& p) {
  using emit_detail::join;
  std::string out =
      "You are an expert at scheduling meetings. You are given a few constraints on the "
      "existing schedule of each participant, the meeting duration, and possibly some "
      "preferences on the meeting time. Note there exists a solution that works with existing "
      "schedule of every participant. ";

  std::vector<std::string> days;
  for (auto d : p.allowed_days()) days.emplace_back(to_string(d));
  const std::string day_text = days.size() == 1 ? days.front() : "either " + join(days, "or");

  out += "TASK: You need to schedule a meeting for " + join(p.participants(), "and") + " for " +
         emit_detail::duration_phrase(p.duration_minutes()) + " between the work hours of " +
         emit_detail::clock(p.work_window().start()) + " to " + emit_detail::clock(p.work_window().end()) +
         " on " + day_text + ". ";
  out += "Here are the existing schedules for everyone during the day: ";

  for (const auto& who : p.participants()) {
    const auto& blocks = p.busy_of(who);
    if (blocks.empty()) {
      out += who + "'s calendar is wide open the entire day. ";
      continue;
    }
    out += who + " has blocked their calendar on ";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const bool new_day = i == 0 || blocks[i].day != blocks[i - 1].day;
      if (i > 0) out += ", ";
      if (new_day) out += std::string(to_string(blocks[i].day)) + " during ";
      out += emit_detail::clock(blocks[i].interval.start()) + " to " +
             emit_detail::clock(blocks[i].interval.end());
    }
    out += "; ";
  }

  for (const auto& pref : p.preferences()) {
    out += p.participants().front() + " would rather not meet on " +
           std::string(to_string(pref.day));
    if (pref.interval != p.work_window()) {
      out += " between " + emit_detail::clock(pref.interval.start()) + " and " +
             emit_detail::clock(pref.interval.end());
    }
    out += ". ";
  }

  out += "Find a time that works for everyone's schedule and constraints.";
  return out;
}

inline std::string emit_trip(const TripProblem& p) {
  std::string out = "You plan to visit " + std::to_string(p.city_durations().size()) +
                    " European cities for " + std::to_string(p.total_days()) +
                    " days in total. You only take direct flights to commute between cities. ";
  for (const auto& [city, days] : p.city_durations()) {
    out += "You want to spend " + std::to_string(days) + (days == 1 ? " day" : " days") +
           " in " + city + ". ";
  }
  for (const auto& e : p.events()) {
    if (e.day_lo == e.day_hi) {
      out += "You have to attend a workshop in " + e.city + " on day " +
             std::to_string(e.day_lo) + ". ";
    } else {
      out += "You have to attend a workshop in " + e.city + " between day " +
             std::to_string(e.day_lo) + " and day " + std::to_string(e.day_hi) + ". ";
    }
  }
  if (!p.flights().empty()) {
    std::vector<std::string> pairs;
    for (const auto& f : p.flights()) pairs.push_back(f.first() + " and " + f.second());
    out += "Here are the cities that have direct flights: ";
    for (std::size_t i = 0; i < pairs.size(); ++i) out += (i ? ", " : "") + pairs[i];
    out += ". ";
  }
  out += "Find a trip plan of visiting the cities for " + std::to_string(p.total_days()) +
         " days by taking direct flights to commute between them.";
  return out;
}

inline std::string emit_meeting(const MeetingProblem& p) {
  const auto t = [](TimeOfDay x) { return format_time(x, TimeStyle::k12h); };
  std::string out =
      "You are visiting San Francisco for the day and want to meet as many friends as "
      "possible. Solve the problem by considering various different schedules and picking "
      "the best one to optimize your goals. Travel distances (in minutes): ";
  for (const auto& [key, minutes] : p.travel_minutes()) {
    out += key.first + " to " + key.second + ": " + std::to_string(minutes) + ". ";
  }
  out += "CONSTRAINTS: You arrive at " + p.start_location() + " at " + t(p.start_time()) + ". ";
  for (const auto& f : p.friends()) {
    out += f.name + " will be at " + f.location + " from " + t(f.window.start()) + " to " +
           t(f.window.end()) + ". You'd like to meet " + f.name + " for a minimum of " +
           std::to_string(f.min_duration_minutes) + " minutes. ";
  }
  return out;
}

inline std::string emit_problem(const Problem& problem) {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CalendarProblem>) return emit_calendar(p);
        else if constexpr (std::is_same_v<P, TripProblem>) return emit_trip(p);
        else return emit_meeting(p);
      },
      problem);
}

}  // namespace natplan

#endif  // NATPLAN_EMIT_HPP_

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

#ifndef NATPLAN_TESTS_SUPPORT_HPP_
#define NATPLAN_TESTS_SUPPORT_HPP_

#include <atomic>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "natplan/natplan.hpp"

#ifndef NATPLAN_TEST_DATA
#error "NATPLAN_TEST_DATA must point at tests/data"
#endif

namespace natplan::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(NATPLAN_TEST_DATA) / relative;
}

inline std::string data_text(const std::string& relative) {
  return harness::read_file(data_path(relative));
}

inline CalendarProblem appendix_calendar() {
  return parse_calendar(data_text("appendix/calendar.txt")).problem;
}
inline TripProblem appendix_trip() { return parse_trip(data_text("appendix/trip.txt")).problem; }
inline MeetingProblem appendix_meeting() {
  return parse_meeting(data_text("appendix/meeting.txt")).problem;
}

// Runner double: answers every request with a fixed response and records
// what it was asked.
class CannedRunner final : public harness::Runner {
 public:
  explicit CannedRunner(harness::RunnerResponse response) : response_(std::move(response)) {}

  harness::RunnerResponse run(const harness::RunnerRequest& request) override {
    ++calls_;
    std::lock_guard lock(mutex_);
    requests_.push_back(request);
    return response_;
  }

  int calls() const { return calls_; }
  std::vector<harness::RunnerRequest> requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
  }

 private:
  harness::RunnerResponse response_;
  std::atomic<int> calls_{0};
  mutable std::mutex mutex_;
  std::vector<harness::RunnerRequest> requests_;
};

inline harness::RunnerResponse ok_response(std::string stdout_text) {
  return {harness::RunStatus::kOk, std::move(stdout_text), "", 12};
}

// ---------------------------------------------------------------------------
// Single-constraint mutations: each rewrites one constraint of a problem so
// that the given witness breaks it. `target` is the id verify must cite.

struct Mutation {
  Problem problem;
  std::string target;
};

inline std::vector<Mutation> calendar_mutations(const CalendarProblem& p, const CalendarPlan& w) {
  std::vector<Mutation> out;
  for (const auto& who : p.participants()) {
    const auto& blocks = p.busy_of(who);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      auto busy = p.busy();
      busy[who][k] = {w.day, w.slot};
      out.push_back({CalendarProblem(p.participants(), p.allowed_days(), p.work_window(),
                                     p.duration_minutes(), busy, p.preferences()),
                     "busy/" + who + "/" + std::to_string(k)});
    }
  }
  if (p.duration_minutes() + 30 <= duration_minutes(p.work_window())) {
    out.push_back({CalendarProblem(p.participants(), p.allowed_days(), p.work_window(),
                                   p.duration_minutes() + 30, p.busy(), p.preferences()),
                   "duration"});
  }
  auto prefs = p.preferences();
  prefs.push_back({w.day, w.slot});
  out.push_back({CalendarProblem(p.participants(), p.allowed_days(), p.work_window(),
                                 p.duration_minutes(), p.busy(), prefs),
                 "pref/" + std::to_string(prefs.size() - 1)});
  return out;
}

inline std::vector<Mutation> trip_mutations(const TripProblem& p, const TripPlan& w) {
  std::vector<Mutation> out;
  const auto& segs = w.segments();
  for (std::size_t i = 1; i < segs.size(); ++i) {
    auto flights = p.flights();
    const CityPair used(segs[i - 1].city, segs[i].city);
    flights.erase(used);
    out.push_back({TripProblem(p.total_days(), p.city_durations(), flights, p.events()),
                   flight_id(used)});
  }
  // An event moved to a day the city's stay does not cover.
  auto outside_day = [&](const TripSegment& seg) -> int {
    if (seg.day_lo > 1) return 1;
    if (seg.day_hi < p.total_days()) return p.total_days();
    return 0;
  };
  for (std::size_t k = 0; k < p.events().size(); ++k) {
    const auto& e = p.events()[k];
    const auto it = std::find_if(segs.begin(), segs.end(),
                                 [&](const TripSegment& s) { return s.city == e.city; });
    const int day = outside_day(*it);
    if (day == 0) continue;
    auto events = p.events();
    events[k] = {e.city, day, day};
    out.push_back({TripProblem(p.total_days(), p.city_durations(), p.flights(), events),
                   "event/" + std::to_string(k)});
  }
  for (const auto& seg : segs) {
    const int day = outside_day(seg);
    if (day == 0) continue;
    auto events = p.events();
    events.push_back({seg.city, day, day});
    out.push_back({TripProblem(p.total_days(), p.city_durations(), p.flights(), events),
                   "event/" + std::to_string(events.size() - 1)});
    break;
  }
  // One more day in a city, with the trip one day longer so durations still add up.
  if (p.total_days() < 60) {
    auto durations = p.city_durations();
    const std::string& city = segs.front().city;
    ++durations[city];
    out.push_back({TripProblem(p.total_days() + 1, durations, p.flights(), p.events()),
                   "stay/" + city});
  }
  return out;
}

inline std::vector<Mutation> meeting_mutations(const MeetingProblem& p, const MeetingPlan& w) {
  std::vector<Mutation> out;
  const auto& ms = w.meetings();
  auto with_friends = [&](std::vector<Friend> friends) {
    return MeetingProblem(p.start_location(), p.start_time(), p.locations(), p.travel_minutes(),
                          std::move(friends));
  };
  for (const auto& m : ms) {
    const auto idx = static_cast<std::size_t>(
        std::find_if(p.friends().begin(), p.friends().end(),
                     [&](const Friend& f) { return f.name == m.person; }) -
        p.friends().begin());
    const Friend& f = p.friends()[idx];
    // Window opens after the meeting started.
    const int open = m.start.minutes() + 15;
    const int close = std::max(f.window.end().minutes(), open + f.min_duration_minutes);
    if (close < kMinutesPerDay) {
      auto friends = p.friends();
      friends[idx].window = Interval(open, close);
      out.push_back({with_friends(friends), "window/" + f.name});
    }
    // Minimum longer than the meeting; the window grows only if it must.
    const int longer = (m.end.minutes() - m.start.minutes()) + 15;
    const int window_end = std::max(f.window.end().minutes(), f.window.start().minutes() + longer);
    if (window_end < kMinutesPerDay) {
      auto friends = p.friends();
      friends[idx].min_duration_minutes = longer;
      friends[idx].window = Interval(f.window.start().minutes(), window_end);
      out.push_back({with_friends(friends), "min/" + f.name});
    }
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string& from = i == 0 ? p.start_location() : ms[i - 1].location;
    if (from == ms[i].location) continue;
    const int ready = i == 0 ? p.start_time().minutes() : ms[i - 1].end.minutes();
    auto travel = p.travel_minutes();
    travel[{from, ms[i].location}] = ms[i].start.minutes() - ready + 15;
    out.push_back({MeetingProblem(p.start_location(), p.start_time(), p.locations(), travel,
                                  p.friends()),
                   "travel/" + from + "->" + ms[i].location});
  }
  if (!ms.empty() && ms.front().start.minutes() + 15 < kMinutesPerDay) {
    out.push_back({MeetingProblem(p.start_location(), TimeOfDay(ms.front().start.minutes() + 15),
                                  p.locations(), p.travel_minutes(), p.friends()),
                   "start"});
  }
  return out;
}

}  // namespace natplan::testing

#endif  // NATPLAN_TESTS_SUPPORT_HPP_

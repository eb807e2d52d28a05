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

// Problem and plan value types for the three planning tasks.
//
// Problems hold the variable domains and the raw constraint facts of one
// instance; plans are complete assignments. Every type validates its
// invariants on construction and is immutable afterwards.

#ifndef NATPLAN_DOMAIN_HPP_
#define NATPLAN_DOMAIN_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "natplan/error.hpp"
#include "natplan/time.hpp"

namespace natplan {

enum class Task { kCalendar, kTrip, kMeeting };

inline std::string_view to_string(Task task) {
  switch (task) {
    case Task::kCalendar: return "calendar";
    case Task::kTrip: return "trip";
    case Task::kMeeting: return "meeting";
  }
  return "?";
}

inline Task parse_task(std::string_view name) {
  if (name == "calendar") return Task::kCalendar;
  if (name == "trip") return Task::kTrip;
  if (name == "meeting") return Task::kMeeting;
  throw Error(ErrorCode::kInvalidArgument, std::string(name),
              "unknown task '" + std::string(name) + "'");
}

struct DayInterval {
  Weekday day;
  Interval interval;

  friend auto operator<=>(const DayInterval&, const DayInterval&) = default;
};

// ---------------------------------------------------------------------------
// Calendar scheduling

class CalendarProblem {
 public:
  using BusyMap = std::map<std::string, std::vector<DayInterval>>;

  CalendarProblem(std::vector<std::string> participants,
                  std::vector<Weekday> allowed_days, Interval work_window,
                  int duration_minutes, BusyMap busy,
                  std::vector<DayInterval> preferences = {})
      : participants_(std::move(participants)),
        allowed_days_(std::move(allowed_days)),
        work_window_(work_window),
        duration_minutes_(duration_minutes),
        busy_(std::move(busy)),
        preferences_(std::move(preferences)) {
    require(!participants_.empty(), "calendar.participants_nonempty",
            "at least one participant is required");
    require(std::set<std::string>(participants_.begin(), participants_.end())
                    .size() == participants_.size(),
            "calendar.participants_unique", "duplicate participant");
    require(!allowed_days_.empty(), "calendar.allowed_days_nonempty",
            "at least one allowed day is required");
    require(duration_minutes_ > 0, "calendar.duration_positive",
            "meeting duration must be positive");
    require(duration_minutes_ <= natplan::duration_minutes(work_window_),
            "calendar.duration_fits_work_window",
            "meeting duration " + std::to_string(duration_minutes_) +
                " exceeds the work window");
    for (const auto& [who, blocks] : busy_) {
      require(std::find(participants_.begin(), participants_.end(), who) !=
                  participants_.end(),
              "calendar.busy_participant_known",
              "busy blocks for unknown participant '" + who + "'");
    }
    std::erase_if(busy_, [](const auto& entry) { return entry.second.empty(); });
  }

  const std::vector<std::string>& participants() const { return participants_; }
  const std::vector<Weekday>& allowed_days() const { return allowed_days_; }
  Interval work_window() const { return work_window_; }
  int duration_minutes() const { return duration_minutes_; }
  const BusyMap& busy() const { return busy_; }
  const std::vector<DayInterval>& preferences() const { return preferences_; }

  // Busy blocks of `who`, empty when the participant has none.
  const std::vector<DayInterval>& busy_of(const std::string& who) const {
    static const std::vector<DayInterval> kNone;
    auto it = busy_.find(who);
    return it == busy_.end() ? kNone : it->second;
  }

  bool operator==(const CalendarProblem&) const = default;

 private:
  std::vector<std::string> participants_;
  std::vector<Weekday> allowed_days_;
  Interval work_window_;
  int duration_minutes_;
  BusyMap busy_;
  std::vector<DayInterval> preferences_;
};

struct CalendarPlan {
  Weekday day;
  Interval slot;

  bool operator==(const CalendarPlan&) const = default;
};

// ---------------------------------------------------------------------------
// Trip planning

// Unordered pair of cities, stored with first < second.
class CityPair {
 public:
  CityPair(std::string a, std::string b) {
    require(a != b, "trip.flight_distinct_endpoints",
            "flight connects '" + a + "' to itself");
    if (b < a) std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
  }
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }
  friend auto operator<=>(const CityPair&, const CityPair&) = default;

 private:
  std::string first_;
  std::string second_;
};

struct TripEvent {
  std::string city;
  int day_lo;
  int day_hi;

  friend auto operator<=>(const TripEvent&, const TripEvent&) = default;
};

class TripProblem {
 public:
  TripProblem(int total_days, std::map<std::string, int> city_durations,
              std::set<CityPair> flights, std::vector<TripEvent> events = {})
      : total_days_(total_days),
        city_durations_(std::move(city_durations)),
        flights_(std::move(flights)),
        events_(std::move(events)) {
    require(total_days_ > 0, "trip.total_days_positive",
            "total days must be positive");
    require(!city_durations_.empty(), "trip.cities_nonempty",
            "at least one city is required");
    int sum = 0;
    for (const auto& [city, days] : city_durations_) {
      require(days > 0, "trip.city_duration_positive",
              "duration of '" + city + "' must be positive");
      sum += days;
    }
    const int expected =
        total_days_ + static_cast<int>(city_durations_.size()) - 1;
    if (sum != expected) {
      throw Error(ErrorCode::kDurationSumMismatch, "trip.duration_sum",
                  "trip.duration_sum: city durations sum to " +
                      std::to_string(sum) + " but total days + cities - 1 = " +
                      std::to_string(expected));
    }
    for (const auto& pair : flights_) {
      require(has_city(pair.first()) && has_city(pair.second()),
              "trip.flight_cities_known",
              "flight " + pair.first() + "-" + pair.second() +
                  " mentions an unknown city");
    }
    for (const auto& e : events_) {
      require(has_city(e.city), "trip.event_city_known",
              "event in unknown city '" + e.city + "'");
      require(1 <= e.day_lo && e.day_lo <= e.day_hi && e.day_hi <= total_days_,
              "trip.event_window_range",
              "event window day " + std::to_string(e.day_lo) + "-" +
                  std::to_string(e.day_hi) + " outside the trip");
    }
  }

  int total_days() const { return total_days_; }
  const std::map<std::string, int>& city_durations() const {
    return city_durations_;
  }
  const std::set<CityPair>& flights() const { return flights_; }
  const std::vector<TripEvent>& events() const { return events_; }

  bool has_city(const std::string& city) const {
    return city_durations_.count(city) != 0;
  }
  bool connected(const std::string& a, const std::string& b) const {
    return a != b && flights_.count(CityPair(a, b)) != 0;
  }

  bool operator==(const TripProblem&) const = default;

 private:
  int total_days_;
  std::map<std::string, int> city_durations_;
  std::set<CityPair> flights_;
  std::vector<TripEvent> events_;
};

struct TripSegment {
  int day_lo;
  int day_hi;
  std::string city;

  bool operator==(const TripSegment&) const = default;
};

class TripPlan {
 public:
  explicit TripPlan(std::vector<TripSegment> segments)
      : segments_(std::move(segments)) {
    require(!segments_.empty(), "trip_plan.nonempty",
            "itinerary has no segments");
    for (const auto& s : segments_) {
      require(s.day_lo <= s.day_hi, "trip_plan.segment_order",
              "segment Day " + std::to_string(s.day_lo) + "-" +
                  std::to_string(s.day_hi) + " is not a valid range");
    }
  }

  const std::vector<TripSegment>& segments() const { return segments_; }
  bool operator==(const TripPlan&) const = default;

 private:
  std::vector<TripSegment> segments_;
};

// ---------------------------------------------------------------------------
// Meeting planning

struct Friend {
  std::string name;
  std::string location;
  Interval window;
  int min_duration_minutes;

  bool operator==(const Friend&) const = default;
};

class MeetingProblem {
 public:
  using TravelMap = std::map<std::pair<std::string, std::string>, int>;

  MeetingProblem(std::string start_location, TimeOfDay start_time,
                 std::set<std::string> locations, TravelMap travel_minutes,
                 std::vector<Friend> friends)
      : start_location_(std::move(start_location)),
        start_time_(start_time),
        locations_(std::move(locations)),
        travel_minutes_(std::move(travel_minutes)),
        friends_(std::move(friends)) {
    require(locations_.count(start_location_) != 0,
            "meeting.start_location_known",
            "start location '" + start_location_ + "' is not a location");
    for (const auto& [key, minutes] : travel_minutes_) {
      require(key.first != key.second, "meeting.travel_distinct_endpoints",
              "travel entry from '" + key.first + "' to itself");
      require(locations_.count(key.first) && locations_.count(key.second),
              "meeting.travel_locations_known",
              "travel entry " + key.first + " -> " + key.second +
                  " mentions an unknown location");
      require(minutes >= 0, "meeting.travel_nonnegative",
              "negative travel time " + key.first + " -> " + key.second);
    }
    for (const auto& from : locations_) {
      for (const auto& to : locations_) {
        if (from == to) continue;
        if (!travel_minutes_.count({from, to})) {
          throw Error(ErrorCode::kMissingTravelEntry, from + " -> " + to,
                      "meeting.travel_complete: no travel time from '" + from +
                          "' to '" + to + "'");
        }
      }
    }
    std::set<std::string> names;
    for (const auto& f : friends_) {
      require(names.insert(f.name).second, "meeting.friend_names_unique",
              "friend '" + f.name + "' listed twice");
      require(locations_.count(f.location) != 0,
              "meeting.friend_location_known",
              "friend '" + f.name + "' at unknown location '" + f.location +
                  "'");
      require(f.min_duration_minutes > 0, "friend.min_duration_positive",
              "minimum duration with '" + f.name + "' must be positive");
      require(f.min_duration_minutes <= natplan::duration_minutes(f.window),
              "friend.min_duration_fits_window",
              "minimum duration with '" + f.name + "' exceeds their window");
    }
  }

  const std::string& start_location() const { return start_location_; }
  TimeOfDay start_time() const { return start_time_; }
  const std::set<std::string>& locations() const { return locations_; }
  const TravelMap& travel_minutes() const { return travel_minutes_; }
  const std::vector<Friend>& friends() const { return friends_; }

  // Travel time between two known locations; zero when they coincide.
  int travel(const std::string& from, const std::string& to) const {
    if (from == to) return 0;
    return travel_minutes_.at({from, to});
  }

  const Friend* find_friend(const std::string& name) const {
    for (const auto& f : friends_) {
      if (f.name == name) return &f;
    }
    return nullptr;
  }

  bool operator==(const MeetingProblem&) const = default;

 private:
  std::string start_location_;
  TimeOfDay start_time_;
  std::set<std::string> locations_;
  TravelMap travel_minutes_;
  std::vector<Friend> friends_;
};

struct Meeting {
  std::string person;
  std::string location;
  TimeOfDay start;
  TimeOfDay end;

  bool operator==(const Meeting&) const = default;
};

class MeetingPlan {
 public:
  MeetingPlan() = default;
  // Entries are stably sorted by start time.
  explicit MeetingPlan(std::vector<Meeting> meetings)
      : meetings_(std::move(meetings)) {
    for (const auto& m : meetings_) {
      require(m.start < m.end, "meeting_plan.entry_order",
              "meeting with '" + m.person + "' does not end after it starts");
    }
    std::stable_sort(
        meetings_.begin(), meetings_.end(),
        [](const Meeting& a, const Meeting& b) { return a.start < b.start; });
  }

  const std::vector<Meeting>& meetings() const { return meetings_; }
  std::size_t size() const { return meetings_.size(); }
  bool operator==(const MeetingPlan&) const = default;

 private:
  std::vector<Meeting> meetings_;
};

using Problem = std::variant<CalendarProblem, TripProblem, MeetingProblem>;
using Plan = std::variant<CalendarPlan, TripPlan, MeetingPlan>;

inline Task task_of(const Problem& problem) {
  return static_cast<Task>(problem.index());
}
inline Task task_of(const Plan& plan) { return static_cast<Task>(plan.index()); }

}  // namespace natplan

#endif  // NATPLAN_DOMAIN_HPP_

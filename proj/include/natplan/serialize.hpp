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

// Canonical JSON for problems and plans.
//
// Times are written as zero-padded 24h "HH:MM" strings and trip day ranges as
// integers. Plan JSON follows the answer format the benchmark prompts ask for:
//
//   calendar  {"start": {"day": "Monday", "time": "13:30"},
//              "end":   {"day": "Monday", "time": "14:30"}}
//   trip      {"itinerary": [{"day_range": "Day 1-4", "place": "Madrid"}, ...]}
//   meeting   {"itinerary": [{"action": "meet", "location": "Chinatown",
//                             "person": "Anthony", "start_time": "13:15",
//                             "end_time": "14:15"}, ...]}
//
// Plan decoding is lenient about time style (12h or 24h) and day-range
// spelling; anything else that does not fit the schema is kMalformedPlan.

#ifndef NATPLAN_SERIALIZE_HPP_
#define NATPLAN_SERIALIZE_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/time.hpp"

namespace natplan {

using Json = nlohmann::json;

namespace detail {

inline Json interval_json(const Interval& iv) {
  return {{"start", format_time(iv.start())}, {"end", format_time(iv.end())}};
}

inline Json day_interval_json(const DayInterval& d) {
  return {{"day", std::string(to_string(d.day))},
          {"start", format_time(d.interval.start())},
          {"end", format_time(d.interval.end())}};
}

inline Interval interval_from(const Json& j) {
  return Interval(parse_time(j.at("start").get<std::string>()),
                  parse_time(j.at("end").get<std::string>()));
}

inline DayInterval day_interval_from(const Json& j) {
  return {parse_weekday(j.at("day").get<std::string>()), interval_from(j)};
}

// Wraps nlohmann type/lookup failures so callers only ever see natplan::Error.
template <class F>
auto decode_guarded(std::string_view what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what),
                "malformed " + std::string(what) + " JSON: " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Problems

inline Json to_json(const CalendarProblem& p) {
  Json busy = Json::object();
  for (const auto& [who, blocks] : p.busy()) {
    Json list = Json::array();
    for (const auto& b : blocks) list.push_back(detail::day_interval_json(b));
    busy[who] = std::move(list);
  }
  Json days = Json::array();
  for (auto d : p.allowed_days()) days.push_back(std::string(to_string(d)));
  Json prefs = Json::array();
  for (const auto& d : p.preferences()) prefs.push_back(detail::day_interval_json(d));
  return {{"participants", p.participants()},
          {"allowed_days", std::move(days)},
          {"work_window", detail::interval_json(p.work_window())},
          {"duration_minutes", p.duration_minutes()},
          {"busy", std::move(busy)},
          {"preferences", std::move(prefs)}};
}

inline Json to_json(const TripProblem& p) {
  Json flights = Json::array();
  for (const auto& f : p.flights()) flights.push_back({f.first(), f.second()});
  Json events = Json::array();
  for (const auto& e : p.events()) {
    events.push_back({{"city", e.city}, {"day_lo", e.day_lo}, {"day_hi", e.day_hi}});
  }
  return {{"total_days", p.total_days()},
          {"city_durations", p.city_durations()},
          {"flights", std::move(flights)},
          {"events", std::move(events)}};
}

inline Json to_json(const MeetingProblem& p) {
  Json travel = Json::array();
  for (const auto& [key, minutes] : p.travel_minutes()) {
    travel.push_back({{"from", key.first}, {"to", key.second}, {"minutes", minutes}});
  }
  Json friends = Json::array();
  for (const auto& f : p.friends()) {
    friends.push_back({{"name", f.name},
                       {"location", f.location},
                       {"window", detail::interval_json(f.window)},
                       {"min_duration_minutes", f.min_duration_minutes}});
  }
  return {{"start_location", p.start_location()},
          {"start_time", format_time(p.start_time())},
          {"locations", p.locations()},
          {"travel_minutes", std::move(travel)},
          {"friends", std::move(friends)}};
}

inline Json to_json(const Problem& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

inline CalendarProblem calendar_problem_from_json(const Json& j) {
  return detail::decode_guarded("calendar problem", [&] {
    std::vector<Weekday> days;
    for (const auto& d : j.at("allowed_days")) days.push_back(parse_weekday(d.get<std::string>()));
    CalendarProblem::BusyMap busy;
    for (const auto& [who, blocks] : j.at("busy").items()) {
      auto& list = busy[who];
      for (const auto& b : blocks) list.push_back(detail::day_interval_from(b));
    }
    std::vector<DayInterval> prefs;
    if (j.contains("preferences")) {
      for (const auto& d : j.at("preferences")) prefs.push_back(detail::day_interval_from(d));
    }
    return CalendarProblem(j.at("participants").get<std::vector<std::string>>(),
                           std::move(days), detail::interval_from(j.at("work_window")),
                           j.at("duration_minutes").get<int>(), std::move(busy),
                           std::move(prefs));
  });
}

inline TripProblem trip_problem_from_json(const Json& j) {
  return detail::decode_guarded("trip problem", [&] {
    std::set<CityPair> flights;
    for (const auto& f : j.at("flights")) {
      flights.insert(CityPair(f.at(0).get<std::string>(), f.at(1).get<std::string>()));
    }
    std::vector<TripEvent> events;
    if (j.contains("events")) {
      for (const auto& e : j.at("events")) {
        events.push_back({e.at("city").get<std::string>(), e.at("day_lo").get<int>(),
                          e.at("day_hi").get<int>()});
      }
    }
    return TripProblem(j.at("total_days").get<int>(),
                       j.at("city_durations").get<std::map<std::string, int>>(),
                       std::move(flights), std::move(events));
  });
}

inline MeetingProblem meeting_problem_from_json(const Json& j) {
  return detail::decode_guarded("meeting problem", [&] {
    MeetingProblem::TravelMap travel;
    for (const auto& t : j.at("travel_minutes")) {
      travel[{t.at("from").get<std::string>(), t.at("to").get<std::string>()}] =
          t.at("minutes").get<int>();
    }
    std::vector<Friend> friends;
    for (const auto& f : j.at("friends")) {
      friends.push_back({f.at("name").get<std::string>(),
                         f.at("location").get<std::string>(),
                         detail::interval_from(f.at("window")),
                         f.at("min_duration_minutes").get<int>()});
    }
    return MeetingProblem(j.at("start_location").get<std::string>(),
                          parse_time(j.at("start_time").get<std::string>()),
                          j.at("locations").get<std::set<std::string>>(),
                          std::move(travel), std::move(friends));
  });
}

inline Problem problem_from_json(Task task, const Json& j) {
  switch (task) {
    case Task::kCalendar: return calendar_problem_from_json(j);
    case Task::kTrip: return trip_problem_from_json(j);
    case Task::kMeeting: return meeting_problem_from_json(j);
  }
  throw Error(ErrorCode::kInvalidArgument, "task", "unknown task");
}

// ---------------------------------------------------------------------------
// Plans

inline std::string format_day_range(int lo, int hi) {
  return "Day " + std::to_string(lo) + "-" + std::to_string(hi);
}

inline Json to_json(const CalendarPlan& p) {
  const std::string day(to_string(p.day));
  return {{"start", {{"day", day}, {"time", format_time(p.slot.start())}}},
          {"end", {{"day", day}, {"time", format_time(p.slot.end())}}}};
}

inline Json to_json(const TripPlan& p) {
  Json items = Json::array();
  for (const auto& s : p.segments()) {
    items.push_back({{"day_range", format_day_range(s.day_lo, s.day_hi)}, {"place", s.city}});
  }
  return {{"itinerary", std::move(items)}};
}

inline Json to_json(const MeetingPlan& p) {
  Json items = Json::array();
  for (const auto& m : p.meetings()) {
    items.push_back({{"action", "meet"},
                     {"location", m.location},
                     {"person", m.person},
                     {"start_time", format_time(m.start)},
                     {"end_time", format_time(m.end)}});
  }
  return {{"itinerary", std::move(items)}};
}

inline Json to_json(const Plan& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

namespace detail {

[[noreturn]] inline void malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedPlan, "plan", message);
}

inline std::string plan_string(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
    malformed(std::string("missing string field '") + key + "'");
  }
  return obj.at(key).get<std::string>();
}

inline TimeOfDay plan_time(const Json& obj, const char* key) {
  std::string text = plan_string(obj, key);
  try {
    return parse_time(text);
  } catch (const Error&) {
    malformed(std::string("field '") + key + "' is not a time: '" + text + "'");
  }
}

inline Weekday plan_day(const Json& obj, const char* key) {
  std::string text = plan_string(obj, key);
  auto day = weekday_from_name(text);
  if (!day) malformed("field '" + std::string(key) + "' is not a weekday: '" + text + "'");
  return *day;
}

}  // namespace detail

// "Day 1-4", "Days 1 - 4", "Day 3" and "Day 2 to 5" are accepted.
inline std::pair<int, int> parse_day_range(std::string_view text) {
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_spaces();
    std::size_t begin = i;
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    if (i == begin || i - begin > 4) detail::malformed("bad day range '" + std::string(text) + "'");
    return value;
  };
  skip_spaces();
  std::string_view rest = text.substr(i);
  if (rest.substr(0, 4) == "Days" || rest.substr(0, 4) == "days") {
    i += 4;
  } else if (rest.substr(0, 3) == "Day" || rest.substr(0, 3) == "day") {
    i += 3;
  }
  int lo = read_int();
  skip_spaces();
  int hi = lo;
  if (i < text.size()) {
    if (text[i] == '-') {
      ++i;
    } else if (text.substr(i, 2) == "to") {
      i += 2;
    } else {
      detail::malformed("bad day range '" + std::string(text) + "'");
    }
    hi = read_int();
    skip_spaces();
  }
  if (i != text.size()) detail::malformed("bad day range '" + std::string(text) + "'");
  return {lo, hi};
}

inline CalendarPlan calendar_plan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end")) {
    detail::malformed("calendar plan needs 'start' and 'end'");
  }
  const Json& s = j.at("start");
  const Json& e = j.at("end");
  Weekday day = detail::plan_day(s, "day");
  if (detail::plan_day(e, "day") != day) detail::malformed("meeting spans two days");
  TimeOfDay start = detail::plan_time(s, "time");
  TimeOfDay end = detail::plan_time(e, "time");
  if (!(start < end)) detail::malformed("meeting end is not after its start");
  return {day, Interval(start, end)};
}

inline TripPlan trip_plan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("itinerary") || !j.at("itinerary").is_array()) {
    detail::malformed("trip plan needs an 'itinerary' array");
  }
  std::vector<TripSegment> segments;
  for (const auto& item : j.at("itinerary")) {
    auto [lo, hi] = parse_day_range(detail::plan_string(item, "day_range"));
    if (lo > hi) detail::malformed("day range runs backwards");
    segments.push_back({lo, hi, detail::plan_string(item, "place")});
  }
  if (segments.empty()) detail::malformed("itinerary is empty");
  return TripPlan(std::move(segments));
}

inline MeetingPlan meeting_plan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("itinerary") || !j.at("itinerary").is_array()) {
    detail::malformed("meeting plan needs an 'itinerary' array");
  }
  std::vector<Meeting> meetings;
  for (const auto& item : j.at("itinerary")) {
    if (item.is_object() && item.contains("action") &&
        detail::plan_string(item, "action") != "meet") {
      continue;  // travel / wait steps carry no assignment
    }
    Meeting m{detail::plan_string(item, "person"), detail::plan_string(item, "location"),
              detail::plan_time(item, "start_time"), detail::plan_time(item, "end_time")};
    if (!(m.start < m.end)) detail::malformed("meeting with '" + m.person + "' has no length");
    meetings.push_back(std::move(m));
  }
  return MeetingPlan(std::move(meetings));
}

inline Plan plan_from_json(Task task, const Json& j) {
  switch (task) {
    case Task::kCalendar: return calendar_plan_from_json(j);
    case Task::kTrip: return trip_plan_from_json(j);
    case Task::kMeeting: return meeting_plan_from_json(j);
  }
  detail::malformed("unknown task");
}

}  // namespace natplan

#endif  // NATPLAN_SERIALIZE_HPP_

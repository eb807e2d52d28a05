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

// Atomic constraints, plan verification and the complexity metric.
//
// A problem compiles into an ordered ConstraintSet. verify() evaluates every
// constraint as a predicate over (problem, plan) and additionally checks the
// variable domains (weekday membership and work hours for calendar, known
// cities and persons, contiguity of the schedule). Domain failures are
// reported under the pseudo ids in `domain_ids`; they are not constraints and
// do not count towards complexity.
//
// Constraint ids:
//   calendar  duration, busy/<participant>/<k>, pref/<k>
//   trip      total_days, flight/<a>-<b> (a < b), stay/<city>, event/<k>
//   meeting   start, travel/<from>-><to>, window/<friend>, min/<friend>,
//             max_count
//
// Flight edges are permissions. A transition between two cities without a
// flight is reported under the id the missing edge would have, which is the
// id a dropped flight sentence used to contribute.

#ifndef NATPLAN_CONSTRAINTS_HPP_
#define NATPLAN_CONSTRAINTS_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/serialize.hpp"
#include "natplan/solver.hpp"
#include "natplan/time.hpp"

namespace natplan {

enum class ConstraintKind {
  // calendar
  kBusyBlock,
  kMeetingDuration,
  kPreference,
  // trip
  kTotalDays,
  kFlightEdge,
  kCityDuration,
  kEventWindow,
  // meeting
  kStartCondition,
  kTravelTime,
  kAvailabilityWindow,
  kMinDuration,
  kMaximalCount,
};

inline std::string_view to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::kBusyBlock: return "BusyBlock";
    case ConstraintKind::kMeetingDuration: return "MeetingDuration";
    case ConstraintKind::kPreference: return "Preference";
    case ConstraintKind::kTotalDays: return "TotalDays";
    case ConstraintKind::kFlightEdge: return "FlightEdge";
    case ConstraintKind::kCityDuration: return "CityDuration";
    case ConstraintKind::kEventWindow: return "EventWindow";
    case ConstraintKind::kStartCondition: return "StartCondition";
    case ConstraintKind::kTravelTime: return "TravelTime";
    case ConstraintKind::kAvailabilityWindow: return "AvailabilityWindow";
    case ConstraintKind::kMinDuration: return "MinDuration";
    case ConstraintKind::kMaximalCount: return "MaximalCount";
  }
  return "?";
}

namespace params {
struct Busy { std::string participant; DayInterval block; };
struct Duration { int minutes; };
struct Avoid { DayInterval range; };
struct TotalDays { int days; };
struct Flight { CityPair pair; };
struct Stay { std::string city; int days; };
struct Event { TripEvent event; };
struct Start { std::string location; TimeOfDay time; };
struct Travel { std::string from; std::string to; int minutes; };
struct Window { std::string person; std::string location; Interval window; };
struct MinDuration { std::string person; int minutes; };
struct MaxCount { int bound; };
}  // namespace params

using ConstraintParams =
    std::variant<params::Busy, params::Duration, params::Avoid, params::TotalDays,
                 params::Flight, params::Stay, params::Event, params::Start,
                 params::Travel, params::Window, params::MinDuration, params::MaxCount>;

struct AtomicConstraint {
  std::string id;
  ConstraintKind kind;
  ConstraintParams params;
  std::string description;
};

struct ConstraintSet {
  Task task;
  std::vector<AtomicConstraint> constraints;

  std::size_t size() const { return constraints.size(); }
  const AtomicConstraint* find(std::string_view id) const {
    for (const auto& c : constraints) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

namespace domain_ids {
inline constexpr std::string_view kDay = "domain.day";
inline constexpr std::string_view kWorkWindow = "domain.work_window";
inline constexpr std::string_view kCity = "domain.city";
inline constexpr std::string_view kPerson = "domain.person";
inline constexpr std::string_view kUnique = "domain.unique";
inline constexpr std::string_view kOrder = "domain.order";
}  // namespace domain_ids

enum class Verdict { kCorrect, kWrongPlan };

struct Violation {
  std::string constraint_id;
  std::string explanation;
};

struct VerificationReport {
  Verdict verdict = Verdict::kCorrect;
  std::vector<Violation> violations;
  std::size_t checked = 0;

  bool cites(std::string_view id) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.constraint_id == id; });
  }
};

enum class PreferenceMode { kHard, kSoft };

struct VerifyOptions {
  // kSoft skips Preference constraints when checking plans; they are still
  // compiled and counted.
  PreferenceMode preferences = PreferenceMode::kHard;
  SearchLimits limits;
};

// ---------------------------------------------------------------------------
// compile

inline std::string flight_id(const CityPair& p) {
  return "flight/" + p.first() + "-" + p.second();
}

inline ConstraintSet compile(const CalendarProblem& p) {
  ConstraintSet set{Task::kCalendar, {}};
  set.constraints.push_back(
      {"duration", ConstraintKind::kMeetingDuration, params::Duration{p.duration_minutes()},
       "The meeting lasts " + std::to_string(p.duration_minutes()) + " minutes."});
  for (const auto& who : p.participants()) {
    const auto& blocks = p.busy_of(who);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto& b = blocks[k];
      set.constraints.push_back(
          {"busy/" + who + "/" + std::to_string(k), ConstraintKind::kBusyBlock,
           params::Busy{who, b},
           who + " is unavailable on " + std::string(to_string(b.day)) + " from " +
               format_time(b.interval.start()) + " to " + format_time(b.interval.end()) + "."});
    }
  }
  for (std::size_t k = 0; k < p.preferences().size(); ++k) {
    const auto& r = p.preferences()[k];
    set.constraints.push_back(
        {"pref/" + std::to_string(k), ConstraintKind::kPreference, params::Avoid{r},
         "Avoid meeting on " + std::string(to_string(r.day)) + " between " +
             format_time(r.interval.start()) + " and " + format_time(r.interval.end()) + "."});
  }
  return set;
}

inline ConstraintSet compile(const TripProblem& p) {
  ConstraintSet set{Task::kTrip, {}};
  set.constraints.push_back(
      {"total_days", ConstraintKind::kTotalDays, params::TotalDays{p.total_days()},
       "The trip covers days 1 to " + std::to_string(p.total_days()) + "."});
  for (const auto& f : p.flights()) {
    set.constraints.push_back({flight_id(f), ConstraintKind::kFlightEdge, params::Flight{f},
                               "There is a direct flight between " + f.first() + " and " +
                                   f.second() + "."});
  }
  for (const auto& [city, days] : p.city_durations()) {
    set.constraints.push_back({"stay/" + city, ConstraintKind::kCityDuration,
                               params::Stay{city, days},
                               "Spend " + std::to_string(days) + " days in " + city + "."});
  }
  for (std::size_t k = 0; k < p.events().size(); ++k) {
    const auto& e = p.events()[k];
    set.constraints.push_back({"event/" + std::to_string(k), ConstraintKind::kEventWindow,
                               params::Event{e},
                               "Be in " + e.city + " from day " + std::to_string(e.day_lo) +
                                   " to day " + std::to_string(e.day_hi) + "."});
  }
  return set;
}

inline ConstraintSet compile(const MeetingProblem& p, const SearchLimits& limits = {}) {
  ConstraintSet set{Task::kMeeting, {}};
  set.constraints.push_back(
      {"start", ConstraintKind::kStartCondition,
       params::Start{p.start_location(), p.start_time()},
       "You start at " + p.start_location() + " at " + format_time(p.start_time()) + "."});
  for (const auto& [key, minutes] : p.travel_minutes()) {
    set.constraints.push_back({"travel/" + key.first + "->" + key.second,
                               ConstraintKind::kTravelTime,
                               params::Travel{key.first, key.second, minutes},
                               "Travelling from " + key.first + " to " + key.second +
                                   " takes " + std::to_string(minutes) + " minutes."});
  }
  for (const auto& f : p.friends()) {
    set.constraints.push_back({"window/" + f.name, ConstraintKind::kAvailabilityWindow,
                               params::Window{f.name, f.location, f.window},
                               f.name + " is at " + f.location + " from " +
                                   format_time(f.window.start()) + " to " +
                                   format_time(f.window.end()) + "."});
  }
  for (const auto& f : p.friends()) {
    set.constraints.push_back({"min/" + f.name, ConstraintKind::kMinDuration,
                               params::MinDuration{f.name, f.min_duration_minutes},
                               "Meet " + f.name + " for at least " +
                                   std::to_string(f.min_duration_minutes) + " minutes."});
  }
  const int bound = max_meetable(p, limits);
  set.constraints.push_back({"max_count", ConstraintKind::kMaximalCount,
                             params::MaxCount{bound},
                             "Meet " + std::to_string(bound) +
                                 " friends, the most any schedule can."});
  return set;
}

inline ConstraintSet compile(const Problem& p, const SearchLimits& limits = {}) {
  return std::visit(
      [&](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, MeetingProblem>) {
          return compile(v, limits);
        } else {
          return compile(v);
        }
      },
      p);
}

// Number of stated constraints; the derived MaximalCount is excluded.
inline int complexity(const ConstraintSet& set) {
  return static_cast<int>(std::count_if(
      set.constraints.begin(), set.constraints.end(),
      [](const AtomicConstraint& c) { return c.kind != ConstraintKind::kMaximalCount; }));
}

// Counts without running the meeting search.
inline int complexity(const Problem& problem) {
  if (const auto* m = std::get_if<MeetingProblem>(&problem)) {
    return static_cast<int>(1 + m->travel_minutes().size() + 2 * m->friends().size());
  }
  return complexity(compile(problem));
}

// Rank-based quantile buckets: the element of rank r (ties broken by input
// position) goes to bucket floor(r * k / n).
inline std::vector<int> assign_buckets(const std::vector<int>& complexities, int k) {
  if (complexities.empty()) {
    throw Error(ErrorCode::kEmptyInput, "complexities", "no complexities to bucket");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k", "bucket count must be positive");
  const std::size_t n = complexities.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return complexities[a] < complexities[b];
  });
  std::vector<int> buckets(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    buckets[order[rank]] = static_cast<int>(rank * static_cast<std::size_t>(k) / n);
  }
  return buckets;
}

// ---------------------------------------------------------------------------
// verify

namespace verify_detail {

inline std::string span_text(const Interval& iv) {
  return format_time(iv.start()) + "-" + format_time(iv.end());
}

class Collector {
 public:
  void add(std::string id, std::string why) {
    violations_.push_back({std::move(id), std::move(why)});
  }
  VerificationReport finish(std::size_t checked) {
    VerificationReport r;
    r.violations = std::move(violations_);
    r.checked = checked;
    r.verdict = r.violations.empty() ? Verdict::kCorrect : Verdict::kWrongPlan;
    return r;
  }

 private:
  std::vector<Violation> violations_;
};

inline void check(const AtomicConstraint& c, const CalendarPlan& plan,
                  const VerifyOptions& options, Collector& out) {
  if (const auto* d = std::get_if<params::Duration>(&c.params)) {
    if (duration_minutes(plan.slot) != d->minutes) {
      out.add(c.id, "meeting lasts " + std::to_string(duration_minutes(plan.slot)) +
                        " minutes, required " + std::to_string(d->minutes));
    }
  } else if (const auto* b = std::get_if<params::Busy>(&c.params)) {
    if (b->block.day == plan.day && overlaps(b->block.interval, plan.slot)) {
      out.add(c.id, span_text(plan.slot) + " overlaps " + b->participant + "'s block " +
                        span_text(b->block.interval));
    }
  } else if (const auto* a = std::get_if<params::Avoid>(&c.params)) {
    if (options.preferences == PreferenceMode::kHard && a->range.day == plan.day &&
        overlaps(a->range.interval, plan.slot)) {
      out.add(c.id, span_text(plan.slot) + " falls in the avoided range " +
                        span_text(a->range.interval));
    }
  }
}

inline const TripSegment* segment_of(const TripPlan& plan, const std::string& city,
                                     int* count) {
  const TripSegment* found = nullptr;
  *count = 0;
  for (const auto& s : plan.segments()) {
    if (s.city == city) {
      ++*count;
      if (!found) found = &s;
    }
  }
  return found;
}

inline void check(const AtomicConstraint& c, const TripPlan& plan, Collector& out) {
  const auto& segs = plan.segments();
  if (const auto* t = std::get_if<params::TotalDays>(&c.params)) {
    if (segs.front().day_lo != 1) {
      out.add(c.id, "itinerary starts on day " + std::to_string(segs.front().day_lo));
    }
    if (segs.back().day_hi != t->days) {
      out.add(c.id, "itinerary ends on day " + std::to_string(segs.back().day_hi) +
                        ", trip has " + std::to_string(t->days) + " days");
    }
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (segs[i].day_lo != segs[i - 1].day_hi) {
        out.add(c.id, "segment " + std::to_string(i + 1) + " starts on day " +
                          std::to_string(segs[i].day_lo) + " instead of the flight day " +
                          std::to_string(segs[i - 1].day_hi));
      }
    }
  } else if (const auto* s = std::get_if<params::Stay>(&c.params)) {
    int count = 0;
    const TripSegment* seg = segment_of(plan, s->city, &count);
    if (count == 0) {
      out.add(c.id, s->city + " is never visited");
    } else if (count > 1) {
      out.add(c.id, s->city + " is visited " + std::to_string(count) + " times");
    } else if (seg->day_hi - seg->day_lo + 1 != s->days) {
      out.add(c.id, s->city + " gets " + std::to_string(seg->day_hi - seg->day_lo + 1) +
                        " days, required " + std::to_string(s->days));
    }
  } else if (const auto* e = std::get_if<params::Event>(&c.params)) {
    int count = 0;
    const TripSegment* seg = segment_of(plan, e->event.city, &count);
    if (!seg) {
      out.add(c.id, e->event.city + " is never visited");
    } else if (!(seg->day_lo <= e->event.day_lo && e->event.day_hi <= seg->day_hi)) {
      out.add(c.id, "stay in " + e->event.city + " (day " + std::to_string(seg->day_lo) + "-" +
                        std::to_string(seg->day_hi) + ") misses days " +
                        std::to_string(e->event.day_lo) + "-" + std::to_string(e->event.day_hi));
    }
  }
  // FlightEdge constraints are permissions; transitions are checked in verify.
}

inline void check(const AtomicConstraint& c, const MeetingProblem& problem,
                  const MeetingPlan& plan, Collector& out) {
  const auto& ms = plan.meetings();
  if (const auto* s = std::get_if<params::Start>(&c.params)) {
    if (!ms.empty() && ms.front().start < s->time) {
      out.add(c.id, "first meeting at " + format_time(ms.front().start) + " is before the " +
                        format_time(s->time) + " arrival");
    }
  } else if (const auto* t = std::get_if<params::Travel>(&c.params)) {
    // Legs are consecutive stops, the arrival point being the first stop.
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string& from = i == 0 ? problem.start_location() : ms[i - 1].location;
      if (from != t->from || ms[i].location != t->to) continue;
      const int ready = i == 0 ? problem.start_time().minutes() : ms[i - 1].end.minutes();
      const int gap = ms[i].start.minutes() - ready;
      if (gap < t->minutes) {
        out.add(c.id, "only " + std::to_string(gap) + " minutes to get from " + from + " to " +
                          ms[i].person + " at " + t->to + ", travel takes " +
                          std::to_string(t->minutes));
      }
    }
  } else if (const auto* w = std::get_if<params::Window>(&c.params)) {
    for (const auto& m : ms) {
      if (m.person != w->person) continue;
      if (m.location != w->location) {
        out.add(c.id, w->person + " is at " + w->location + ", not " + m.location);
      }
      if (!w->window.contains(Interval(m.start, m.end))) {
        out.add(c.id, "meeting " + span_text(Interval(m.start, m.end)) + " is outside " +
                          w->person + "'s window " + span_text(w->window));
      }
    }
  } else if (const auto* d = std::get_if<params::MinDuration>(&c.params)) {
    for (const auto& m : ms) {
      if (m.person != d->person) continue;
      const int length = m.end.minutes() - m.start.minutes();
      if (length < d->minutes) {
        out.add(c.id, "meets " + d->person + " for " + std::to_string(length) +
                          " minutes, minimum " + std::to_string(d->minutes));
      }
    }
  } else if (const auto* n = std::get_if<params::MaxCount>(&c.params)) {
    if (static_cast<int>(ms.size()) != n->bound) {
      out.add(c.id, "schedule meets " + std::to_string(ms.size()) + " friends, " +
                        std::to_string(n->bound) + " are possible");
    }
  }
}

}  // namespace verify_detail

inline VerificationReport verify(const ConstraintSet& set, const CalendarProblem& problem,
                                 const CalendarPlan& plan, const VerifyOptions& options = {}) {
  verify_detail::Collector out;
  const auto& days = problem.allowed_days();
  if (std::find(days.begin(), days.end(), plan.day) == days.end()) {
    out.add(std::string(domain_ids::kDay),
            std::string(to_string(plan.day)) + " is not an allowed day");
  }
  if (!problem.work_window().contains(plan.slot)) {
    out.add(std::string(domain_ids::kWorkWindow),
            verify_detail::span_text(plan.slot) + " is outside work hours " +
                verify_detail::span_text(problem.work_window()));
  }
  for (const auto& c : set.constraints) verify_detail::check(c, plan, options, out);
  return out.finish(set.size());
}

inline VerificationReport verify(const ConstraintSet& set, const TripProblem& problem,
                                 const TripPlan& plan, const VerifyOptions& = {}) {
  verify_detail::Collector out;
  const auto& segs = plan.segments();
  for (const auto& s : segs) {
    if (!problem.has_city(s.city)) {
      out.add(std::string(domain_ids::kCity), s.city + " is not part of the trip");
    }
  }
  for (const auto& c : set.constraints) verify_detail::check(c, plan, out);
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const auto& a = segs[i - 1].city;
    const auto& b = segs[i].city;
    if (a == b || !problem.has_city(a) || !problem.has_city(b)) continue;
    if (!problem.connected(a, b)) {
      out.add(flight_id(CityPair(a, b)), "no direct flight between " + a + " and " + b);
    }
  }
  return out.finish(set.size());
}

inline VerificationReport verify(const ConstraintSet& set, const MeetingProblem& problem,
                                 const MeetingPlan& plan, const VerifyOptions& = {}) {
  verify_detail::Collector out;
  const auto& ms = plan.meetings();
  std::set<std::string> seen;
  for (const auto& m : ms) {
    if (!problem.find_friend(m.person)) {
      out.add(std::string(domain_ids::kPerson), m.person + " is not one of the friends");
    } else if (!seen.insert(m.person).second) {
      out.add(std::string(domain_ids::kUnique), m.person + " is met more than once");
    }
    if (!problem.locations().count(m.location)) {
      out.add(std::string(domain_ids::kPerson), m.location + " is not a known location");
    }
  }
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (ms[i].location == ms[i - 1].location && ms[i].start < ms[i - 1].end) {
      out.add(std::string(domain_ids::kOrder),
              "meetings with " + ms[i - 1].person + " and " + ms[i].person + " overlap");
    }
  }
  for (const auto& c : set.constraints) verify_detail::check(c, problem, plan, out);
  return out.finish(set.size());
}

inline VerificationReport verify(const ConstraintSet& set, const Problem& problem,
                                 const Plan& plan, const VerifyOptions& options = {}) {
  if (problem.index() != plan.index()) {
    throw Error(ErrorCode::kPlanTaskMismatch, "plan",
                std::string(to_string(task_of(plan))) + " plan given for a " +
                    std::string(to_string(task_of(problem))) + " problem");
  }
  return std::visit(
      [&](const auto& p) -> VerificationReport {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CalendarProblem>) {
          return verify(set, p, std::get<CalendarPlan>(plan), options);
        } else if constexpr (std::is_same_v<P, TripProblem>) {
          return verify(set, p, std::get<TripPlan>(plan), options);
        } else {
          return verify(set, p, std::get<MeetingPlan>(plan), options);
        }
      },
      problem);
}

inline VerificationReport verify(const Problem& problem, const Plan& plan,
                                 const VerifyOptions& options = {}) {
  if (problem.index() != plan.index()) return verify(ConstraintSet{}, problem, plan, options);
  return verify(compile(problem, options.limits), problem, plan, options);
}

// ---------------------------------------------------------------------------
// JSON

inline Json params_json(const ConstraintParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, params::Busy>) {
          return {{"participant", p.participant},
                  {"day", std::string(to_string(p.block.day))},
                  {"start", format_time(p.block.interval.start())},
                  {"end", format_time(p.block.interval.end())}};
        } else if constexpr (std::is_same_v<P, params::Duration>) {
          return {{"minutes", p.minutes}};
        } else if constexpr (std::is_same_v<P, params::Avoid>) {
          return {{"day", std::string(to_string(p.range.day))},
                  {"start", format_time(p.range.interval.start())},
                  {"end", format_time(p.range.interval.end())}};
        } else if constexpr (std::is_same_v<P, params::TotalDays>) {
          return {{"days", p.days}};
        } else if constexpr (std::is_same_v<P, params::Flight>) {
          return {{"cities", {p.pair.first(), p.pair.second()}}};
        } else if constexpr (std::is_same_v<P, params::Stay>) {
          return {{"city", p.city}, {"days", p.days}};
        } else if constexpr (std::is_same_v<P, params::Event>) {
          return {{"city", p.event.city}, {"day_lo", p.event.day_lo}, {"day_hi", p.event.day_hi}};
        } else if constexpr (std::is_same_v<P, params::Start>) {
          return {{"location", p.location}, {"time", format_time(p.time)}};
        } else if constexpr (std::is_same_v<P, params::Travel>) {
          return {{"from", p.from}, {"to", p.to}, {"minutes", p.minutes}};
        } else if constexpr (std::is_same_v<P, params::Window>) {
          return {{"person", p.person},
                  {"location", p.location},
                  {"start", format_time(p.window.start())},
                  {"end", format_time(p.window.end())}};
        } else if constexpr (std::is_same_v<P, params::MinDuration>) {
          return {{"person", p.person}, {"minutes", p.minutes}};
        } else {
          return {{"bound", p.bound}};
        }
      },
      params);
}

inline Json to_json(const ConstraintSet& set) {
  Json list = Json::array();
  for (const auto& c : set.constraints) {
    list.push_back({{"id", c.id},
                    {"kind", std::string(to_string(c.kind))},
                    {"params", params_json(c.params)},
                    {"description", c.description}});
  }
  return {{"task", std::string(to_string(set.task))}, {"constraints", std::move(list)}};
}

inline Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"id", v.constraint_id}, {"explanation", v.explanation}});
  }
  return {{"verdict", r.verdict == Verdict::kCorrect ? "Correct" : "WrongPlan"},
          {"violations", std::move(violations)},
          {"checked", r.checked}};
}

}  // namespace natplan

#endif  // NATPLAN_CONSTRAINTS_HPP_

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

// Seeded instance generation. Each generator samples a solution first and
// then derives constraints that the solution satisfies, so every instance
// comes with a witness plan that verifies Correct.
//
// Calendar times lie on a 30-minute grid. Meeting durations are multiples of
// 15 minutes.

#ifndef NATPLAN_GENERATOR_HPP_
#define NATPLAN_GENERATOR_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/time.hpp"

namespace natplan {

struct CalendarKnobs {
  int participants = 2;             // 1..6
  int blocks_per_participant = 3;   // 0..8
  int days = 1;                     // 1..5
  int preferences = 0;              // 0..3
  int duration_minutes = 0;         // 0 picks 30 or 60; otherwise a multiple of 30
};

struct TripKnobs {
  int cities = 3;                   // 1..6
  int total_days = 0;               // 0 samples durations 2..5
  double edge_density = 0.3;        // chance of each non-itinerary flight
  int events = 1;                   // 0..cities
};

struct MeetingKnobs {
  int friends = 3;                  // 0..8
  int locations = 4;                // 2..8
};

struct GenParams {
  std::uint64_t seed = 1;
  CalendarKnobs calendar;
  TripKnobs trip;
  MeetingKnobs meeting;
  // When set, structural knobs are adjusted so complexity(problem) equals it.
  std::optional<int> target_constraint_count;
};

template <class P, class W>
struct Generated {
  P problem;
  W witness;
};

namespace gen_detail {

inline constexpr std::array<const char*, 12> kPeople = {
    "Alice", "Bruce", "Carol", "Diego", "Emma", "Farid",
    "Grace", "Hiro", "Irene", "Jamal", "Kate", "Liam"};

inline constexpr std::array<const char*, 12> kCities = {
    "Amsterdam", "Berlin", "Copenhagen", "Dublin", "Lisbon", "Madrid",
    "Oslo", "Prague", "Riga", "Tallinn", "Vienna", "Warsaw"};

inline constexpr std::array<const char*, 10> kPlaces = {
    "Chinatown", "Embarcadero", "Golden Gate Park", "Haight-Ashbury", "Marina District",
    "Mission District", "Nob Hill", "North Beach", "Russian Hill", "Sunset District"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }

  template <std::size_t N>
  std::vector<std::string> pick(const std::array<const char*, N>& pool, int count) {
    std::vector<std::string> all(pool.begin(), pool.end());
    std::shuffle(all.begin(), all.end(), engine_);
    all.resize(static_cast<std::size_t>(count));
    return all;
  }

  template <class T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), engine_); }

 private:
  std::mt19937_64 engine_;
};

inline void in_range(int value, int lo, int hi, const char* knob) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kInvalidArgument, knob,
                std::string(knob) + " = " + std::to_string(value) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

[[noreturn]] inline void infeasible(const std::string& subject, const std::string& why) {
  throw Error(ErrorCode::kInfeasibleParams, subject, why);
}

}  // namespace gen_detail

// ---------------------------------------------------------------------------

inline Generated<CalendarProblem, CalendarPlan> gen_calendar(const GenParams& params) {
  using namespace gen_detail;
  const CalendarKnobs& k = params.calendar;
  in_range(k.participants, 1, 6, "calendar.participants");
  in_range(k.blocks_per_participant, 0, 8, "calendar.blocks_per_participant");
  in_range(k.days, 1, 5, "calendar.days");
  in_range(k.preferences, 0, 3, "calendar.preferences");
  if (k.duration_minutes != 0 && (k.duration_minutes % 30 != 0 || k.duration_minutes > 240)) {
    throw Error(ErrorCode::kInvalidArgument, "calendar.duration_minutes",
                "duration must be a multiple of 30 up to 240");
  }

  Rng rng(params.seed);
  const int kSlot = 30;
  const Interval window(TimeOfDay::hm(9, 0), TimeOfDay::hm(17, 0));
  const int slots = duration_minutes(window) / kSlot;

  int total_blocks = k.participants * k.blocks_per_participant;
  if (params.target_constraint_count) {
    total_blocks = *params.target_constraint_count - 1 - k.preferences;
    if (total_blocks < 0) {
      infeasible("target_constraint_count",
                 "target " + std::to_string(*params.target_constraint_count) +
                     " is below the duration and preference constraints");
    }
  }

  std::vector<Weekday> days;
  for (int d = 0; d < 5; ++d) days.push_back(static_cast<Weekday>(d));
  rng.shuffle(days);
  days.resize(static_cast<std::size_t>(k.days));
  std::sort(days.begin(), days.end());

  const int duration = k.duration_minutes ? k.duration_minutes : kSlot * rng.uniform(1, 2);
  const int duration_slots = duration / kSlot;
  const Weekday witness_day = days[static_cast<std::size_t>(rng.uniform(0, k.days - 1))];
  const int witness_slot = rng.uniform(0, slots - duration_slots);
  const int base = window.start().minutes();
  const Interval witness(base + witness_slot * kSlot,
                         base + (witness_slot + duration_slots) * kSlot);

  auto names = rng.pick(kPeople, k.participants);
  // Occupied slots per participant and weekday.
  std::vector<std::vector<std::vector<bool>>> taken(
      names.size(), std::vector<std::vector<bool>>(7, std::vector<bool>(slots, false)));

  // Longest block that still leaves room for the rest on a crowded day.
  const int per_day = (total_blocks / k.participants + k.days) / k.days;
  const int max_length = std::clamp((slots - duration_slots) / std::max(per_day, 1) - 1, 1, 4);

  CalendarProblem::BusyMap busy;
  for (int b = 0; b < total_blocks; ++b) {
    const std::size_t who = static_cast<std::size_t>(b % k.participants);
    // Random day and length; the length shrinks until some start fits.
    std::vector<Weekday> day_order = days;
    rng.shuffle(day_order);
    bool placed = false;
    for (std::size_t d = 0; d < day_order.size() && !placed; ++d) {
      const Weekday day = day_order[d];
      auto& grid = taken[who][static_cast<std::size_t>(day)];
      for (int length = rng.uniform(1, max_length); length >= 1 && !placed; --length) {
        std::vector<int> starts;
        for (int start = 0; start + length <= slots; ++start) {
          const Interval block(base + start * kSlot, base + (start + length) * kSlot);
          if (day == witness_day && overlaps(block, witness)) continue;
          // A free slot on either side keeps blocks of one person from touching.
          bool free = true;
          for (int s = std::max(0, start - 1); s < std::min(slots, start + length + 1); ++s) {
            if (grid[static_cast<std::size_t>(s)]) free = false;
          }
          if (free) starts.push_back(start);
        }
        if (starts.empty()) continue;
        const int start = starts[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(starts.size()) - 1))];
        for (int s = start; s < start + length; ++s) grid[static_cast<std::size_t>(s)] = true;
        busy[names[who]].push_back(
            {day, Interval(base + start * kSlot, base + (start + length) * kSlot)});
        placed = true;
      }
    }
    if (!placed) {
      infeasible("calendar.blocks", "cannot place " + std::to_string(total_blocks) +
                                        " busy blocks around the witness slot");
    }
  }
  for (auto& [who, blocks] : busy) std::sort(blocks.begin(), blocks.end());

  std::vector<DayInterval> preferences;
  for (int i = 0; i < k.preferences; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      const Weekday day = days[static_cast<std::size_t>(rng.uniform(0, k.days - 1))];
      int lo = rng.uniform(0, slots - 1);
      int hi = rng.uniform(lo + 1, slots);
      if (rng.chance(0.5)) lo = 0;  // "before" style
      else hi = rng.chance(0.5) ? slots : hi;
      const Interval range(base + lo * kSlot, base + hi * kSlot);
      if (day == witness_day && overlaps(range, witness)) continue;
      const DayInterval pref{day, range};
      if (std::find(preferences.begin(), preferences.end(), pref) != preferences.end()) continue;
      preferences.push_back(pref);
      placed = true;
    }
    if (!placed) infeasible("calendar.preferences", "cannot place preferences off the witness");
  }

  return {CalendarProblem(names, days, window, duration, std::move(busy), std::move(preferences)),
          CalendarPlan{witness_day, witness}};
}

// ---------------------------------------------------------------------------

inline Generated<TripProblem, TripPlan> gen_trip(const GenParams& params) {
  using namespace gen_detail;
  const TripKnobs& k = params.trip;
  in_range(k.cities, 1, 6, "trip.cities");
  in_range(k.events, 0, k.cities, "trip.events");
  if (k.total_days < 0 || k.total_days > 30) {
    throw Error(ErrorCode::kInvalidArgument, "trip.total_days", "total_days outside [0, 30]");
  }
  if (!(k.edge_density >= 0.0 && k.edge_density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "trip.edge_density", "edge_density outside [0, 1]");
  }

  Rng rng(params.seed);
  const int n = k.cities;
  auto order = rng.pick(kCities, n);

  std::vector<int> durations(static_cast<std::size_t>(n));
  if (k.total_days == 0) {
    for (auto& d : durations) d = rng.uniform(2, 5);
  } else {
    const int sum = k.total_days + n - 1;
    if (sum < n) infeasible("trip.total_days", "too few days for the cities");
    const int floor_days = sum >= 2 * n ? 2 : 1;
    std::fill(durations.begin(), durations.end(), floor_days);
    for (int extra = sum - floor_days * n; extra > 0; --extra) {
      ++durations[static_cast<std::size_t>(rng.uniform(0, n - 1))];
    }
  }

  std::vector<TripSegment> segments;
  int day = 1;
  for (int i = 0; i < n; ++i) {
    const int hi = day + durations[static_cast<std::size_t>(i)] - 1;
    segments.push_back({day, hi, order[static_cast<std::size_t>(i)]});
    day = hi;
  }
  const int total_days = segments.back().day_hi;

  std::set<CityPair> flights;
  for (int i = 1; i < n; ++i) {
    flights.insert(CityPair(order[static_cast<std::size_t>(i - 1)],
                            order[static_cast<std::size_t>(i)]));
  }
  std::vector<CityPair> noise;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CityPair p(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
      if (!flights.count(p)) noise.push_back(p);
    }
  }
  rng.shuffle(noise);
  std::size_t noise_count = 0;
  if (params.target_constraint_count) {
    const int want = *params.target_constraint_count - 1 - n - k.events - (n - 1);
    if (want < 0 || want > static_cast<int>(noise.size())) {
      infeasible("target_constraint_count",
                 "target " + std::to_string(*params.target_constraint_count) +
                     " is unreachable with " + std::to_string(n) + " cities and " +
                     std::to_string(k.events) + " events");
    }
    noise_count = static_cast<std::size_t>(want);
  } else {
    for (const auto& p : noise) {
      (void)p;
      if (k.edge_density >= 1.0 || rng.chance(k.edge_density)) ++noise_count;
    }
  }
  flights.insert(noise.begin(), noise.begin() + static_cast<std::ptrdiff_t>(noise_count));

  std::vector<TripSegment> with_events = segments;
  rng.shuffle(with_events);
  std::vector<TripEvent> events;
  for (int i = 0; i < k.events; ++i) {
    const auto& seg = with_events[static_cast<std::size_t>(i)];
    const int lo = rng.uniform(seg.day_lo, seg.day_hi);
    const int hi = rng.uniform(lo, seg.day_hi);
    events.push_back({seg.city, lo, hi});
  }

  std::map<std::string, int> stay;
  for (const auto& s : segments) stay[s.city] = s.day_hi - s.day_lo + 1;
  return {TripProblem(total_days, std::move(stay), std::move(flights), std::move(events)),
          TripPlan(std::move(segments))};
}

// ---------------------------------------------------------------------------

inline Generated<MeetingProblem, MeetingPlan> gen_meeting(const GenParams& params) {
  using namespace gen_detail;
  const MeetingKnobs& k = params.meeting;
  in_range(k.locations, 2, 8, "meeting.locations");
  int friend_count = k.friends;
  if (params.target_constraint_count) {
    const int rest = *params.target_constraint_count - 1 - k.locations * (k.locations - 1);
    if (rest < 0 || rest % 2 != 0 || rest / 2 > 8) {
      infeasible("target_constraint_count",
                 "target " + std::to_string(*params.target_constraint_count) +
                     " cannot be met with " + std::to_string(k.locations) + " locations");
    }
    friend_count = rest / 2;
  }
  in_range(friend_count, 0, 8, "meeting.friends");

  Rng rng(params.seed);
  const int kGrid = 15;
  auto places = rng.pick(kPlaces, k.locations);
  MeetingProblem::TravelMap travel;
  for (const auto& a : places) {
    for (const auto& b : places) {
      if (a != b) travel[{a, b}] = rng.uniform(3, 30);
    }
  }
  const std::string start_location = places[static_cast<std::size_t>(rng.uniform(0, k.locations - 1))];
  const int start_time = 8 * 60 + kGrid * rng.uniform(0, 8);
  const int kLatest = 23 * 60;

  auto names = rng.pick(kPeople, friend_count);
  std::vector<Friend> friends;
  std::vector<Meeting> witness;
  std::string here = start_location;
  int now = start_time;
  for (int i = 0; i < friend_count; ++i) {
    const std::string& where = places[static_cast<std::size_t>(rng.uniform(0, k.locations - 1))];
    const int arrive = now + (here == where ? 0 : travel.at({here, where}));
    const int span = (kLatest - arrive) / (friend_count - i);
    const int max_units = std::min(8, (span - 30) / kGrid);
    if (max_units < 1) infeasible("meeting.friends", "the day is too short for the chain");
    const int start = arrive + kGrid * rng.uniform(0, 2);
    const int end = start + kGrid * rng.uniform(1, max_units);
    const int open = std::max(0, start - kGrid * rng.uniform(0, 4));
    const int close = std::min(kMinutesPerDay - 1, end + kGrid * rng.uniform(0, 6));
    friends.push_back({names[static_cast<std::size_t>(i)], where, Interval(open, close),
                       end - start});
    witness.push_back({names[static_cast<std::size_t>(i)], where, TimeOfDay(start),
                       TimeOfDay(end)});
    here = where;
    now = end;
  }
  rng.shuffle(friends);

  return {MeetingProblem(start_location, TimeOfDay(start_time),
                         std::set<std::string>(places.begin(), places.end()), std::move(travel),
                         std::move(friends)),
          MeetingPlan(std::move(witness))};
}

}  // namespace natplan

#endif  // NATPLAN_GENERATOR_HPP_

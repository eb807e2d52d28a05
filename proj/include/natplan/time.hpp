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

// Minute-resolution time of day, half-open intervals and weekdays.
// Everything is integral; there is no floating point in the time model.

#ifndef NATPLAN_TIME_HPP_
#define NATPLAN_TIME_HPP_

#include <array>
#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "natplan/error.hpp"

namespace natplan {

inline constexpr int kMinutesPerDay = 24 * 60;

class TimeOfDay {
 public:
  constexpr TimeOfDay() = default;

  // Throws kInvariantViolation unless 0 <= minutes < 1440.
  constexpr explicit TimeOfDay(int minutes) : minutes_(minutes) {
    if (minutes < 0 || minutes >= kMinutesPerDay) {
      throw Error(ErrorCode::kInvariantViolation, "time_of_day.range",
                  "time of day out of range: " + std::to_string(minutes));
    }
  }

  static constexpr TimeOfDay hm(int hours, int minutes) {
    return TimeOfDay(hours * 60 + minutes);
  }

  constexpr int minutes() const noexcept { return minutes_; }

  friend constexpr auto operator<=>(TimeOfDay, TimeOfDay) = default;

 private:
  int minutes_ = 0;
};

// Half-open [start, end) with start < end.
class Interval {
 public:
  constexpr Interval(TimeOfDay start, TimeOfDay end) : start_(start), end_(end) {
    if (!(start < end)) {
      throw Error(ErrorCode::kInvariantViolation, "interval.order",
                  "interval start must precede end (" +
                      std::to_string(start.minutes()) + " >= " +
                      std::to_string(end.minutes()) + ")");
    }
  }
  constexpr Interval(int start_minutes, int end_minutes)
      : Interval(TimeOfDay(start_minutes), TimeOfDay(end_minutes)) {}

  constexpr TimeOfDay start() const noexcept { return start_; }
  constexpr TimeOfDay end() const noexcept { return end_; }

  constexpr bool contains(const Interval& other) const noexcept {
    return start_ <= other.start_ && other.end_ <= end_;
  }

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;

 private:
  TimeOfDay start_;
  TimeOfDay end_;
};

constexpr bool overlaps(const Interval& a, const Interval& b) noexcept {
  return a.start() < b.end() && b.start() < a.end();
}

constexpr int duration_minutes(const Interval& a) noexcept {
  return a.end().minutes() - a.start().minutes();
}

enum class TimeStyle { k24h, k12h };

inline std::string format_time(TimeOfDay t, TimeStyle style = TimeStyle::k24h) {
  const int h = t.minutes() / 60;
  const int m = t.minutes() % 60;
  std::string mm = (m < 10 ? "0" : "") + std::to_string(m);
  if (style == TimeStyle::k24h) {
    return (h < 10 ? "0" : "") + std::to_string(h) + ":" + mm;
  }
  const int h12 = h % 12 == 0 ? 12 : h % 12;
  return std::to_string(h12) + ":" + mm + (h < 12 ? "AM" : "PM");
}

// Accepts "H:MM", "HH:MM", "H:MMAM"/"H:MMPM" and "HAM"/"HPM". The meridiem
// may be lower case and may be separated by one space.
inline TimeOfDay parse_time(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kUnrecognizedTimeFormat, std::string(text),
                 "unrecognized time '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto read_digits = [&](std::size_t max_len) -> std::optional<int> {
    std::size_t begin = i;
    int value = 0;
    while (i < text.size() && i - begin < max_len &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    if (i == begin) return std::nullopt;
    return value;
  };

  auto hours = read_digits(2);
  if (!hours) throw fail();
  int minutes = 0;
  bool has_minutes = false;
  if (i < text.size() && text[i] == ':') {
    ++i;
    std::size_t begin = i;
    auto mins = read_digits(2);
    if (!mins || i - begin != 2 || *mins > 59) throw fail();
    minutes = *mins;
    has_minutes = true;
  }
  if (i < text.size() && text[i] == ' ') ++i;

  std::optional<bool> pm;
  if (i + 2 == text.size()) {
    char a = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    char b = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i + 1])));
    if (b != 'M' || (a != 'A' && a != 'P')) throw fail();
    pm = (a == 'P');
    i += 2;
  }
  if (i != text.size()) throw fail();

  if (pm) {
    if (*hours < 1 || *hours > 12) throw fail();
    int h = *hours % 12 + (*pm ? 12 : 0);
    return TimeOfDay(h * 60 + minutes);
  }
  if (!has_minutes || *hours > 23) throw fail();
  return TimeOfDay(*hours * 60 + minutes);
}

enum class Weekday { kMonday, kTuesday, kWednesday, kThursday, kFriday,
                     kSaturday, kSunday };

inline constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday",
    "Sunday"};

inline std::string_view to_string(Weekday day) {
  return kWeekdayNames[static_cast<std::size_t>(day)];
}

inline std::optional<Weekday> weekday_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kWeekdayNames.size(); ++i) {
    if (kWeekdayNames[i] == name) return static_cast<Weekday>(i);
  }
  return std::nullopt;
}

inline Weekday parse_weekday(std::string_view name) {
  if (auto day = weekday_from_name(name)) return *day;
  throw Error(ErrorCode::kInvalidArgument, std::string(name),
              "unknown weekday '" + std::string(name) + "'");
}

}  // namespace natplan

#endif  // NATPLAN_TIME_HPP_

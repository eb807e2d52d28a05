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

// Sentence-anchored parsers for the templated problem statements of the
// calendar, trip and meeting tasks.
//
// The input is normalized (embedded JSON answer examples removed, whitespace
// collapsed), split into sentences, and section headers such as "TASK:" are
// stripped. Every sentence must then match either a known boilerplate form or
// a constraint form. A sentence matching neither is a hard error when it looks
// constraint-bearing (it mentions a number, a weekday or a known entity) and
// is otherwise recorded in ParseDiagnostics::unrecognized_sentences.

#ifndef NATPLAN_PARSER_HPP_
#define NATPLAN_PARSER_HPP_

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/error.hpp"
#include "natplan/time.hpp"

namespace natplan {

struct ParseWarning {
  std::string sentence;
  std::string message;

  bool operator==(const ParseWarning&) const = default;
};

struct ParseDiagnostics {
  std::vector<ParseWarning> warnings;
  std::vector<std::string> unrecognized_sentences;

  bool operator==(const ParseDiagnostics&) const = default;
};

template <class ProblemT>
struct Parsed {
  ProblemT problem;
  ParseDiagnostics diagnostics;
};

namespace parse_detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Removes balanced {...} spans (answer-format examples embedded in prompts).
// Braces inside JSON strings are respected. An unbalanced '{' is kept.
inline std::string strip_braced(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      out.push_back(text[i++]);
      continue;
    }
    int depth = 0;
    bool in_string = false;
    std::size_t j = i;
    for (; j < text.size(); ++j) {
      char c = text[j];
      if (in_string) {
        if (c == '\\') ++j;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '{') ++depth;
      else if (c == '}' && --depth == 0) break;
    }
    if (j >= text.size()) {
      out.push_back(text[i++]);
      continue;
    }
    out.push_back(' ');
    i = j + 1;
  }
  return out;
}

inline std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Splits on '.' or ';' followed by whitespace or end of text. Times use ':'
// and decimals have a digit after the dot, so neither is split.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '.' || c == ';') &&
        (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      std::string s = trim(text.substr(begin, i - begin));
      if (!s.empty()) out.push_back(std::move(s));
      begin = i + 1;
    }
  }
  std::string tail = trim(text.substr(begin));
  if (!tail.empty()) out.push_back(std::move(tail));
  return out;
}

inline std::string strip_headers(std::string sentence) {
  static const std::regex kHeader(
      R"(^(?:TASK|CONSTRAINTS|SOLUTION|Here are the existing schedules for everyone during the day|Here are a few example tasks and solutions|Travel distances \(in minutes\))\s*:\s*)");
  std::smatch m;
  while (std::regex_search(sentence, m, kHeader)) {
    sentence = sentence.substr(static_cast<std::size_t>(m.length(0)));
  }
  return trim(sentence);
}

inline std::vector<std::string> sentences_of(std::string_view text) {
  std::vector<std::string> out;
  for (auto& s : split_sentences(collapse_whitespace(strip_braced(text)))) {
    std::string stripped = strip_headers(std::move(s));
    if (!stripped.empty()) out.push_back(std::move(stripped));
  }
  return out;
}

inline bool matches_any(const std::string& s, const std::vector<std::regex>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const std::regex& r) { return std::regex_search(s, r); });
}

inline const std::vector<std::regex>& common_boilerplate() {
  static const std::vector<std::regex> kPatterns = {
      std::regex(R"(^You are an expert at )"),
      std::regex(R"(^Please provide your solution in (?:a )?JSON format)"),
      std::regex(R"(^Here are a few example tasks and solutions$)"),
  };
  return kPatterns;
}

inline bool contains_word(const std::string& sentence, const std::string& word) {
  std::size_t pos = 0;
  while ((pos = sentence.find(word, pos)) != std::string::npos) {
    auto boundary = [&](std::size_t at) {
      return at >= sentence.size() || !std::isalnum(static_cast<unsigned char>(sentence[at]));
    };
    if ((pos == 0 || boundary(pos - 1)) && boundary(pos + word.size())) return true;
    pos += word.size();
  }
  return false;
}

// A sentence is constraint-bearing when it carries a number, a weekday or a
// name of something the problem talks about.
inline bool constraint_bearing(const std::string& sentence,
                               const std::vector<std::string>& entities) {
  if (std::any_of(sentence.begin(), sentence.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return true;
  }
  for (auto name : kWeekdayNames) {
    if (contains_word(sentence, std::string(name))) return true;
  }
  return std::any_of(entities.begin(), entities.end(),
                     [&](const std::string& e) { return contains_word(sentence, e); });
}

inline void settle_unrecognized(const std::vector<std::string>& unrecognized,
                                const std::vector<std::string>& entities,
                                ParseDiagnostics& diagnostics) {
  for (const auto& s : unrecognized) {
    if (constraint_bearing(s, entities)) {
      throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                  "constraint-bearing sentence not understood: \"" + s + "\"");
    }
    diagnostics.unrecognized_sentences.push_back(s);
  }
}

inline TimeOfDay time_in(const std::string& sentence, const std::string& text) {
  try {
    return parse_time(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kUnrecognizedTimeFormat, sentence,
                std::string(e.what()) + " in \"" + sentence + "\"");
  }
}

// "James and John", "A, B and C", "A, B, and C".
inline std::vector<std::string> split_name_list(std::string text,
                                                const std::string& conjunction) {
  std::vector<std::string> out;
  const std::string serial = ", " + conjunction + " ";
  const std::string plain = " " + conjunction + " ";
  for (const auto& needle : {serial, plain}) {
    std::size_t pos;
    while ((pos = text.find(needle)) != std::string::npos) {
      text.replace(pos, needle.size(), ", ");
    }
  }
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(", ", begin);
    if (end == std::string::npos) end = text.size();
    std::string item = trim(std::string_view(text).substr(begin, end - begin));
    if (!item.empty()) out.push_back(item);
    begin = end + 2;
  }
  return out;
}

inline std::optional<int> small_number(const std::string& word) {
  static const std::vector<std::string> kWords = {"zero", "one", "two", "three", "four",
                                                  "five", "six", "seven", "eight",
                                                  "nine", "ten"};
  for (std::size_t i = 0; i < kWords.size(); ++i) {
    if (word == kWords[i]) return static_cast<int>(i);
  }
  if (!word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    return std::stoi(word);
  }
  return std::nullopt;
}

inline std::optional<int> duration_phrase_minutes(const std::string& phrase) {
  if (phrase == "half an hour" || phrase == "30 minutes") return 30;
  if (phrase == "an hour" || phrase == "one hour") return 60;
  if (phrase == "one and a half hours" || phrase == "an hour and a half" ||
      phrase == "1.5 hours") {
    return 90;
  }
  static const std::regex kAmount(R"(^(\w+) (hours?|minutes?|mins?)$)");
  std::smatch m;
  if (std::regex_match(phrase, m, kAmount)) {
    auto n = small_number(m[1].str());
    if (!n || *n <= 0) return std::nullopt;
    return m[2].str().rfind("hour", 0) == 0 ? *n * 60 : *n;
  }
  return std::nullopt;
}

}  // namespace parse_detail

// ---------------------------------------------------------------------------
// Calendar

inline Parsed<CalendarProblem> parse_calendar(std::string_view text) {
  using namespace parse_detail;
  static const std::regex kTask(
      R"(^You need to schedule a meeting for (.+?) for (.+?) between the work hours of (\S+) to (\S+) on (.+)$)");
  static const std::regex kBusy(
      R"(^(.+?) (?:has blocked their calendar|is busy|has meetings) on (.+)$)");
  static const std::regex kFree(
      R"(^(.+?)(?:'s calendar is wide open| has no meetings| is free)(?: for)? the (?:entire|whole) (?:day|week)$)");
  static const std::regex kPreference(
      R"(^(?:(.+?) )?(?:would rather not meet|would like to avoid more meetings|do(?:es)? not want to meet|can ?not meet|would prefer not to meet|prefers? not to meet)(?: on (\w+))?(?: (before|after) (\S+)| between (\S+) and (\S+))?$)",
      std::regex::icase);
  static const std::regex kEarliest(
      R"(^.+ would like to meet at (?:their|his|her) earliest availability$)");
  static const std::regex kDayDuring(
      R"((Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday) during )");
  static const std::vector<std::regex> kBoilerplate = {
      std::regex(R"(^You are given a few constraints on the existing schedule)"),
      std::regex(R"(^Note there exists a solution that works)"),
      std::regex(R"(^Find a time that works for everyone)"),
  };

  struct RawPreference {
    std::string sentence;
    std::optional<Weekday> day;
    std::string kind;  // "", "before", "after", "between"
    TimeOfDay a, b;
  };

  ParseDiagnostics diagnostics;
  std::vector<std::string> unrecognized;
  std::optional<std::vector<std::string>> participants;
  std::optional<int> duration;
  std::optional<Interval> work_window;
  std::vector<Weekday> days;
  CalendarProblem::BusyMap busy;
  std::vector<RawPreference> raw_prefs;

  for (const auto& s : sentences_of(text)) {
    std::smatch m;
    if (matches_any(s, common_boilerplate()) || matches_any(s, kBoilerplate)) continue;

    if (std::regex_match(s, m, kTask)) {
      participants = split_name_list(m[1].str(), "and");
      duration = duration_phrase_minutes(m[2].str());
      if (!duration) {
        throw Error(ErrorCode::kMissingDuration, s,
                    "unrecognized meeting duration '" + m[2].str() + "'");
      }
      work_window = Interval(time_in(s, m[3].str()), time_in(s, m[4].str()));
      std::string day_text = m[5].str();
      if (day_text.rfind("either ", 0) == 0) day_text = day_text.substr(7);
      for (const auto& name : split_name_list(day_text, "or")) {
        auto day = weekday_from_name(name);
        if (!day) {
          throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                      "unknown weekday '" + name + "' in \"" + s + "\"");
        }
        days.push_back(*day);
      }
      continue;
    }

    if (std::regex_match(s, m, kBusy)) {
      const std::string who = m[1].str();
      const std::string rest = m[2].str();
      auto& blocks = busy[who];
      // Each "<Day> during " marker starts a comma-separated interval list.
      std::vector<std::pair<Weekday, std::size_t>> markers;
      std::vector<std::size_t> marker_begins;
      for (std::sregex_iterator it(rest.begin(), rest.end(), kDayDuring), end; it != end; ++it) {
        markers.emplace_back(*weekday_from_name((*it)[1].str()),
                             static_cast<std::size_t>(it->position(0) + it->length(0)));
        marker_begins.push_back(static_cast<std::size_t>(it->position(0)));
      }
      if (markers.empty() || marker_begins.front() != 0) {
        throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                    "busy sentence without '<day> during' list: \"" + s + "\"");
      }
      for (std::size_t k = 0; k < markers.size(); ++k) {
        std::size_t stop = k + 1 < markers.size() ? marker_begins[k + 1] : rest.size();
        std::string chunk = rest.substr(markers[k].second, stop - markers[k].second);
        while (!chunk.empty() && (chunk.back() == ',' || chunk.back() == ' ')) chunk.pop_back();
        for (const auto& item : split_name_list(chunk, "and")) {
          static const std::regex kRange(R"(^(\S+) to (\S+)$)");
          std::smatch r;
          if (!std::regex_match(item, r, kRange)) {
            throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                        "cannot read busy range '" + item + "' in \"" + s + "\"");
          }
          blocks.push_back({markers[k].first,
                            Interval(time_in(s, r[1].str()), time_in(s, r[2].str()))});
        }
      }
      continue;
    }

    if (std::regex_match(s, m, kFree)) {
      busy.try_emplace(m[1].str());
      continue;
    }

    if (std::regex_match(s, m, kEarliest)) {
      diagnostics.warnings.push_back(
          {s, "earliest-availability preference is a tie-breaker; no constraint emitted"});
      continue;
    }

    if (std::regex_match(s, m, kPreference)) {
      RawPreference p{s, std::nullopt, "", TimeOfDay(), TimeOfDay()};
      if (m[2].matched) {
        p.day = weekday_from_name(m[2].str());
        if (!p.day) {
          throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                      "unknown weekday in preference \"" + s + "\"");
        }
      }
      if (m[3].matched) {
        p.kind = m[3].str();
        std::transform(p.kind.begin(), p.kind.end(), p.kind.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        p.a = time_in(s, m[4].str());
      } else if (m[5].matched) {
        p.kind = "between";
        p.a = time_in(s, m[5].str());
        p.b = time_in(s, m[6].str());
      }
      raw_prefs.push_back(std::move(p));
      continue;
    }

    unrecognized.push_back(s);
  }

  if (!participants || !duration || !work_window) {
    throw Error(ErrorCode::kMissingDuration, "task",
                "no 'You need to schedule a meeting for ...' sentence with a duration");
  }

  std::vector<DayInterval> preferences;
  for (const auto& p : raw_prefs) {
    std::vector<Weekday> pref_days = p.day ? std::vector<Weekday>{*p.day} : days;
    int lo = work_window->start().minutes();
    int hi = work_window->end().minutes();
    if (p.kind == "before") hi = p.a.minutes();
    else if (p.kind == "after") lo = p.a.minutes();
    else if (p.kind == "between") lo = p.a.minutes(), hi = p.b.minutes();
    lo = std::max(lo, work_window->start().minutes());
    hi = std::min(hi, work_window->end().minutes());
    if (lo >= hi) {
      diagnostics.warnings.push_back({p.sentence, "preference excludes no working time"});
      continue;
    }
    for (auto d : pref_days) preferences.push_back({d, Interval(lo, hi)});
  }

  std::vector<std::string> entities = *participants;
  settle_unrecognized(unrecognized, entities, diagnostics);

  // Participants never mentioned in a schedule sentence are free.
  for (auto it = busy.begin(); it != busy.end();) {
    it = it->second.empty() ? busy.erase(it) : std::next(it);
  }
  return {CalendarProblem(std::move(*participants), std::move(days), *work_window,
                          *duration, std::move(busy), std::move(preferences)),
          std::move(diagnostics)};
}

// ---------------------------------------------------------------------------
// Trip

inline Parsed<TripProblem> parse_trip(std::string_view text) {
  using namespace parse_detail;
  static const std::regex kHeader(
      R"(^You plan to visit (\d+) (?:[A-Z][a-z]+ )?cities for (\d+) days in total$)");
  static const std::regex kSpend(
      R"(^You (?:want|would like|plan|wish|need) to spend (\d+) days? in (.+)$)");
  static const std::regex kStay(
      R"(^You (?:want|would like|plan|wish|need) to (?:visit|stay in) (.+?) for (\d+) days?$)");
  static const std::regex kFlights(R"(^Here are the cities that have direct flights\s*:\s*(.+)$)");
  static const std::regex kWindow(
      R"((?:between|from|during) day (\d+) (?:and|to) day (\d+))", std::regex::icase);
  static const std::regex kSingleDay(R"(\bon day (\d+)\b)", std::regex::icase);
  static const std::vector<std::regex> kBoilerplate = {
      std::regex(R"(^You only take direct flights to commute between cities$)"),
      std::regex(R"(^Find a trip plan of visiting the cities for \d+ days by taking direct flights)"),
  };

  ParseDiagnostics diagnostics;
  std::vector<std::string> unrecognized;
  std::optional<int> total_days;
  std::optional<int> stated_city_count;
  std::map<std::string, int> durations;
  std::vector<std::pair<std::string, std::string>> raw_flights;
  std::vector<std::string> flight_sentences;
  struct RawEvent { std::string sentence; int lo, hi; };
  std::vector<RawEvent> raw_events;

  for (const auto& s : sentences_of(text)) {
    std::smatch m;
    if (matches_any(s, common_boilerplate()) || matches_any(s, kBoilerplate)) continue;
    if (std::regex_match(s, m, kHeader)) {
      stated_city_count = std::stoi(m[1].str());
      total_days = std::stoi(m[2].str());
      continue;
    }
    if (std::regex_match(s, m, kSpend) || std::regex_match(s, m, kStay)) {
      const bool spend_form = std::regex_match(s, kSpend);
      const std::string city = spend_form ? m[2].str() : m[1].str();
      const int days = std::stoi(spend_form ? m[1].str() : m[2].str());
      if (!durations.emplace(city, days).second) {
        throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                    "second duration for '" + city + "' in \"" + s + "\"");
      }
      continue;
    }
    if (std::regex_match(s, m, kFlights)) {
      for (const auto& item : split_name_list(m[1].str(), "or")) {
        if (item.rfind("from ", 0) == 0) {
          throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                      "one-way flight '" + item + "' is not supported: \"" + s + "\"");
        }
        auto pos = item.find(" and ");
        if (pos == std::string::npos) {
          throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                      "cannot read flight '" + item + "' in \"" + s + "\"");
        }
        raw_flights.emplace_back(trim(item.substr(0, pos)), trim(item.substr(pos + 5)));
      }
      continue;
    }
    if (std::regex_search(s, m, kWindow)) {
      raw_events.push_back({s, std::stoi(m[1].str()), std::stoi(m[2].str())});
      continue;
    }
    if (std::regex_search(s, m, kSingleDay)) {
      int day = std::stoi(m[1].str());
      raw_events.push_back({s, day, day});
      continue;
    }
    unrecognized.push_back(s);
  }

  if (!total_days) {
    throw Error(ErrorCode::kUnconsumedConstraintSentence, "header",
                "no 'You plan to visit N cities for D days in total' sentence");
  }

  std::vector<std::string> cities;
  for (const auto& [city, days] : durations) cities.push_back(city);

  // Event sentences name their city somewhere; the longest known city name
  // that occurs wins so "San Sebastian" is not read as "San".
  std::vector<TripEvent> events;
  for (const auto& e : raw_events) {
    std::vector<std::string> found;
    for (const auto& c : cities) {
      if (contains_word(e.sentence, c)) found.push_back(c);
    }
    std::erase_if(found, [&](const std::string& c) {
      return std::any_of(found.begin(), found.end(), [&](const std::string& o) {
        return o != c && o.find(c) != std::string::npos;
      });
    });
    if (found.size() != 1) {
      throw Error(ErrorCode::kUnconsumedConstraintSentence, e.sentence,
                  "event sentence must name exactly one known city: \"" + e.sentence + "\"");
    }
    events.push_back({found.front(), e.lo, e.hi});
  }

  settle_unrecognized(unrecognized, cities, diagnostics);

  std::set<CityPair> flights;
  for (auto& [a, b] : raw_flights) flights.insert(CityPair(a, b));

  if (stated_city_count && *stated_city_count != static_cast<int>(durations.size())) {
    throw Error(ErrorCode::kInvariantViolation, "trip.city_count",
                "trip.city_count: header announces " + std::to_string(*stated_city_count) +
                    " cities but durations name " + std::to_string(durations.size()));
  }
  return {TripProblem(*total_days, std::move(durations), std::move(flights),
                      std::move(events)),
          std::move(diagnostics)};
}

// ---------------------------------------------------------------------------
// Meeting

inline Parsed<MeetingProblem> parse_meeting(std::string_view text) {
  using namespace parse_detail;
  static const std::regex kTravel(R"(^(.+?) to (.+?): (\d+)$)");
  static const std::regex kArrive(R"(^You arrive at (.+?) at (\S+)$)");
  static const std::regex kWindow(R"(^(.+?) will be at (.+?) from (\S+) to (\S+)$)");
  static const std::regex kMinimum(
      R"(^You(?:'d| would) like to meet (.+?) for a minimum of (\d+) minutes$)");
  static const std::vector<std::regex> kBoilerplate = {
      std::regex(R"(^You are visiting .+ for the day and want to meet as many friends as possible$)"),
      std::regex(R"(^Solve the problem by considering various different schedules)"),
  };

  ParseDiagnostics diagnostics;
  std::vector<std::string> unrecognized;
  std::optional<std::string> start_location;
  std::optional<TimeOfDay> start_time;
  MeetingProblem::TravelMap travel;
  std::set<std::string> locations;
  struct RawFriend { std::string name, location; Interval window; };
  std::vector<RawFriend> windows;
  std::map<std::string, int> minimums;

  for (const auto& s : sentences_of(text)) {
    std::smatch m;
    if (matches_any(s, common_boilerplate()) || matches_any(s, kBoilerplate)) continue;
    if (std::regex_match(s, m, kArrive)) {
      start_location = m[1].str();
      start_time = time_in(s, m[2].str());
      locations.insert(*start_location);
      continue;
    }
    if (std::regex_match(s, m, kWindow)) {
      windows.push_back({m[1].str(), m[2].str(),
                         Interval(time_in(s, m[3].str()), time_in(s, m[4].str()))});
      locations.insert(m[2].str());
      continue;
    }
    if (std::regex_match(s, m, kMinimum)) {
      if (!minimums.emplace(m[1].str(), std::stoi(m[2].str())).second) {
        throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                    "second minimum duration for '" + m[1].str() + "'");
      }
      continue;
    }
    if (std::regex_match(s, m, kTravel)) {
      auto key = std::make_pair(m[1].str(), m[2].str());
      if (!travel.emplace(key, std::stoi(m[3].str())).second) {
        throw Error(ErrorCode::kUnconsumedConstraintSentence, s,
                    "duplicate travel entry \"" + s + "\"");
      }
      locations.insert(key.first);
      locations.insert(key.second);
      continue;
    }
    unrecognized.push_back(s);
  }

  if (!start_location || !start_time) {
    throw Error(ErrorCode::kUnconsumedConstraintSentence, "start",
                "no 'You arrive at <place> at <time>' sentence");
  }

  std::vector<Friend> friends;
  std::vector<std::string> entities(locations.begin(), locations.end());
  for (const auto& w : windows) {
    auto it = minimums.find(w.name);
    if (it == minimums.end()) {
      throw Error(ErrorCode::kMissingDuration, w.name,
                  "no minimum meeting duration stated for '" + w.name + "'");
    }
    friends.push_back({w.name, w.location, w.window, it->second});
    entities.push_back(w.name);
    minimums.erase(it);
  }
  if (!minimums.empty()) {
    const std::string& who = minimums.begin()->first;
    throw Error(ErrorCode::kUnconsumedConstraintSentence, who,
                "minimum duration for '" + who + "' who has no availability sentence");
  }
  settle_unrecognized(unrecognized, entities, diagnostics);

  return {MeetingProblem(std::move(*start_location), *start_time, std::move(locations),
                         std::move(travel), std::move(friends)),
          std::move(diagnostics)};
}

inline Parsed<Problem> parse_problem(Task task, std::string_view text) {
  switch (task) {
    case Task::kCalendar: {
      auto p = parse_calendar(text);
      return {Problem(std::move(p.problem)), std::move(p.diagnostics)};
    }
    case Task::kTrip: {
      auto p = parse_trip(text);
      return {Problem(std::move(p.problem)), std::move(p.diagnostics)};
    }
    case Task::kMeeting: {
      auto p = parse_meeting(text);
      return {Problem(std::move(p.problem)), std::move(p.diagnostics)};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "task", "unknown task");
}

}  // namespace natplan

#endif  // NATPLAN_PARSER_HPP_

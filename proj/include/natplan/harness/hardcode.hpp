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

// Heuristic detection of programs that print a precomputed answer.
//
// The plan is reduced to an ordered list of atoms (weekday and times for
// calendar; day numbers and city names per segment for trip; person and times
// per meeting). The source is lexed as Python into logical statements, and
// runs of consecutive statements that carry literals form clusters. The
// matched fraction is the longest common subsequence between the atoms and a
// cluster's literal pieces, maximized over clusters. A program is suspected
// when that fraction reaches kHardcodeThreshold and no search construct
// appears anywhere in the code.

#ifndef NATPLAN_HARNESS_HARDCODE_HPP_
#define NATPLAN_HARNESS_HARDCODE_HPP_

#include <algorithm>
#include <cctype>
#include <cstring>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "natplan/domain.hpp"
#include "natplan/serialize.hpp"
#include "natplan/time.hpp"

namespace natplan::harness {

inline constexpr double kHardcodeThreshold = 0.8;

struct HardcodeVerdict {
  bool suspected = false;
  double matched_atoms = 0.0;
  bool search_tokens_found = false;
  std::vector<std::string> search_tokens;  // distinct, in order of appearance
};

inline Json to_json(const HardcodeVerdict& v) {
  return {{"suspected", v.suspected},
          {"matched_atoms", v.matched_atoms},
          {"search_tokens_found", v.search_tokens_found},
          {"search_tokens", v.search_tokens}};
}

namespace hardcode_detail {

struct Statement {
  int indent = 0;
  std::vector<std::string> literals;     // string contents and numbers
  std::vector<std::string> identifiers;  // code words outside strings/comments
  std::vector<bool> called;              // identifiers[i] is followed by '('
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Splits Python source into logical statements. Newlines inside brackets or
// strings continue a statement, as do backslash continuations.
inline std::vector<Statement> lex(std::string_view src) {
  std::vector<Statement> out;
  Statement cur;
  bool at_line_start = true;
  int column = 0;
  int depth = 0;
  auto flush = [&] {
    if (!cur.literals.empty() || !cur.identifiers.empty()) out.push_back(std::move(cur));
    cur = Statement{};
  };

  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (at_line_start) {
      if (c == ' ' || c == '\t') { ++column; ++i; continue; }
      if (c == '\n' || c == '\r') { column = 0; ++i; continue; }
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') ++i;
        continue;
      }
      if (depth == 0 && cur.literals.empty() && cur.identifiers.empty()) cur.indent = column;
      at_line_start = false;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '\\' && i + 1 < src.size() && src[i + 1] == '\n') { i += 2; continue; }
    if (c == '\n') {
      ++i;
      if (depth == 0) { flush(); at_line_start = true; column = 0; }
      continue;
    }
    if (c == ';' && depth == 0) { ++i; flush(); continue; }
    if (c == '(' || c == '[' || c == '{') {
      if (c == '(' && !cur.identifiers.empty() && cur.called.size() == cur.identifiers.size() &&
          i > 0 && ident_char(src[i - 1])) {
        cur.called.back() = true;
      }
      ++depth; ++i; continue;
    }
    if (c == ')' || c == ']' || c == '}') { depth = std::max(0, depth - 1); ++i; continue; }

    // String literal with optional prefix letters.
    std::size_t j = i;
    while (j < src.size() && j - i < 2 && src[j] != '\0' && std::strchr("rRbBuUfF", src[j])) ++j;
    if (j < src.size() && (src[j] == '"' || src[j] == '\'') &&
        (j == i || !ident_char(i > 0 ? src[i - 1] : ' '))) {
      const char q = src[j];
      const bool triple = j + 2 < src.size() && src[j + 1] == q && src[j + 2] == q;
      const std::string_view close = src.substr(j, triple ? 3 : 1);
      std::size_t k = j + close.size();
      std::string content;
      while (k < src.size() && src.substr(k, close.size()) != close) {
        if (src[k] == '\\' && k + 1 < src.size()) { content += src[k + 1]; k += 2; continue; }
        if (!triple && src[k] == '\n') break;
        content += src[k++];
      }
      cur.literals.push_back(content);
      i = std::min(src.size(), k + close.size());
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t k = i;
      while (k < src.size() && (ident_char(src[k]) || src[k] == '.')) ++k;
      cur.literals.emplace_back(src.substr(i, k - i));
      i = k;
      continue;
    }
    if (ident_start(c)) {
      std::size_t k = i;
      while (k < src.size() && ident_char(src[k])) ++k;
      cur.identifiers.emplace_back(src.substr(i, k - i));
      cur.called.push_back(false);
      i = k;
      continue;
    }
    ++i;
  }
  flush();
  return out;
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Literal text broken into comparable pieces: times become "t:HH:MM",
// integers "n:<value>", other words lower-cased "w:<word>".
inline std::vector<std::string> pieces(const std::string& text) {
  static const std::regex kPiece(
      R"((\d{1,2}:\d{2}(?:\s*[AaPp][Mm])?)|(\d+)|([A-Za-z][A-Za-z'\-]*))");
  std::vector<std::string> out;
  for (std::sregex_iterator it(text.begin(), text.end(), kPiece), end; it != end; ++it) {
    const auto& m = *it;
    if (m[1].matched) {
      try {
        out.push_back("t:" + format_time(parse_time(m[1].str())));
      } catch (const Error&) {
        out.push_back("w:" + m[1].str());
      }
    } else if (m[2].matched) {
      out.push_back("n:" + std::to_string(std::stoll(m[2].str().substr(0, 9))));
    } else {
      out.push_back("w:" + lower(m[3].str()));
    }
  }
  return out;
}

inline std::vector<std::string> atoms_of(const Plan& plan) {
  std::vector<std::string> atoms;
  auto add_words = [&](const std::string& text) {
    for (auto& p : pieces(text)) atoms.push_back(std::move(p));
  };
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CalendarPlan>) {
          add_words(std::string(to_string(p.day)));
          atoms.push_back("t:" + format_time(p.slot.start()));
          atoms.push_back("t:" + format_time(p.slot.end()));
        } else if constexpr (std::is_same_v<P, TripPlan>) {
          for (const auto& s : p.segments()) {
            atoms.push_back("n:" + std::to_string(s.day_lo));
            atoms.push_back("n:" + std::to_string(s.day_hi));
            add_words(s.city);
          }
        } else {
          for (const auto& m : p.meetings()) {
            add_words(m.person);
            atoms.push_back("t:" + format_time(m.start));
            atoms.push_back("t:" + format_time(m.end));
          }
        }
      },
      plan);
  return atoms;
}

inline std::size_t lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const auto& x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = x == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

inline const std::set<std::string>& search_identifiers() {
  static const std::set<std::string> kWords = {
      "for", "while", "permutations", "product", "combinations", "z3", "Solver",
      "Optimize", "SolverFor", "check", "minimize", "maximize"};
  return kWords;
}

inline std::vector<std::string> search_tokens(const std::vector<Statement>& statements) {
  std::vector<std::string> found;
  auto note = [&](const std::string& t) {
    if (std::find(found.begin(), found.end(), t) == found.end()) found.push_back(t);
  };
  for (std::size_t s = 0; s < statements.size(); ++s) {
    const auto& st = statements[s];
    for (const auto& id : st.identifiers) {
      if (search_identifiers().count(id)) note(id);
    }
    // def f(...): whose body calls f.
    if (st.identifiers.size() >= 2 && st.identifiers[0] == "def") {
      const std::string& name = st.identifiers[1];
      for (std::size_t b = s + 1; b < statements.size() && statements[b].indent > st.indent; ++b) {
        const auto& body = statements[b];
        for (std::size_t k = 0; k < body.identifiers.size(); ++k) {
          if (body.identifiers[k] == name && body.called[k]) note("recursion:" + name);
        }
      }
    }
  }
  return found;
}

}  // namespace hardcode_detail

inline HardcodeVerdict detect_hardcoding(std::string_view source, const Plan& plan) {
  using namespace hardcode_detail;
  HardcodeVerdict v;
  const auto statements = lex(source);
  v.search_tokens = search_tokens(statements);
  v.search_tokens_found = !v.search_tokens.empty();

  const auto atoms = atoms_of(plan);
  if (!atoms.empty()) {
    std::size_t best = 0;
    std::vector<std::string> cluster;
    auto close_cluster = [&] {
      best = std::max(best, lcs(atoms, cluster));
      cluster.clear();
    };
    for (const auto& st : statements) {
      if (st.literals.empty()) {
        close_cluster();
        continue;
      }
      for (const auto& lit : st.literals) {
        for (auto& p : pieces(lit)) cluster.push_back(std::move(p));
      }
    }
    close_cluster();
    v.matched_atoms = static_cast<double>(best) / static_cast<double>(atoms.size());
  }
  v.suspected = v.matched_atoms >= kHardcodeThreshold && !v.search_tokens_found;
  return v;
}

}  // namespace natplan::harness

#endif  // NATPLAN_HARNESS_HARDCODE_HPP_

// Copyright 2026 The Symharm Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMHARM_SCALE_HPP
#define SYMHARM_SCALE_HPP

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symharm/rational.hpp"

namespace symharm {

/// Twelve-note just scale: ratios[n] is the frequency ratio of the nth note
/// above the bottom note. Invariants: ratios[0] = 1/1, strictly increasing,
/// every ratio in [1, 2).
class Scale {
 public:
  static constexpr int kNotes = 12;

  Scale(std::string name, std::array<Rational, kNotes> ratios)
      : name_(std::move(name)), ratios_(std::move(ratios)) {
    validate();
  }

  const std::string& name() const { return name_; }
  const std::array<Rational, kNotes>& ratios() const { return ratios_; }

  /// Ratio of the given in-octave note (0..11).
  const Rational& at(int note) const {
    if (note < 0 || note >= kNotes) {
      throw std::out_of_range("Scale::at: note index " + std::to_string(note) +
                              " out of 0..11");
    }
    return ratios_[static_cast<size_t>(note)];
  }

  friend bool operator==(const Scale& a, const Scale& b) {
    return a.ratios_ == b.ratios_;  // name is a display label only
  }

 private:
  void validate() const {
    const Rational one(1), two(2);
    if (ratios_[0] != one) {
      throw std::invalid_argument("scale: ratio 1 must be 1/1, got " +
                                  ratios_[0].str());
    }
    for (int n = 0; n < kNotes; ++n) {
      const Rational& r = ratios_[static_cast<size_t>(n)];
      if (r < one || !(r < two)) {
        throw std::invalid_argument("scale: ratio " + std::to_string(n + 1) +
                                    " (" + r.str() + ") out of [1, 2)");
      }
      if (n > 0 && !(ratios_[static_cast<size_t>(n - 1)] < r)) {
        throw std::invalid_argument(
            "scale: ratio " + std::to_string(n + 1) + " (" + r.str() +
            ") not greater than ratio " + std::to_string(n) + " (" +
            ratios_[static_cast<size_t>(n - 1)].str() + ")");
      }
    }
  }

  std::string name_;
  std::array<Rational, kNotes> ratios_;
};

enum class ScaleId { A, B, C, D, E };

inline ScaleId parse_scale_id(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': return ScaleId::A;
      case 'B': return ScaleId::B;
      case 'C': return ScaleId::C;
      case 'D': return ScaleId::D;
      case 'E': return ScaleId::E;
      default: break;
    }
  }
  throw std::invalid_argument("unknown scale id \"" + std::string(text) +
                              "\" (expected A, B, C, D, or E)");
}

inline std::string to_string(ScaleId id) {
  switch (id) {
    case ScaleId::A: return "A";
    case ScaleId::B: return "B";
    case ScaleId::C: return "C";
    case ScaleId::D: return "D";
    case ScaleId::E: return "E";
  }
  throw std::invalid_argument("invalid scale id");
}

namespace detail {

inline Scale scale_from_pairs(
    std::string name, const std::array<std::pair<int, int>, 12>& data) {
  std::array<Rational, 12> ratios;
  for (size_t i = 0; i < 12; ++i) {
    ratios[i] = make_rational(data[i].first, data[i].second);
  }
  return Scale(std::move(name), std::move(ratios));
}

}  // namespace detail

/// The five built-in scales:
///   A: Kepler's just scale (Monochord No. 2, transposed down a fifth)
///   B: Wendy Carlos's super just scale (primes <= 17)
///   C: continued-fraction scale (first convergents of 2^(n/12) within 1%)
///   D: Stolzenburg's rational tuning (scale C with a 16/15 semitone)
///   E: Pythagorean scale (circle of fifths, tritone 729/512)
inline Scale builtin_scale(ScaleId id) {
  switch (id) {
    case ScaleId::A:
      return detail::scale_from_pairs(
          "A", {{{1, 1}, {16, 15}, {9, 8}, {6, 5}, {5, 4}, {4, 3},
                 {45, 32}, {3, 2}, {8, 5}, {5, 3}, {16, 9}, {15, 8}}});
    case ScaleId::B:
      return detail::scale_from_pairs(
          "B", {{{1, 1}, {17, 16}, {9, 8}, {6, 5}, {5, 4}, {4, 3},
                 {11, 8}, {3, 2}, {13, 8}, {5, 3}, {7, 4}, {15, 8}}});
    case ScaleId::C:
      return detail::scale_from_pairs(
          "C", {{{1, 1}, {17, 16}, {9, 8}, {6, 5}, {5, 4}, {4, 3},
                 {17, 12}, {3, 2}, {8, 5}, {5, 3}, {16, 9}, {15, 8}}});
    case ScaleId::D:
      return detail::scale_from_pairs(
          "D", {{{1, 1}, {16, 15}, {9, 8}, {6, 5}, {5, 4}, {4, 3},
                 {17, 12}, {3, 2}, {8, 5}, {5, 3}, {16, 9}, {15, 8}}});
    case ScaleId::E:
      return detail::scale_from_pairs(
          "E", {{{1, 1}, {256, 243}, {9, 8}, {32, 27}, {81, 64}, {4, 3},
                 {729, 512}, {3, 2}, {128, 81}, {27, 16}, {16, 9}, {243, 128}}});
  }
  throw std::invalid_argument("unknown scale id");
}

/// Scale whose nth ratio is the first continued-fraction convergent of
/// 2^(n/12) within rel_tol. With rel_tol = 1/100 this equals scale C.
inline Scale continued_fraction_scale(const Rational& rel_tol,
                                      std::string name = "C") {
  std::array<Rational, Scale::kNotes> ratios;
  for (int n = 0; n < Scale::kNotes; ++n) {
    ratios[static_cast<size_t>(n)] =
        convergents_within(equal_tempered_ratio(static_cast<unsigned>(n)),
                           rel_tol);
  }
  return Scale(std::move(name), std::move(ratios));
}

inline Scale continued_fraction_scale(double rel_tol, std::string name = "C") {
  if (!(rel_tol > 0) || !(rel_tol < 1)) {
    throw std::invalid_argument(
        "continued_fraction_scale: rel_tol must be in (0, 1)");
  }
  // Taking the nearest 1e-12 grid point keeps the tolerance exact for the
  // decimal inputs this is called with.
  BigInt num(static_cast<long long>(rel_tol * 1e12 + 0.5));
  return continued_fraction_scale(Rational(num, pow10(12)), std::move(name));
}

enum class Tritone { fifths_up, fifths_down };

/// Circle-of-fifths scale: note (7k mod 12) carries (3/2)^k octave-reduced
/// into [1, 2). fifths_up uses k = -5..6 (tritone 729/512, the built-in
/// scale E); fifths_down uses k = -6..5 (tritone 1024/729).
inline Scale pythagorean_scale(Tritone tritone) {
  const int k_lo = tritone == Tritone::fifths_up ? -5 : -6;
  const int k_hi = tritone == Tritone::fifths_up ? 6 : 5;
  std::array<Rational, Scale::kNotes> ratios;
  const Rational fifth(3, 2), two(2), one(1);
  for (int k = k_lo; k <= k_hi; ++k) {
    Rational r(1);
    for (int i = 0; i < std::abs(k); ++i) {
      r = k > 0 ? r * fifth : r / fifth;
    }
    while (!(r < two)) r = r / two;
    while (r < one) r = r * two;
    int pos = ((7 * k) % 12 + 12) % 12;
    ratios[static_cast<size_t>(pos)] = r;
  }
  return Scale(tritone == Tritone::fifths_up ? "E" : "E-",
               std::move(ratios));
}

/// Ratio of an arbitrary note index: notes beyond 11 extend by exact octave
/// doublings (closed-voicing convention).
inline Rational frequency_ratio(const Scale& scale, int note) {
  if (note < 0) throw std::invalid_argument("frequency_ratio: negative note");
  Rational r = scale.at(note % Scale::kNotes);
  for (int i = 0; i < note / Scale::kNotes; ++i) {
    r = r * Rational(2);
  }
  return r;
}

/// "name\n" followed by the 12 ratios space-separated.
inline std::string serialize_scale(const Scale& scale) {
  std::ostringstream out;
  out << scale.name() << "\n";
  for (int n = 0; n < Scale::kNotes; ++n) {
    if (n > 0) out << " ";
    out << scale.at(n).str();
  }
  out << "\n";
  return out.str();
}

namespace detail {

inline std::vector<std::string> ratio_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

inline Scale scale_from_tokens(const std::vector<std::string>& tokens,
                               std::string name) {
  if (tokens.size() != 12) {
    throw std::invalid_argument("scale: expected 12 ratios, got " +
                                std::to_string(tokens.size()));
  }
  std::array<Rational, Scale::kNotes> ratios;
  for (size_t i = 0; i < tokens.size(); ++i) {
    try {
      ratios[i] = parse_ratio(tokens[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("scale: ratio " + std::to_string(i + 1) +
                                  ": " + e.what());
    }
  }
  return Scale(std::move(name), std::move(ratios));
}

}  // namespace detail

/// Parses 12 whitespace- or comma-separated ratio tokens ("p/q" or "p:q"),
/// optionally preceded by a name line. All scale invariants are validated.
inline Scale parse_scale(std::string_view text,
                         std::string fallback_name = "custom") {
  auto all_tokens = detail::ratio_tokens(text);
  if (all_tokens.size() == 12) {
    bool all_ratios = true;
    for (const auto& t : all_tokens) {
      try {
        parse_ratio(t);
      } catch (const std::invalid_argument&) {
        all_ratios = false;
        break;
      }
    }
    if (all_ratios) {
      return detail::scale_from_tokens(all_tokens, std::move(fallback_name));
    }
  }
  // First non-empty line is the name; the rest must hold exactly 12 ratios.
  size_t start = 0;
  while (start < text.size() &&
         (text[start] == '\n' || text[start] == '\r' || text[start] == ' ' ||
          text[start] == '\t')) {
    ++start;
  }
  auto line_end = text.find('\n', start);
  if (line_end == std::string_view::npos) {
    return detail::scale_from_tokens(all_tokens, std::move(fallback_name));
  }
  std::string name(text.substr(start, line_end - start));
  while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) {
    name.pop_back();
  }
  auto rest_tokens = detail::ratio_tokens(text.substr(line_end + 1));
  if (rest_tokens.size() == 12) {
    return detail::scale_from_tokens(rest_tokens, std::move(name));
  }
  return detail::scale_from_tokens(all_tokens, std::move(fallback_name));
}

}  // namespace symharm

#endif  // SYMHARM_SCALE_HPP

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

#ifndef SYMHARM_MEASURES_HPP
#define SYMHARM_MEASURES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symharm/chord.hpp"
#include "symharm/rational.hpp"
#include "symharm/scale.hpp"

namespace symharm {

/// Per-interval symmetric harmonicities of a scale:
/// h[n] = min(a_n * b_n, a_{12-n} * b_{12-n}) for n = 1..11, where a_n/b_n
/// is the scale's reduced ratio at step n. Symmetric by construction:
/// h[n] = h[12-n].
class HarmonicityTable {
 public:
  explicit HarmonicityTable(const Scale& scale) : scale_name_(scale.name()) {
    auto product = [&](int n) {
      const Rational& r = scale.at(n);
      return r.num() * r.den();
    };
    for (int n = 1; n <= 11; ++n) {
      BigInt up = product(n);
      BigInt down = product(12 - n);
      h_[static_cast<size_t>(n)] = up < down ? up : down;
    }
  }

  /// h[n] for n in 1..11.
  const BigInt& h(int n) const {
    if (n < 1 || n > 11) {
      throw std::out_of_range("HarmonicityTable::h: index " +
                              std::to_string(n) + " out of 1..11");
    }
    return h_[static_cast<size_t>(n)];
  }

  const std::string& scale_name() const { return scale_name_; }

  friend bool operator==(const HarmonicityTable& a, const HarmonicityTable& b) {
    return a.h_ == b.h_;
  }

 private:
  std::string scale_name_;
  std::array<BigInt, 12> h_;
};

inline HarmonicityTable harmonicity_table(const Scale& scale) {
  return HarmonicityTable(scale);
}

/// Product of h over all pairwise note differences of the chord. Constant
/// across every member of the chord's equivalence class, for any scale.
inline BigInt symmetric_harmonicity(const HarmonicityTable& table,
                                    const Chord& chord) {
  auto notes = chord.notes();
  BigInt value = 1;
  for (size_t i = 0; i < notes.size(); ++i) {
    for (size_t j = i + 1; j < notes.size(); ++j) {
      value *= table.h(notes[j] - notes[i]);
    }
  }
  return value;
}

inline BigInt symmetric_harmonicity(const Scale& scale, const Chord& chord) {
  return symmetric_harmonicity(HarmonicityTable(scale), chord);
}

/// Geometric mean of numerator and denominator of the scale's ratio at step
/// n (no min-symmetrization; this is the plain interval consonance value).
inline double brefeld_interval(const Scale& scale, int n) {
  if (n < 1 || n > 11) {
    throw std::out_of_range("brefeld_interval: index " + std::to_string(n) +
                            " out of 1..11");
  }
  const Rational& r = scale.at(n);
  return std::sqrt((r.num() * r.den()).convert_to<double>());
}

namespace detail {

inline void check_notes(const std::vector<int>& notes) {
  if (notes.empty()) {
    throw std::invalid_argument("chord notes: empty list");
  }
  int prev = -1;
  for (int n : notes) {
    if (n < 0) throw std::invalid_argument("chord notes: negative note index");
    if (n <= prev) {
      throw std::invalid_argument("chord notes: must be strictly increasing");
    }
    prev = n;
  }
}

}  // namespace detail

/// Product over all pairwise intervals of numerator * denominator of the
/// reduced ratio between the two notes (higher over lower). Exact.
inline BigInt brefeld_modified(const Scale& scale,
                               const std::vector<int>& notes) {
  detail::check_notes(notes);
  BigInt value = 1;
  for (size_t i = 0; i < notes.size(); ++i) {
    for (size_t j = i + 1; j < notes.size(); ++j) {
      Rational interval =
          frequency_ratio(scale, notes[j]) / frequency_ratio(scale, notes[i]);
      value *= interval.num() * interval.den();
    }
  }
  return value;
}

inline BigInt brefeld_modified(const Scale& scale, const Chord& chord) {
  return brefeld_modified(scale, chord.notes());
}

/// Geometric mean of the interval consonance values: the 2m-th root of the
/// exact integer product, for m pairwise intervals. One final floating
/// conversion; everything before it is exact.
inline double brefeld_chord(const Scale& scale, const std::vector<int>& notes) {
  BigInt product = brefeld_modified(scale, notes);
  size_t m = notes.size() * (notes.size() - 1) / 2;
  if (m == 0) throw std::invalid_argument("brefeld_chord: need at least 2 notes");
  return std::pow(product.convert_to<double>(),
                  1.0 / (2.0 * static_cast<double>(m)));
}

inline double brefeld_chord(const Scale& scale, const Chord& chord) {
  return brefeld_chord(scale, chord.notes());
}

/// Relative periodicity: lcm of the denominators of each note's reduced
/// frequency ratio to the lowest note. Notes are absolute indices; indices
/// beyond 11 continue into higher octaves (exact doubling).
inline BigInt stolzenburg_harmonicity(const Scale& scale,
                                      const std::vector<int>& notes) {
  detail::check_notes(notes);
  Rational base = frequency_ratio(scale, notes.front());
  std::vector<BigInt> denominators;
  denominators.reserve(notes.size());
  for (int n : notes) {
    denominators.push_back((frequency_ratio(scale, n) / base).den());
  }
  return lcm_all(denominators);
}

/// Octave handling when a translated chord's upper notes pass the octave.
enum class OctaveConvention {
  /// Wrapped notes sound in the next octave (frequency factor 2): the chord
  /// keeps its closed voicing above the translated base.
  closed_voicing,
  /// Wrapped notes keep their base-octave pitch-class ratio (no factor 2);
  /// ratios may drop below 1.
  pitch_class_reduced,
  /// Only translations that stay inside the octave are averaged, i.e. every
  /// pitch-class set of the class exactly once, measured from its lowest
  /// note. This is the enumeration that best reproduces the published
  /// averaged rankings.
  within_octave,
};

inline std::string to_string(OctaveConvention convention) {
  switch (convention) {
    case OctaveConvention::closed_voicing: return "closed-voicing";
    case OctaveConvention::pitch_class_reduced: return "pitch-class-reduced";
    case OctaveConvention::within_octave: return "within-octave";
  }
  throw std::invalid_argument("invalid octave convention");
}

/// Mean relative periodicity over the class's translated representatives:
/// chords (t, t+x1, ..., t+x_{k-1}) for every member and every translation
/// the convention admits. Exact rational mean.
inline Rational stolzenburg_class_average(
    const Scale& scale, const ChordClass& cls,
    OctaveConvention convention = OctaveConvention::closed_voicing) {
  BigInt total = 0;
  long count = 0;
  for (const Chord& member : cls.members) {
    const int top = member.offsets().back();
    const int t_max = convention == OctaveConvention::within_octave
                          ? 11 - top
                          : 11;
    for (int t = 0; t <= t_max; ++t) {
      if (convention == OctaveConvention::pitch_class_reduced) {
        const Rational& base = scale.at(t);
        std::vector<BigInt> denominators;
        denominators.push_back(1);
        for (int x : member.offsets()) {
          denominators.push_back((scale.at((t + x) % 12) / base).den());
        }
        total += lcm_all(denominators);
      } else {
        std::vector<int> notes;
        notes.push_back(t);
        for (int x : member.offsets()) notes.push_back(t + x);
        total += stolzenburg_harmonicity(scale, notes);
      }
      ++count;
    }
  }
  return Rational(total, count);
}

enum class Measure {
  symmetric_harmonicity,
  brefeld,
  brefeld_modified,
  stolzenburg,
  stolzenburg_avg,
};

inline Measure parse_measure(std::string_view text) {
  if (text == "symm") return Measure::symmetric_harmonicity;
  if (text == "brefeld") return Measure::brefeld;
  if (text == "brefeld-mod") return Measure::brefeld_modified;
  if (text == "stolzenburg") return Measure::stolzenburg;
  if (text == "stolzenburg-avg") return Measure::stolzenburg_avg;
  throw std::invalid_argument(
      "unknown measure \"" + std::string(text) +
      "\" (expected symm, brefeld, brefeld-mod, stolzenburg, or stolzenburg-avg)");
}

inline std::string to_string(Measure measure) {
  switch (measure) {
    case Measure::symmetric_harmonicity: return "symm";
    case Measure::brefeld: return "brefeld";
    case Measure::brefeld_modified: return "brefeld-mod";
    case Measure::stolzenburg: return "stolzenburg";
    case Measure::stolzenburg_avg: return "stolzenburg-avg";
  }
  throw std::invalid_argument("invalid measure");
}

}  // namespace symharm

#endif  // SYMHARM_MEASURES_HPP

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

#ifndef SYMHARM_CHORD_HPP
#define SYMHARM_CHORD_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symharm {

/// Interval class of a step difference in Z12: min(d, 12 - d).
inline int interval_class(int d) {
  int m = ((d % 12) + 12) % 12;
  return std::min(m, 12 - m);
}

/// k-note chord based at note 0, stored as the strictly increasing offsets
/// (x1, ..., x_{k-1}) of the upper notes, each in 1..11.
class Chord {
 public:
  explicit Chord(std::vector<int> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) {
      throw std::invalid_argument("chord: needs at least one offset");
    }
    int prev = 0;
    for (int x : offsets_) {
      if (x <= prev || x > 11) {
        throw std::invalid_argument(
            "chord: offsets must be strictly increasing in 1..11");
      }
      prev = x;
    }
  }

  /// Number of notes, including the base note.
  int num_notes() const { return static_cast<int>(offsets_.size()) + 1; }

  const std::vector<int>& offsets() const { return offsets_; }

  /// All note positions, including the base 0.
  std::vector<int> notes() const {
    std::vector<int> out;
    out.reserve(offsets_.size() + 1);
    out.push_back(0);
    out.insert(out.end(), offsets_.begin(), offsets_.end());
    return out;
  }

  friend auto operator<=>(const Chord& a, const Chord& b) {
    return a.offsets_ <=> b.offsets_;
  }
  friend bool operator==(const Chord& a, const Chord& b) {
    return a.offsets_ == b.offsets_;
  }

  /// "(3,7)"
  std::string str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < offsets_.size(); ++i) {
      if (i > 0) out << ",";
      out << offsets_[i];
    }
    out << ")";
    return out.str();
  }

 private:
  std::vector<int> offsets_;
};

/// Parses "3,7" or "(3,7)" into a Chord.
inline Chord parse_chord_label(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    cleaned.push_back(c);
  }
  std::vector<int> offsets;
  std::istringstream in(cleaned);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("invalid chord label \"" + std::string(text) +
                                  "\"");
    }
    offsets.push_back(std::stoi(part));
  }
  if (offsets.empty()) {
    throw std::invalid_argument("invalid chord label \"" + std::string(text) +
                                "\"");
  }
  try {
    return Chord(std::move(offsets));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid chord label \"" + std::string(text) +
                                "\" (offsets must be strictly increasing in 1..11)");
  }
}

/// Steps between consecutive notes, including the wrap back to the octave;
/// always sums to 12.
struct GapComposition {
  std::vector<int> gaps;

  friend bool operator==(const GapComposition&, const GapComposition&) = default;
};

inline GapComposition gap_composition(const Chord& chord) {
  GapComposition g;
  int prev = 0;
  for (int x : chord.offsets()) {
    g.gaps.push_back(x - prev);
    prev = x;
  }
  g.gaps.push_back(12 - prev);
  return g;
}

/// Multiset of interval classes (1..6) over all pairwise note differences.
class IntervalClassMultiset {
 public:
  IntervalClassMultiset() : counts_{} {}

  void add(int klass) {
    if (klass < 1 || klass > 6) {
      throw std::invalid_argument("interval class out of 1..6");
    }
    ++counts_[static_cast<size_t>(klass)];
  }

  int count(int klass) const {
    if (klass < 1 || klass > 6) return 0;
    return counts_[static_cast<size_t>(klass)];
  }

  int total() const {
    int t = 0;
    for (int c : counts_) t += c;
    return t;
  }

  friend auto operator<=>(const IntervalClassMultiset& a,
                          const IntervalClassMultiset& b) = default;

  /// "{3,4,5}" with repeats expanded, ascending.
  std::string str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int klass = 1; klass <= 6; ++klass) {
      for (int i = 0; i < counts_[static_cast<size_t>(klass)]; ++i) {
        if (!first) out << ",";
        out << klass;
        first = false;
      }
    }
    out << "}";
    return out.str();
  }

 private:
  std::array<int, 7> counts_;
};

inline IntervalClassMultiset interval_class_multiset(const Chord& chord) {
  IntervalClassMultiset multiset;
  auto notes = chord.notes();
  for (size_t i = 0; i < notes.size(); ++i) {
    for (size_t j = i + 1; j < notes.size(); ++j) {
      multiset.add(interval_class(notes[j] - notes[i]));
    }
  }
  return multiset;
}

/// All C(11, k-1) strictly increasing offset tuples, lexicographic order.
inline std::vector<Chord> enumerate_chords(int k) {
  if (k < 2 || k > 12) {
    throw std::invalid_argument("enumerate_chords: k must be in 2..12, got " +
                                std::to_string(k));
  }
  const int m = k - 1;
  std::vector<Chord> out;
  std::vector<int> combo(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) combo[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(combo);
    int i = m - 1;
    while (i >= 0 && combo[static_cast<size_t>(i)] == 11 - (m - 1 - i)) --i;
    if (i < 0) break;
    ++combo[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return out;
}

/// Equivalence class of chords sharing a pairwise interval-class multiset.
/// The label is the lexicographically smallest member.
struct ChordClass {
  Chord label;
  std::vector<Chord> members;
  IntervalClassMultiset signature;
};

/// Partition of enumerate_chords(k) by interval-class multiset, sorted by
/// canonical label. For k = 3 this is the set of 12 triad classes.
inline std::vector<ChordClass> equivalence_classes(int k) {
  std::map<IntervalClassMultiset, std::vector<Chord>> groups;
  for (const Chord& chord : enumerate_chords(k)) {
    groups[interval_class_multiset(chord)].push_back(chord);
  }
  std::vector<ChordClass> classes;
  classes.reserve(groups.size());
  for (auto& [signature, members] : groups) {
    // members arrive in lexicographic order, so the first one is the label
    classes.push_back(ChordClass{members.front(), std::move(members), signature});
  }
  std::sort(classes.begin(), classes.end(),
            [](const ChordClass& a, const ChordClass& b) {
              return a.label < b.label;
            });
  return classes;
}

/// Finds the class containing the given chord (the chord need not be the
/// canonical label).
inline const ChordClass& find_class(const std::vector<ChordClass>& classes,
                                    const Chord& chord) {
  auto signature = interval_class_multiset(chord);
  for (const ChordClass& cls : classes) {
    if (cls.signature == signature) return cls;
  }
  throw std::invalid_argument("no class contains chord " + chord.str());
}

namespace detail {

/// Canonical form of a gap cycle under rotation and reversal: two chords are
/// translation/inversion-related exactly when their gap cycles agree up to
/// the dihedral action.
inline std::vector<int> dihedral_canonical_gaps(const Chord& chord) {
  std::vector<int> gaps = gap_composition(chord).gaps;
  std::vector<int> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<int> cycle = gaps;
    if (reflect) std::reverse(cycle.begin(), cycle.end());
    for (size_t r = 0; r < cycle.size(); ++r) {
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      if (best.empty() || cycle < best) best = cycle;
    }
  }
  return best;
}

}  // namespace detail

/// Splits a class's members into orbits under translation and inversion.
/// Most classes form a single orbit; Z-related chord pairs (same interval
/// multiset, not related by translation/inversion) appear as separate
/// orbits. Orbits are sorted by their smallest member.
inline std::vector<std::vector<Chord>> translation_inversion_orbits(
    const ChordClass& cls) {
  std::map<std::vector<int>, std::vector<Chord>> orbits;
  for (const Chord& member : cls.members) {
    orbits[detail::dihedral_canonical_gaps(member)].push_back(member);
  }
  std::vector<std::vector<Chord>> out;
  out.reserve(orbits.size());
  for (auto& [key, members] : orbits) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace symharm

#endif  // SYMHARM_CHORD_HPP

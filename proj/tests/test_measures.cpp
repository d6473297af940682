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

#include "symharm/measures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

using namespace symharm;

namespace {

std::vector<BigInt> h_row(const Scale& scale) {
  HarmonicityTable table(scale);
  std::vector<BigInt> row;
  for (int n = 1; n <= 11; ++n) row.push_back(table.h(n));
  return row;
}

std::vector<BigInt> ints(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("interval harmonicities of the five scales", "[measures]") {
  CHECK(h_row(builtin_scale(ScaleId::A)) ==
        ints({120, 72, 15, 20, 6, 1440, 6, 20, 15, 72, 120}));
  CHECK(h_row(builtin_scale(ScaleId::B)) ==
        ints({120, 28, 15, 20, 6, 88, 6, 20, 15, 28, 120}));
  CHECK(h_row(builtin_scale(ScaleId::C)) ==
        ints({120, 72, 15, 20, 6, 204, 6, 20, 15, 72, 120}));
  CHECK(h_row(builtin_scale(ScaleId::E)) ==
        ints({31104, 72, 432, 5184, 6, 373248, 6, 5184, 432, 72, 31104}));
}

TEST_CASE("the semitone difference between C and D does not matter",
          "[measures]") {
  CHECK(HarmonicityTable(builtin_scale(ScaleId::C)) ==
        HarmonicityTable(builtin_scale(ScaleId::D)));
}

TEST_CASE("h picks the smaller of the two complementary products",
          "[measures]") {
  HarmonicityTable a(builtin_scale(ScaleId::A));
  CHECK(a.h(5) == 6);
  CHECK(a.h(7) == 6);
  CHECK(a.h(1) == 120);
  CHECK_THROWS_AS(a.h(0), std::out_of_range);
  CHECK_THROWS_AS(a.h(12), std::out_of_range);
}

TEST_CASE("h is symmetric for every scale", "[measures][property]") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> den_dist(2, 64);
  auto random_scale = [&]() {
    std::set<Rational> upper;
    while (upper.size() < 11) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(den + 1, 2 * den - 1);
      upper.insert(Rational(num_dist(rng), den));
    }
    std::array<Rational, 12> ratios;
    ratios[0] = Rational(1);
    size_t i = 1;
    for (const Rational& r : upper) ratios[i++] = r;
    return Scale("random", ratios);
  };
  for (int trial = 0; trial < 100; ++trial) {
    HarmonicityTable table(random_scale());
    for (int n = 1; n <= 11; ++n) {
      CHECK(table.h(n) == table.h(12 - n));
    }
  }
  for (ScaleId id :
       {ScaleId::A, ScaleId::B, ScaleId::C, ScaleId::D, ScaleId::E}) {
    HarmonicityTable table(builtin_scale(id));
    for (int n = 1; n <= 11; ++n) CHECK(table.h(n) == table.h(12 - n));
  }
}

TEST_CASE("symmetric harmonicity of the worked chords", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK(symmetric_harmonicity(a, Chord({4, 7})) == 1800);
  CHECK(symmetric_harmonicity(a, Chord({1, 2})) == 1036800);
  CHECK(symmetric_harmonicity(a, Chord({2, 5, 9})) == 11664000);
  CHECK(symmetric_harmonicity(builtin_scale(ScaleId::C), Chord({3, 5, 9})) ==
        396576000);
}

TEST_CASE("the triad product formula agrees with the pairwise path",
          "[measures][property]") {
  for (ScaleId id : {ScaleId::A, ScaleId::E}) {
    Scale scale = builtin_scale(id);
    HarmonicityTable h(scale);
    for (const Chord& chord : enumerate_chords(3)) {
      int x1 = chord.offsets()[0], x2 = chord.offsets()[1];
      CHECK(symmetric_harmonicity(h, chord) ==
            h.h(x1) * h.h(x2) * h.h(x2 - x1));
    }
  }
}

TEST_CASE("symmetric harmonicity is constant on each class",
          "[measures][property]") {
  Scale a = builtin_scale(ScaleId::A);
  HarmonicityTable h(a);
  for (int k : {3, 4}) {
    for (const ChordClass& cls : equivalence_classes(k)) {
      BigInt expected = symmetric_harmonicity(h, cls.label);
      for (const Chord& member : cls.members) {
        CHECK(symmetric_harmonicity(h, member) == expected);
      }
    }
  }
}

TEST_CASE("brefeld interval values", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK_THAT(brefeld_interval(a, 7),
             Catch::Matchers::WithinRel(std::sqrt(6.0), 1e-12));
  CHECK_THAT(brefeld_interval(a, 4),
             Catch::Matchers::WithinRel(std::sqrt(20.0), 1e-12));
  CHECK_THROWS_AS(brefeld_interval(a, 12), std::out_of_range);
  CHECK_THROWS_AS(brefeld_interval(a, 0), std::out_of_range);
}

TEST_CASE("brefeld chord values", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK_THAT(brefeld_chord(a, Chord({4, 7})),
             Catch::Matchers::WithinAbs(3.91, 0.01));
  CHECK_THAT(brefeld_chord(a, Chord({7})),
             Catch::Matchers::WithinRel(std::sqrt(6.0), 1e-12));
  // the major and minor triads share their interval multiset
  CHECK_THAT(brefeld_chord(a, Chord({3, 7})),
             Catch::Matchers::WithinRel(brefeld_chord(a, Chord({4, 7})),
                                        1e-12));
}

TEST_CASE("brefeld modified values are exact integers", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK(brefeld_modified(a, Chord({4, 7})) == 3600);
  CHECK(brefeld_modified(a, Chord({7})) == 6);
}

TEST_CASE("brefeld chord is the 2m-th root of brefeld modified",
          "[measures][property]") {
  Scale a = builtin_scale(ScaleId::A);
  for (const Chord& chord : enumerate_chords(3)) {
    double chord_value = brefeld_chord(a, chord);
    double modified = brefeld_modified(a, chord).convert_to<double>();
    CHECK_THAT(std::pow(chord_value, 6.0),
               Catch::Matchers::WithinRel(modified, 1e-9));
  }
}

TEST_CASE("relative periodicity of the worked chords", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK(stolzenburg_harmonicity(a, {0, 4, 7}) == 4);
  CHECK(stolzenburg_harmonicity(a, {3, 6, 10}) == 1728);
  CHECK(stolzenburg_harmonicity(a, {5}) == 1);
  // pure octaves have denominator-one ratios
  CHECK(stolzenburg_harmonicity(a, {0, 12, 24}) == 1);
  CHECK_THROWS_AS(stolzenburg_harmonicity(a, {}), std::invalid_argument);
  CHECK_THROWS_AS(stolzenburg_harmonicity(a, {4, 4, 7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(stolzenburg_harmonicity(a, {7, 4}), std::invalid_argument);
}

TEST_CASE("class averages: frozen exact values in the Kepler scale",
          "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  auto classes = equivalence_classes(3);
  auto cls = [&](std::initializer_list<int> offsets) -> const ChordClass& {
    return find_class(classes, Chord(offsets));
  };
  CHECK(stolzenburg_class_average(a, cls({1, 2})) == Rational(1831, 18));
  CHECK(stolzenburg_class_average(a, cls({2, 7})) == Rational(100));
  CHECK(stolzenburg_class_average(a, cls({4, 8})) == Rational(292, 3));
  CHECK(stolzenburg_class_average(a, cls({3, 7})) == Rational(4595, 24));
  CHECK(stolzenburg_class_average(a, cls({1, 6}),
                                  OctaveConvention::within_octave) ==
        Rational(331, 3));
  CHECK(stolzenburg_class_average(a, cls({2, 6}),
                                  OctaveConvention::within_octave) ==
        Rational(443, 4));
}

TEST_CASE("class averages: a single in-octave representative is its own mean",
          "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  Chord chord({5, 11});
  ChordClass singleton{chord, {chord}, interval_class_multiset(chord)};
  // (5,11) fits the octave only at translation 0
  CHECK(stolzenburg_class_average(a, singleton,
                                  OctaveConvention::within_octave) ==
        Rational(stolzenburg_harmonicity(a, {0, 5, 11})));
}

TEST_CASE("the suspended-chord class has the lowest Kepler average",
          "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  auto classes = equivalence_classes(3);
  for (OctaveConvention convention : {OctaveConvention::closed_voicing,
                                      OctaveConvention::within_octave}) {
    Rational best(0);
    Chord best_label({1, 2});
    bool first = true;
    for (const ChordClass& cls : classes) {
      Rational avg = stolzenburg_class_average(a, cls, convention);
      if (first || avg < best) {
        best = avg;
        best_label = cls.label;
        first = false;
      }
    }
    CAPTURE(to_string(convention));
    CHECK(best_label == Chord({2, 5}));
  }
}

TEST_CASE("the augmented class is second under in-octave averaging",
          "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  std::vector<std::pair<Rational, Chord>> averages;
  for (const ChordClass& cls : equivalence_classes(3)) {
    averages.emplace_back(
        stolzenburg_class_average(a, cls, OctaveConvention::within_octave),
        cls.label);
  }
  std::sort(averages.begin(), averages.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  CHECK(averages[0].second == Chord({2, 5}));
  CHECK(averages[1].second == Chord({4, 8}));
}

TEST_CASE("octave conventions genuinely differ", "[measures]") {
  Scale a = builtin_scale(ScaleId::A);
  auto classes = equivalence_classes(3);
  const ChordClass& cls = find_class(classes, Chord({3, 7}));
  Rational closed = stolzenburg_class_average(a, cls);
  Rational reduced =
      stolzenburg_class_average(a, cls, OctaveConvention::pitch_class_reduced);
  Rational inoct =
      stolzenburg_class_average(a, cls, OctaveConvention::within_octave);
  CHECK(closed != reduced);
  CHECK(closed != inoct);
  CHECK(Rational(1) <= inoct);
}

TEST_CASE("measure names round-trip", "[measures]") {
  for (Measure m : {Measure::symmetric_harmonicity, Measure::brefeld,
                    Measure::brefeld_modified, Measure::stolzenburg,
                    Measure::stolzenburg_avg}) {
    CHECK(parse_measure(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_measure("bogus"), std::invalid_argument);
}

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

#include "symharm/scale.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symharm;

TEST_CASE("Kepler scale carries the classic ratios", "[scale]") {
  Scale a = builtin_scale(ScaleId::A);
  const std::array<std::pair<int, int>, 12> expected = {
      {{1, 1}, {16, 15}, {9, 8}, {6, 5}, {5, 4}, {4, 3},
       {45, 32}, {3, 2}, {8, 5}, {5, 3}, {16, 9}, {15, 8}}};
  for (int n = 0; n < 12; ++n) {
    CAPTURE(n);
    CHECK(a.at(n) == make_rational(expected[static_cast<size_t>(n)].first,
                                   expected[static_cast<size_t>(n)].second));
  }
}

TEST_CASE("built-in scales hit their distinctive ratios", "[scale]") {
  CHECK(builtin_scale(ScaleId::B).at(6) == Rational(11, 8));
  CHECK(builtin_scale(ScaleId::B).at(10) == Rational(7, 4));
  CHECK(builtin_scale(ScaleId::C).at(6) == Rational(17, 12));
  CHECK(builtin_scale(ScaleId::E).at(1) == Rational(256, 243));
  CHECK(builtin_scale(ScaleId::E).at(6) == Rational(729, 512));
}

TEST_CASE("scales C and D differ exactly in the semitone", "[scale]") {
  Scale c = builtin_scale(ScaleId::C);
  Scale d = builtin_scale(ScaleId::D);
  CHECK(c.at(1) == Rational(17, 16));
  CHECK(d.at(1) == Rational(16, 15));
  for (int n = 0; n < 12; ++n) {
    if (n == 1) continue;
    CAPTURE(n);
    CHECK(c.at(n) == d.at(n));
  }
}

TEST_CASE("the Kepler tritone is the major third times the whole tone",
          "[scale]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK(a.at(6) == a.at(4) * a.at(2));
}

TEST_CASE("every built-in satisfies the scale invariants", "[scale]") {
  for (ScaleId id :
       {ScaleId::A, ScaleId::B, ScaleId::C, ScaleId::D, ScaleId::E}) {
    Scale s = builtin_scale(id);  // the constructor validates
    CHECK(s.at(0) == Rational(1));
    for (int n = 1; n < 12; ++n) {
      CAPTURE(to_string(id), n);
      CHECK(s.at(n - 1) < s.at(n));
      CHECK(s.at(n) < Rational(2));
    }
  }
}

TEST_CASE("the continued-fraction generator reproduces scale C exactly",
          "[scale]") {
  Scale generated = continued_fraction_scale(Rational(1, 100));
  Scale c = builtin_scale(ScaleId::C);
  for (int n = 0; n < 12; ++n) {
    CAPTURE(n);
    CHECK(generated.at(n) == c.at(n));
  }
  CHECK(generated.at(0) == Rational(1));
  CHECK(generated.at(9) == Rational(5, 3));
  CHECK(continued_fraction_scale(0.01) == c);
}

TEST_CASE("the circle of fifths reproduces the Pythagorean scale", "[scale]") {
  Scale up = pythagorean_scale(Tritone::fifths_up);
  Scale e = builtin_scale(ScaleId::E);
  for (int n = 0; n < 12; ++n) {
    CAPTURE(n);
    CHECK(up.at(n) == e.at(n));
  }
  CHECK(up.at(7) == Rational(3, 2));

  Scale down = pythagorean_scale(Tritone::fifths_down);
  CHECK(down.at(6) == Rational(1024, 729));
  for (int n = 0; n < 12; ++n) {
    if (n == 6) continue;
    CAPTURE(n);
    CHECK(down.at(n) == e.at(n));
  }
}

TEST_CASE("frequency_ratio extends by exact octaves", "[scale]") {
  Scale a = builtin_scale(ScaleId::A);
  CHECK(frequency_ratio(a, 14) == Rational(9, 4));
  CHECK(frequency_ratio(a, 3) == Rational(6, 5));
  CHECK(frequency_ratio(a, 12) == Rational(2, 1));
  CHECK(frequency_ratio(a, 26) == Rational(9, 2));
  CHECK_THROWS_AS(frequency_ratio(a, -1), std::invalid_argument);
}

TEST_CASE("scale serialization round-trips", "[scale]") {
  for (ScaleId id :
       {ScaleId::A, ScaleId::B, ScaleId::C, ScaleId::D, ScaleId::E}) {
    Scale s = builtin_scale(id);
    Scale back = parse_scale(serialize_scale(s));
    CHECK(back == s);
    CHECK(back.name() == s.name());
  }
  CHECK(serialize_scale(builtin_scale(ScaleId::E)).find("729/512") !=
        std::string::npos);
}

TEST_CASE("parse_scale reads bare ratio lists and name lines", "[scale]") {
  Scale a = parse_scale(
      "1/1 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8");
  CHECK(a == builtin_scale(ScaleId::A));
  CHECK(a.name() == "custom");

  Scale named = parse_scale(
      "my scale\n1/1, 16/15, 9/8, 6/5, 5/4, 4/3, 45/32, 3/2, 8/5, 5/3, "
      "16/9, 15/8\n");
  CHECK(named == builtin_scale(ScaleId::A));
  CHECK(named.name() == "my scale");

  Scale colons = parse_scale(
      "1:1 16:15 9:8 6:5 5:4 4:3 45:32 3:2 8:5 5:3 16:9 15:8");
  CHECK(colons == builtin_scale(ScaleId::A));

  // a name that itself looks like a ratio still round-trips
  Scale odd_name("3/2", builtin_scale(ScaleId::A).ratios());
  CHECK(parse_scale(serialize_scale(odd_name)).name() == "3/2");
}

TEST_CASE("parse_scale reports arity, token, and invariant errors",
          "[scale]") {
  CHECK_THROWS_WITH(
      parse_scale("1/1 9/8 5/4 4/3 3/2 5/3 15/8 16/15 6/5 45/32 8/5"),
      Catch::Matchers::ContainsSubstring("expected 12 ratios") &&
          Catch::Matchers::ContainsSubstring("11"));
  CHECK_THROWS_WITH(
      parse_scale("1/1 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 junk"),
      Catch::Matchers::ContainsSubstring("ratio 12"));
  CHECK_THROWS_WITH(
      parse_scale("1/1 16/15 9/8 6/5 5/4 4/3 45/32 3/2 8/5 5/3 16/9 9/4"),
      Catch::Matchers::ContainsSubstring("out of [1, 2)"));
  CHECK_THROWS_WITH(
      parse_scale("1/1 16/15 9/8 9/8 5/4 4/3 45/32 3/2 8/5 5/3 16/9 15/8"),
      Catch::Matchers::ContainsSubstring("not greater than"));
  CHECK_THROWS_WITH(
      parse_scale("3/2 16/15 9/8 6/5 5/4 4/3 45/32 31/20 8/5 5/3 16/9 15/8"),
      Catch::Matchers::ContainsSubstring("must be 1/1"));
  CHECK_THROWS_AS(
      parse_scale("1/1 16/15 9/8 6/5 5/4 4/3 45/0 3/2 8/5 5/3 16/9 15/8"),
      std::invalid_argument);
}

TEST_CASE("scale ids parse and print", "[scale]") {
  CHECK(parse_scale_id("A") == ScaleId::A);
  CHECK(parse_scale_id("E") == ScaleId::E);
  CHECK(to_string(ScaleId::C) == "C");
  CHECK_THROWS_AS(parse_scale_id("F"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scale_id("AB"), std::invalid_argument);
}

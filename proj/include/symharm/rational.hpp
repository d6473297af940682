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

#ifndef SYMHARM_RATIONAL_HPP
#define SYMHARM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symharm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative fraction over arbitrary-precision integers.
/// Always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(BigInt numerator, BigInt denominator) {
    if (denominator == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    if (numerator < 0) {
      throw std::invalid_argument("Rational: negative value " +
                                  numerator.str() + "/" + denominator.str());
    }
    BigInt g = boost::multiprecision::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  explicit Rational(BigInt integer) : Rational(std::move(integer), 1) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rational reciprocal() const {
    if (num_ == 0) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// "p/q", e.g. "45/32"; integers keep the explicit "/1".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  BigInt num_;
  BigInt den_;
};

/// Reduced fraction equal to p/q with positive denominator.
inline Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(p, q);
}

/// Least common multiple of a non-empty list of positive integers.
inline BigInt lcm_all(std::span<const BigInt> values) {
  if (values.empty()) throw std::invalid_argument("lcm_all: empty list");
  BigInt acc = 1;
  for (const BigInt& v : values) {
    if (v < 1) {
      throw std::invalid_argument("lcm_all: entries must be >= 1, got " +
                                  v.str());
    }
    acc = boost::multiprecision::lcm(acc, v);
  }
  return acc;
}

inline BigInt lcm_all(const std::vector<BigInt>& values) {
  return lcm_all(std::span<const BigInt>(values));
}

/// Parses "p/q" or "p:q" (the common ratio notations) into a Rational.
inline Rational parse_ratio(std::string_view token) {
  auto sep = token.find_first_of("/:");
  if (sep == std::string_view::npos || sep == 0 || sep + 1 == token.size()) {
    throw std::invalid_argument("malformed ratio \"" + std::string(token) +
                                "\" (expected p/q or p:q)");
  }
  auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) {
      throw std::invalid_argument("malformed ratio \"" + std::string(token) +
                                  "\"");
    }
    for (char c : part) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed ratio \"" + std::string(token) +
                                    "\" (non-digit '" + std::string(1, c) +
                                    "')");
      }
    }
    return BigInt(std::string(part));
  };
  BigInt p = parse_int(token.substr(0, sep));
  BigInt q = parse_int(token.substr(sep + 1));
  if (q == 0) {
    throw std::invalid_argument("malformed ratio \"" + std::string(token) +
                                "\" (zero denominator)");
  }
  return Rational(p, q);
}

/// Parses a plain decimal literal ("0.01", "1", ".5") exactly.
inline Rational parse_decimal(std::string_view text) {
  auto dot = text.find('.');
  std::string digits;
  int frac_len = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(text);
  } else {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_len = static_cast<int>(text.size() - dot - 1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed decimal \"" + std::string(text) +
                                "\"");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed decimal \"" + std::string(text) +
                                  "\"");
    }
  }
  BigInt den = 1;
  for (int i = 0; i < frac_len; ++i) den *= 10;
  return Rational(BigInt(digits), den);
}

/// floor(value^(1/k)) for value >= 0, k >= 1. Newton iteration on integers.
inline BigInt int_nth_root(const BigInt& value, unsigned k) {
  if (k == 0) throw std::invalid_argument("int_nth_root: k must be >= 1");
  if (value < 0) throw std::invalid_argument("int_nth_root: negative value");
  if (value == 0 || value == 1 || k == 1) return value;
  unsigned bits = boost::multiprecision::msb(value) + 1;
  BigInt x = BigInt(1) << (bits / k + 1);
  while (true) {
    BigInt xk1 = boost::multiprecision::pow(x, k - 1);
    BigInt y = ((k - 1) * x + value / xk1) / k;
    if (y >= x) return x;
    x = y;
  }
}

inline BigInt pow10(unsigned digits) {
  return boost::multiprecision::pow(BigInt(10), digits);
}

/// Exact rational surrogate for 2^(semitones/12), accurate to `digits`
/// decimal digits (floor(2^(n/12) * 10^digits) / 10^digits). 40 digits is
/// far beyond anything a percent-level tolerance can distinguish.
inline Rational equal_tempered_ratio(unsigned semitones, unsigned digits = 40) {
  BigInt scaled = boost::multiprecision::pow(BigInt(2), semitones) *
                  pow10(12 * digits);
  return Rational(int_nth_root(scaled, 12), pow10(digits));
}

/// Hard cap on continued-fraction terms. Any rational input terminates well
/// before this; the cap only guards against misuse.
inline constexpr int kMaxContinuedFractionTerms = 64;

/// First continued-fraction convergent p/q of x with |p/q - x|/x <= rel_tol.
/// Exact arithmetic throughout; x is a rational surrogate of the target.
inline Rational convergents_within(const Rational& x, const Rational& rel_tol) {
  if (x.num() == 0) {
    throw std::invalid_argument("convergents_within: x must be positive");
  }
  if (rel_tol.num() == 0 || !(rel_tol < Rational(1))) {
    throw std::invalid_argument(
        "convergents_within: rel_tol must be in (0, 1)");
  }
  BigInt num = x.num(), den = x.den();
  BigInt p_prev = 0, p_curr = 1;  // p_{-2}, p_{-1}
  BigInt q_prev = 1, q_curr = 0;  // q_{-2}, q_{-1}
  for (int term = 0; term < kMaxContinuedFractionTerms; ++term) {
    BigInt a = num / den;
    BigInt p = a * p_curr + p_prev;
    BigInt q = a * q_curr + q_prev;
    p_prev = p_curr;
    q_prev = q_curr;
    p_curr = p;
    q_curr = q;
    // |p/q - x|/x <= tn/td  <=>  |p*xden - q*xnum| * td <= tn * q * xnum
    BigInt diff = boost::multiprecision::abs(p * x.den() - q * x.num());
    if (diff * rel_tol.den() <= rel_tol.num() * q * x.num()) {
      return Rational(p, q);
    }
    BigInt rem = num - a * den;
    if (rem == 0) break;  // x itself reached; cannot happen before tolerance
    num = den;
    den = rem;
  }
  throw std::runtime_error("convergents_within: no convergent within tolerance after " +
                           std::to_string(kMaxContinuedFractionTerms) +
                           " terms");
}

/// Converts a double exactly (doubles are dyadic rationals) and delegates.
inline Rational convergents_within(double x, double rel_tol) {
  if (!(x > 0) || !std::isfinite(x)) {
    throw std::invalid_argument("convergents_within: x must be positive");
  }
  if (!(rel_tol > 0) || !(rel_tol < 1)) {
    throw std::invalid_argument(
        "convergents_within: rel_tol must be in (0, 1)");
  }
  auto to_rational = [](double v) {
    int exp = 0;
    double mant = std::frexp(v, &exp);
    auto scaled = static_cast<long long>(
        std::ldexp(mant, std::numeric_limits<double>::digits));
    int shift = exp - std::numeric_limits<double>::digits;
    BigInt num(scaled);
    BigInt den(1);
    if (shift >= 0) {
      num <<= shift;
    } else {
      den <<= -shift;
    }
    return Rational(num, den);
  };
  return convergents_within(to_rational(x), to_rational(rel_tol));
}

}  // namespace symharm

#endif  // SYMHARM_RATIONAL_HPP

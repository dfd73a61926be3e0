// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/bigcount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace monoseq {

BigCount binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) {
    return 0;
  }
  r = std::min(r, n - r);
  BigCount result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

// Exact rational value of a finite double.
Rational exact_rational(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an integer.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational result = Rational(BigCount(scaled));
  const int shift = exponent - 53;
  BigCount pow2 = 1;
  pow2 <<= std::abs(shift);
  if (shift >= 0) {
    result *= Rational(pow2);
  } else {
    result /= Rational(pow2);
  }
  return result;
}

} // namespace

Rational rational_upper(long double x) {
  // Two ulps of slack absorb the libm error of the caller's sqrt/log.
  double d = static_cast<double>(x);
  for (int i = 0; i < 2; ++i) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
  }
  return exact_rational(d);
}

Rational rational_lower(long double x) {
  double d = static_cast<double>(x);
  for (int i = 0; i < 2; ++i) {
    d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  }
  return exact_rational(d);
}

Rational exp_lower(const Rational& x, int terms) {
  if (x < 0) {
    throw std::invalid_argument("exp_lower expects a nonnegative argument");
  }
  Rational sum = 1;
  Rational term = 1;
  for (int i = 1; i <= terms; ++i) {
    term *= x;
    term /= i;
    sum += term;
  }
  return sum;
}

Rational exp_neg_upper(const Rational& x, int terms) {
  return Rational(1) / exp_lower(x, terms);
}

BigCount ceil(const Rational& r) {
  const BigCount num = boost::multiprecision::numerator(r);
  const BigCount den = boost::multiprecision::denominator(r);
  BigCount q = num / den;
  if (q * den < num) {
    ++q;
  }
  return q;
}

} // namespace monoseq

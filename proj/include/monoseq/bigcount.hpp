// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoseq {

/// Exact nonnegative counts. Never narrowed implicitly.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r); zero when r < 0, r > n or n < 0.
BigCount binomial(std::int64_t n, std::int64_t r);

std::string to_string(const BigCount& value);
std::string to_string(const Rational& value);

/// Smallest rational >= x that is exactly representable as a double.
Rational rational_upper(long double x);
/// Largest rational <= x that is exactly representable as a double.
Rational rational_lower(long double x);

/// Lower bound on exp(x) for rational x >= 0 (truncated Taylor series).
Rational exp_lower(const Rational& x, int terms = 40);

/// Upper bound on exp(-x) for rational x >= 0.
Rational exp_neg_upper(const Rational& x, int terms = 40);

/// ceil(r) for a nonnegative rational.
BigCount ceil(const Rational& r);

} // namespace monoseq

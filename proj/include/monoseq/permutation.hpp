// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace monoseq {

/// A bijection on {0, ..., n-1}, stored 0-based. The external form
/// (text, JSON, CLI) is 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a permutation of 1..n.
  static Permutation from_one_based(std::span<const int> values);
  /// Validates that `values` is a permutation of 0..n-1.
  static Permutation from_zero_based(std::vector<int> values);
  static Permutation identity(int n);
  /// Relative order of distinct values, e.g. {7, 2, 9} -> [1, 0, 2].
  static Permutation standardize(std::span<const int> distinct_values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](int position) const { return values_[position]; }
  std::span<const int> values() const noexcept { return values_; }
  std::vector<int> one_based() const;

  /// Position flip: p(n-1-i).
  Permutation reversed() const;
  /// Value flip sigma*(i) = n - 1 - sigma(i) (0-based).
  Permutation complemented() const;
  Permutation inverse() const;

  std::string to_text() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// Parses one line of space-separated 1-based values.
Permutation parse_permutation_text(const std::string& text);

} // namespace monoseq

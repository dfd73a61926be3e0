// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monoseq/error.hpp"

namespace monoseq {

Permutation Permutation::from_one_based(std::span<const int> values) {
  std::vector<int> zero(values.begin(), values.end());
  for (int& v : zero) {
    --v;
  }
  return from_zero_based(std::move(zero));
}

Permutation Permutation::from_zero_based(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(values.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    if (v < 0 || v >= n) {
      throw InvalidArgument("permutation value " + std::to_string(v + 1) +
                            " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw InvalidArgument("permutation value " + std::to_string(v + 1) +
                            " repeated");
    }
    seen[v] = 1;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  if (n < 0) {
    throw InvalidArgument("negative permutation length");
  }
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 0);
  return Permutation(std::move(values));
}

Permutation Permutation::standardize(std::span<const int> distinct_values) {
  const int n = static_cast<int>(distinct_values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return distinct_values[a] < distinct_values[b];
  });
  std::vector<int> values(n);
  for (int rank = 0; rank < n; ++rank) {
    if (rank > 0 &&
        distinct_values[order[rank]] == distinct_values[order[rank - 1]]) {
      throw InvalidArgument("standardize requires distinct values");
    }
    values[order[rank]] = rank;
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(values_);
  for (int& v : out) {
    ++v;
  }
  return out;
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(values_.rbegin(), values_.rend()));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> out(values_);
  for (int& v : out) {
    v = n - 1 - v;
  }
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(values_.size());
  for (int i = 0; i < size(); ++i) {
    out[values_[i]] = i;
  }
  return Permutation(std::move(out));
}

std::string Permutation::to_text() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(values_[i] + 1);
  }
  return out;
}

Permutation parse_permutation_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + token + "'");
    }
    if (used != token.size()) {
      throw InvalidArgument("not an integer: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw InvalidArgument("empty permutation");
  }
  return Permutation::from_one_based(values);
}

} // namespace monoseq

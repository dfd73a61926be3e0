// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/perm_core.hpp"

#include <algorithm>
#include <set>

#include "monoseq/error.hpp"

namespace monoseq {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw InvalidArgument(std::string(name) + " must be >= 1, got " +
                          std::to_string(value));
  }
}

} // namespace

Permutation build_tau(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  std::vector<int> values;
  values.reserve(n);
  const long long nn = n;
  for (int j = k; j >= 1; --j) {
    const long long lo = (j - 1) * nn / k;  // block holds lo+1 .. hi (1-based)
    const long long hi = j * nn / k;
    for (long long v = lo; v < hi; ++v) {
      values.push_back(static_cast<int>(v));
    }
  }
  return Permutation::from_zero_based(std::move(values));
}

Permutation build_sigma_extremal(int k, int variant) {
  if (k < 2) {
    throw InvalidArgument("sigma construction needs k >= 2, got " +
                          std::to_string(k));
  }
  if (variant != 1 && variant != 2) {
    throw InvalidArgument("sigma variant must be 1 or 2, got " +
                          std::to_string(variant));
  }
  // Rows listed bottom-up, 1-based values. Row j >= 1 is a lead value
  // followed by the run j(k+1)+3 .. j(k+1)+k+2; row 0 is 1, 4-i, 4..k+2.
  std::vector<std::vector<int>> rows(k);
  rows[0].push_back(1);
  rows[0].push_back(4 - variant);
  for (int v = 4; v <= k + 2; ++v) {
    rows[0].push_back(v);
  }
  for (int j = 1; j < k; ++j) {
    const int lead = (j == 1) ? 1 + variant : (j - 1) * (k + 1) + 2;
    rows[j].push_back(lead);
    for (int v = j * (k + 1) + 3; v <= j * (k + 1) + k + 2; ++v) {
      rows[j].push_back(v);
    }
  }
  rows[k - 1].insert(rows[k - 1].begin(), k * k + 1);

  std::vector<int> values;
  for (int j = k - 1; j >= 0; --j) {
    values.insert(values.end(), rows[j].begin(), rows[j].end());
  }
  return Permutation::from_one_based(values);
}

BigCount m_tau_formula(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  const int r = n % k;
  const int floor_q = n / k;
  const int ceil_q = (n + k - 1) / k;
  return BigCount(r) * binomial(ceil_q, k + 1) +
         BigCount(k - r) * binomial(floor_q, k + 1);
}

ParamSplit param_split(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  ParamSplit split;
  split.k = k;
  split.n = n;
  split.ell = (n + k - 1) / k - k - 1;
  split.q = n - k * (k + split.ell);
  split.r = n % k;
  split.subcritical = static_cast<long long>(n) <= static_cast<long long>(k) * k;
  MONOSEQ_ENSURE(split.q > 0 && split.q <= k, "0 < q <= k");
  MONOSEQ_ENSURE(n == split.q * (k + split.ell + 1) +
                          (k - split.q) * (k + split.ell),
                 "n = q(k+l+1) + (k-q)(k+l)");
  return split;
}

BigCount delta_formula(int k, int n) {
  const ParamSplit split = param_split(k, n);
  if (split.subcritical) {
    throw InvalidArgument("difference formula needs n > k^2 (k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  return binomial(k + split.ell, k);
}

std::vector<Permutation> symmetries(const Permutation& p) {
  std::set<Permutation> orbit{p};
  std::vector<Permutation> frontier{p};
  while (!frontier.empty()) {
    const Permutation current = frontier.back();
    frontier.pop_back();
    for (const Permutation& image :
         {current.reversed(), current.complemented(), current.inverse()}) {
      if (orbit.insert(image).second) {
        frontier.push_back(image);
      }
    }
  }
  MONOSEQ_ENSURE(8 % orbit.size() == 0, "orbit size divides 8");
  return {orbit.begin(), orbit.end()};
}

Permutation canonical_representative(const Permutation& p) {
  return symmetries(p).front();
}

Rational mu(int k, int n, const BigCount& m) {
  require_positive(k, "k");
  if (n < k + 1) {
    throw InvalidArgument("mu needs n >= k+1 so that C(n, k+1) > 0");
  }
  return Rational(m) / Rational(binomial(n, k + 1));
}

} // namespace monoseq

// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "monoseq/error.hpp"
#include "monoseq/perm_core.hpp"

namespace monoseq {

Decomposition decompose(const Poset& p) {
  const int n = p.size();
  Decomposition dec;
  dec.level_of = chain_length_ending_at(p);
  for (int& level : dec.level_of) {
    --level;
  }
  dec.height = n == 0 ? 0 : 1 + *std::max_element(dec.level_of.begin(), dec.level_of.end());
  const int h = dec.height;
  dec.levels.assign(h, {});
  for (int x = 0; x < n; ++x) {
    dec.levels[dec.level_of[x]].push_back(x);
  }

  dec.hasse.assign(h > 0 ? h - 1 : 0, {});
  dec.down_degree.assign(n, 0);
  dec.up_degree.assign(n, 0);
  for (int i = 0; i + 1 < h; ++i) {
    for (int x : dec.levels[i]) {
      for (int y : dec.levels[i + 1]) {
        if (p.less(x, y)) {
          dec.hasse[i].emplace_back(x, y);
          ++dec.down_degree[y];
          ++dec.up_degree[x];
        }
      }
    }
  }
  for (int i = 1; i < h; ++i) {
    for (int y : dec.levels[i]) {
      MONOSEQ_ENSURE(dec.down_degree[y] >= 1,
                     "every element above the first level has a lower neighbour");
    }
  }

  dec.u.assign(n, 0);
  if (h > 0) {
    for (int x : dec.levels[h - 1]) {
      dec.u[x] = 1;
    }
  }
  for (int i = h - 2; i >= 0; --i) {
    for (const auto& [x, y] : dec.hasse[i]) {
      dec.u[x] += dec.u[y];
    }
  }

  dec.sigma.assign(h, 0);
  dec.a_prime.assign(h, {});
  dec.a_double_prime.assign(h, {});
  for (int i = 0; i < h; ++i) {
    for (int x : dec.levels[i]) {
      dec.sigma[i] += dec.u[x];
      if (dec.u[x] >= 1) {
        dec.a_prime[i].push_back(x);
      }
      if (dec.u[x] >= 2) {
        dec.a_double_prime[i].push_back(x);
      }
    }
  }
  for (int i = 0; i + 1 < h; ++i) {
    MONOSEQ_ENSURE(dec.sigma[i] >= dec.sigma[i + 1], "Sigma_i >= Sigma_{i+1}");
  }

  dec.b.assign(h, {});
  dec.b_all.assign(h, {});
  dec.d.assign(h, {});
  dec.c.assign(h, {});
  for (int i = 1; i < h; ++i) {
    for (int y : dec.levels[i]) {
      if (dec.down_degree[y] == 1) {
        dec.b_all[i].push_back(y);
      }
    }
    for (int y : dec.a_prime[i]) {
      if (dec.down_degree[y] == 1) {
        dec.b[i].push_back(y);
      } else if (dec.down_degree[y] == 2) {
        dec.d[i].push_back(y);
      }
    }
  }
  std::vector<int> up_into_prime(n, 0);
  for (int i = 0; i + 1 < h; ++i) {
    for (const auto& [x, y] : dec.hasse[i]) {
      if (dec.u[y] >= 1) {
        ++up_into_prime[x];
      }
    }
    for (int x : dec.a_prime[i]) {
      if (up_into_prime[x] <= 1) {
        dec.c[i].push_back(x);
      }
    }
  }
  return dec;
}

namespace {

Rational log2_times_sqrt_upper(int k) {
  const long double value =
      50.0L * std::sqrt(static_cast<long double>(k)) *
      std::log2(static_cast<long double>(k));
  return rational_upper(value);
}

} // namespace

IndexSets index_sets(const Poset& p, const Decomposition& dec, int k) {
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  IndexSets out;
  out.k = k;
  const int h = dec.height;
  auto size = [](const std::vector<int>& s) { return static_cast<long long>(s.size()); };
  for (int i = 0; i < h; ++i) {
    if (size(dec.levels[i]) >= k + 1) {
      out.f.push_back(i + 1);
    }
  }
  for (int i = 0; i + 1 < h; ++i) {
    if (size(dec.levels[i]) - size(dec.a_prime[i]) + size(dec.a_prime[i + 1]) >=
        k + 1) {
      out.f_prime.push_back(i + 1);
    }
  }
  if (!out.f_prime.empty()) {
    const int f_top = out.f_prime.back();
    for (int i = 0; i + 1 < f_top; ++i) {
      if (size(dec.a_double_prime[i + 1]) - size(dec.a_double_prime[i]) +
              size(dec.levels[i]) >=
          k + 1) {
        out.f_double_prime.push_back(i + 1);
      }
    }
  }
  out.surplus = surplus(p, k);
  if (p.size() >= 1) {
    const ParamSplit split = param_split(k, p.size());
    out.ell = split.ell;
    out.q = split.q;
    if (split.ell >= 1) {
      Rational s = (Rational(1) + Rational(split.q) / Rational(split.ell)) *
                   Rational(k);
      s += k == 1 ? Rational(0) : log2_times_sqrt_upper(k);
      out.threshold = s;
      out.threshold_approx = static_cast<double>(s);
    }
  }
  return out;
}

IndexSets index_sets(const Poset& p, int k) {
  return index_sets(p, decompose(p), k);
}

} // namespace monoseq

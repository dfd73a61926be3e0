// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/permutation.hpp"

namespace monoseq {

/// k increasing blocks of sizes floor(n/k) or ceil(n/k), stacked top block
/// first, so that no decreasing run of length k+1 exists.
Permutation build_tau(int k, int n);

/// The mixed-type extremal permutations on k^2+k+1 points; `variant` selects
/// which of the two families (1 or 2) and equals the number of decreasing
/// (k+1)-subsequences.
Permutation build_sigma_extremal(int k, int variant);

/// Closed form for the number of monotone (k+1)-subsequences of build_tau(k, n).
BigCount m_tau_formula(int k, int n);

/// n = q (k + ell + 1) + (k - q)(k + ell) with 0 < q <= k, r = n mod k.
struct ParamSplit {
  int k = 0;
  int n = 0;
  int ell = 0;
  int q = 0;
  int r = 0;
  bool subcritical = false;  // n <= k^2, ell may be negative
};

ParamSplit param_split(int k, int n);

/// m_tau(k, n) - m_tau(k, n-1) = C(k + ell, k); requires n > k^2.
BigCount delta_formula(int k, int n);

/// Orbit of p under the order-8 group generated by reverse, complement and
/// inverse, sorted lexicographically (0-based values).
std::vector<Permutation> symmetries(const Permutation& p);

/// Lexicographically least member of the symmetry orbit.
Permutation canonical_representative(const Permutation& p);

/// m / C(n, k+1).
Rational mu(int k, int n, const BigCount& m);

} // namespace monoseq

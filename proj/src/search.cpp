// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <limits>
#include <random>
#include <span>
#include <thread>

#include "monoseq/counting.hpp"
#include "monoseq/error.hpp"
#include "monoseq/perm_core.hpp"

namespace monoseq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TaskResult {
  std::uint64_t best = 0;
  std::uint64_t nodes = 0;
  std::vector<Witness> witnesses;
  std::map<std::pair<std::uint64_t, std::uint64_t>, TypeTally> tally;
  std::uint64_t classes = 0;
  std::uint64_t permutations = 0;
};

class PrefixSearch {
 public:
  PrefixSearch(int n, int k, const SearchOptions& options,
               std::atomic<std::uint64_t>& total_nodes, std::atomic<bool>& abort)
      : n_(n), k_(k), width_(k + 2), options_(options),
        total_nodes_(total_nodes), abort_(abort),
        values_(n), inc_(static_cast<std::size_t>(n) * (k + 2), 0),
        dec_(static_cast<std::size_t>(n) * (k + 2), 0) {}

  TaskResult run(std::span<const int> prefix, std::uint64_t bound) {
    result_ = TaskResult{};
    result_.best = bound;
    used_ = 0;
    std::uint64_t partial = 0;
    for (int d = 0; d < static_cast<int>(prefix.size()); ++d) {
      partial += place(d, prefix[d]);
      used_ |= 1u << prefix[d];
    }
    descend(static_cast<int>(prefix.size()), partial);
    flush_nodes();
    return std::move(result_);
  }

 private:
  // Fills the layer tables for position d holding value v; returns the
  // number of monotone (k+1)-subsequences ending there.
  std::uint64_t place(int d, int v) {
    values_[d] = v;
    std::uint64_t* inc = &inc_[static_cast<std::size_t>(d) * width_];
    std::uint64_t* dec = &dec_[static_cast<std::size_t>(d) * width_];
    std::fill(inc, inc + width_, 0);
    std::fill(dec, dec + width_, 0);
    inc[1] = dec[1] = 1;
    for (int j = 0; j < d; ++j) {
      const std::uint64_t* src = values_[j] < v
                                     ? &inc_[static_cast<std::size_t>(j) * width_]
                                     : &dec_[static_cast<std::size_t>(j) * width_];
      std::uint64_t* dst = values_[j] < v ? inc : dec;
      for (int L = 2; L <= k_ + 1; ++L) {
        dst[L] += src[L - 1];
      }
    }
    return inc[k_ + 1] + dec[k_ + 1];
  }

  void flush_nodes() {
    if (pending_ == 0) {
      return;
    }
    const std::uint64_t total = total_nodes_.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total > options_.budget) {
      abort_.store(true);
    }
  }

  void descend(int depth, std::uint64_t partial) {
    ++result_.nodes;
    if (++pending_ >= 4096) {
      flush_nodes();
    }
    if (abort_.load(std::memory_order_relaxed)) {
      return;
    }
    if (depth == n_) {
      leaf(partial);
      return;
    }
    const long long rest = n_ - depth - 1;
    const std::uint64_t forced =
        rest > static_cast<long long>(k_) * k_
            ? static_cast<std::uint64_t>(rest - static_cast<long long>(k_) * k_)
            : 0;
    for (int v = 0; v < n_; ++v) {
      if (used_ >> v & 1u) {
        continue;
      }
      const std::uint64_t next = partial + place(depth, v);
      if (next + forced > result_.best) {
        continue;
      }
      used_ |= 1u << v;
      descend(depth + 1, next);
      used_ &= ~(1u << v);
    }
  }

  void leaf(std::uint64_t count) {
    Permutation p = Permutation::from_zero_based(values_);
    std::uint64_t orbit = 1;
    if (options_.use_symmetry) {
      const auto orbit_members = symmetries(p);
      if (orbit_members.front() != p) {
        return;
      }
      orbit = orbit_members.size();
    }
    if (count < result_.best) {
      result_.best = count;
      result_.witnesses.clear();
      result_.tally.clear();
      result_.classes = 0;
      result_.permutations = 0;
    }
    std::uint64_t inc_total = 0;
    std::uint64_t dec_total = 0;
    for (int d = 0; d < n_; ++d) {
      inc_total += inc_[static_cast<std::size_t>(d) * width_ + k_ + 1];
      dec_total += dec_[static_cast<std::size_t>(d) * width_ + k_ + 1];
    }
    auto& entry = result_.tally[{inc_total, dec_total}];
    ++entry.classes;
    entry.permutations += orbit;
    ++result_.classes;
    result_.permutations += orbit;
    if (result_.witnesses.size() < options_.witness_cap) {
      result_.witnesses.push_back(Witness{std::move(p), inc_total, dec_total, orbit});
    }
  }

  int n_;
  int k_;
  int width_;
  const SearchOptions& options_;
  std::atomic<std::uint64_t>& total_nodes_;
  std::atomic<bool>& abort_;
  std::vector<int> values_;
  std::vector<std::uint64_t> inc_;
  std::vector<std::uint64_t> dec_;
  std::uint32_t used_ = 0;
  std::uint64_t pending_ = 0;
  TaskResult result_;
};

std::vector<std::vector<int>> make_tasks(int n, bool use_symmetry) {
  std::vector<std::vector<int>> tasks;
  // Complement maps first value v to n-1-v, so one of the two is enough.
  const int first_limit = use_symmetry ? (n - 1) / 2 : n - 1;
  for (int a = 0; a <= first_limit; ++a) {
    if (n == 1) {
      tasks.push_back({a});
      continue;
    }
    for (int b = 0; b < n; ++b) {
      if (b != a) {
        tasks.push_back({a, b});
      }
    }
  }
  return tasks;
}

void check_witness(const Witness& w, int k, const BigCount& minimum) {
  const std::size_t n = w.permutation.size();
  const BigCount subsets = binomial(static_cast<int>(n), k + 1);
  const CountReport report = subsets <= kDefaultBruteForceBudget
                                 ? brute_force_count(w.permutation, k)
                                 : count_monotone(w.permutation, k);
  MONOSEQ_ENSURE(report.total == minimum, "witness attains the minimum");
  MONOSEQ_ENSURE(report.increasing == w.increasing && report.decreasing == w.decreasing,
                 "witness type counts agree with the oracle");
}

} // namespace

SearchResult exhaustive_min(int n, int k, const SearchOptions& options) {
  if (n < 1 || n > kMaxExhaustiveN) {
    throw InvalidArgument("exhaustive search needs 1 <= n <= " +
                          std::to_string(kMaxExhaustiveN));
  }
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  if (options.workers < 1) {
    throw InvalidArgument("workers must be >= 1");
  }
  const auto start = Clock::now();
  const BigCount formula = m_tau_formula(k, n);
  const std::uint64_t bound = formula.convert_to<std::uint64_t>();

  const auto tasks = make_tasks(n, options.use_symmetry);
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total_nodes{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    PrefixSearch search(n, k, options, total_nodes, abort);
    try {
      for (std::size_t t = next++; t < tasks.size() && !abort; t = next++) {
        results[t] = search.run(tasks[t], bound);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      abort = true;
    }
  };
  const int workers =
      std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  if (abort || total_nodes > options.budget) {
    throw BudgetExceeded("search budget of " + std::to_string(options.budget) +
                             " nodes exceeded",
                         "{\"n\":" + std::to_string(n) + ",\"k\":" + std::to_string(k) +
                             ",\"states_visited\":" + std::to_string(total_nodes.load()) +
                             ",\"upper_bound\":" + to_string(formula) + "}");
  }

  SearchResult out;
  out.n = n;
  out.k = k;
  std::uint64_t best = bound;
  for (const auto& r : results) {
    if (r.classes > 0) {
      best = std::min(best, r.best);
    }
    out.states_visited += r.nodes;
  }
  out.minimum = best;
  for (auto& r : results) {
    if (r.classes == 0 || r.best != best) {
      continue;
    }
    for (const auto& [key, tally] : r.tally) {
      auto& entry = out.type_breakdown[key];
      entry.classes += tally.classes;
      entry.permutations += tally.permutations;
    }
    out.minimizer_classes += r.classes;
    out.minimizer_permutations += r.permutations;
    for (auto& w : r.witnesses) {
      if (out.witnesses.size() < options.witness_cap) {
        out.witnesses.push_back(std::move(w));
      }
    }
  }
  MONOSEQ_ENSURE(out.minimizer_classes > 0, "tau attains the starting bound");
  for (const auto& w : out.witnesses) {
    check_witness(w, k, out.minimum);
  }
  out.elapsed_seconds = seconds_since(start);
  return out;
}

const char* to_string(TypeLabel label) {
  switch (label) {
    case TypeLabel::IncreasingOnly:
      return "increasing-only";
    case TypeLabel::DecreasingOnly:
      return "decreasing-only";
    case TypeLabel::Mixed:
      return "mixed";
    case TypeLabel::None:
      return "none";
  }
  return "none";
}

TypeLabel classify_counts(const BigCount& increasing, const BigCount& decreasing) {
  if (increasing > 0 && decreasing > 0) {
    return TypeLabel::Mixed;
  }
  if (increasing > 0) {
    return TypeLabel::IncreasingOnly;
  }
  if (decreasing > 0) {
    return TypeLabel::DecreasingOnly;
  }
  return TypeLabel::None;
}

TypeLabel classify_extremal(const Permutation& p, int k) {
  const CountReport report = count_monotone(p, k);
  return classify_counts(report.increasing, report.decreasing);
}

TheoremReport verify_theorem(int n, int k, const SearchOptions& options) {
  TheoremReport report;
  report.search = exhaustive_min(n, k, options);
  report.formula = m_tau_formula(k, n);
  report.matches_formula = report.search.minimum == report.formula;
  report.subcritical = n <= k * k;
  report.critical = n == k * k + k + 1;
  for (const auto& [key, tally] : report.search.type_breakdown) {
    const auto [inc, dec] = key;
    if (inc > 0 && dec > 0) {
      report.mixed_classes += tally.classes;
      report.mixed_permutations += tally.permutations;
    }
    if (report.critical && std::max(inc, dec) < static_cast<std::uint64_t>(2 * k - 1)) {
      report.majority_holds = false;
    }
  }
  if (!report.critical) {
    report.single_type_holds = report.mixed_classes == 0;
  }
  return report;
}

// ---------------------------------------------------------------- heuristic

namespace {

BigCount total_count(const std::vector<int>& values, int k) {
  return count_monotone(Permutation::from_zero_based(values), k).total;
}

} // namespace

SearchResult heuristic_min(int n, int k, int trials, std::uint64_t seed) {
  if (n < 1 || k < 1) {
    throw InvalidArgument("n and k must be >= 1");
  }
  if (trials < 0) {
    throw InvalidArgument("trials must be >= 0");
  }
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  SearchResult out;
  out.n = n;
  out.k = k;
  out.upper_bound_only = true;
  std::vector<std::vector<int>> best_found;
  bool have_best = false;

  for (int trial = 0; trial <= trials; ++trial) {
    std::vector<int> current;
    if (trial == 0) {
      const auto tau = build_tau(k, n);
      current.assign(tau.values().begin(), tau.values().end());
    } else {
      current.resize(n);
      std::iota(current.begin(), current.end(), 0);
      std::shuffle(current.begin(), current.end(), rng);
    }
    BigCount value = total_count(current, k);
    ++out.states_visited;
    for (bool improved = true; improved;) {
      improved = false;
      for (int i = 0; i + 1 < n; ++i) {
        std::swap(current[i], current[i + 1]);
        BigCount candidate = total_count(current, k);
        ++out.states_visited;
        if (candidate < value) {
          value = std::move(candidate);
          improved = true;
        } else {
          std::swap(current[i], current[i + 1]);
        }
      }
    }
    const auto rep = canonical_representative(Permutation::from_zero_based(current));
    const std::vector<int> canonical(rep.values().begin(), rep.values().end());
    if (!have_best || value < out.minimum) {
      have_best = true;
      out.minimum = value;
      best_found.assign(1, canonical);
    } else if (value == out.minimum &&
               std::find(best_found.begin(), best_found.end(), canonical) ==
                   best_found.end()) {
      best_found.push_back(canonical);
    }
  }
  for (const auto& values : best_found) {
    Permutation p = Permutation::from_zero_based(values);
    const CountReport report = count_monotone(p, k);
    const std::uint64_t orbit = symmetries(p).size();
    if (report.increasing <= std::numeric_limits<std::uint64_t>::max() &&
        report.decreasing <= std::numeric_limits<std::uint64_t>::max()) {
      auto& entry = out.type_breakdown[{report.increasing.convert_to<std::uint64_t>(),
                                        report.decreasing.convert_to<std::uint64_t>()}];
      ++entry.classes;
      entry.permutations += orbit;
    }
    ++out.minimizer_classes;
    out.minimizer_permutations += orbit;
    out.witnesses.push_back(Witness{std::move(p), report.increasing, report.decreasing, orbit});
  }
  MONOSEQ_ENSURE(out.minimum <= m_tau_formula(k, n), "tau seeds the pool");
  out.elapsed_seconds = seconds_since(start);
  return out;
}

} // namespace monoseq

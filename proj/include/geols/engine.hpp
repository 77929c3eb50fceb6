// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generic local search over subsets of a ground set {0, ..., n-1}.
//
// A minimization step removes a <= k elements of the current solution and
// adds b < a elements outside it; a maximization step removes a elements and
// adds a < b <= k. The search halts when no such swap keeps the solution
// feasible. Candidate swaps are scanned in a fixed canonical order
// (lexicographic on the sorted removed set, then on the sorted added set) and
// the first improving one is taken, so runs are fully deterministic.

#ifndef GEOLS_ENGINE_HPP_
#define GEOLS_ENGINE_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geols/error.hpp"

namespace geols {

enum class Direction { kMinimize, kMaximize };

// Sorted, duplicate-free list of ground-set indices.
using IndexSet = std::vector<int>;

template <class P>
concept LocalSearchProblem = requires(const P& p, std::span<const int> s) {
  { p.ground_size() } -> std::convertible_to<int>;
  { p.direction() } -> std::same_as<Direction>;
  { p.is_feasible(s) } -> std::convertible_to<bool>;
};

// Problems may declare that feasibility is monotone: downward closed for
// maximization, upward closed for minimization. The scan then skips subtrees
// that monotonicity proves infeasible; the swap it returns is unchanged.
template <class P>
bool IsMonotone(const P& p) {
  if constexpr (requires { { p.monotone() } -> std::convertible_to<bool>; }) {
    return p.monotone();
  } else {
    return false;
  }
}

template <LocalSearchProblem P>
IndexSet initial_solution(const P& p) {
  if constexpr (requires { { p.initial_solution() } -> std::convertible_to<IndexSet>; }) {
    return p.initial_solution();
  } else {
    IndexSet start;
    if (p.direction() == Direction::kMinimize) {
      for (int i = 0; i < p.ground_size(); ++i) start.push_back(i);
    }
    return start;
  }
}

struct Swap {
  IndexSet removed;
  IndexSet added;

  friend bool operator==(const Swap&, const Swap&) = default;
};

enum class TieBreak { kLexicographic };

struct SearchConfig {
  int k = 1;
  TieBreak tie_break = TieBreak::kLexicographic;
  std::optional<int> max_iterations;
  // Optional neighborhood filter. When set, a swap with a nonempty removed set
  // only adds elements adjacent to one of the removed ones. Once the filtered
  // scan stalls, an unfiltered scan runs, so the result is still locally
  // optimal under the full neighborhood.
  std::function<bool(int candidate, int removed)> adjacent;
};

struct Solution {
  IndexSet initial;
  IndexSet selected;
  std::vector<Swap> trace;
  int iterations = 0;
  // False only when max_iterations stopped the search early.
  bool converged = true;
};

// (current \ removed) ∪ added, sorted.
inline IndexSet ApplySwap(std::span<const int> current, const Swap& swap) {
  IndexSet out;
  out.reserve(current.size() + swap.added.size());
  std::set_difference(current.begin(), current.end(), swap.removed.begin(),
                      swap.removed.end(), std::back_inserter(out));
  IndexSet merged;
  merged.reserve(out.size() + swap.added.size());
  std::merge(out.begin(), out.end(), swap.added.begin(), swap.added.end(),
             std::back_inserter(merged));
  return merged;
}

namespace internal {

template <LocalSearchProblem P>
class SwapScanner {
 public:
  SwapScanner(const P& problem, std::span<const int> current, int k,
              const std::function<bool(int, int)>* adjacent)
      : problem_(problem),
        current_(current.begin(), current.end()),
        k_(k),
        adjacent_(adjacent),
        minimize_(problem.direction() == Direction::kMinimize),
        monotone_(IsMonotone(problem)) {
    const int n = problem.ground_size();
    std::vector<char> in_current(static_cast<std::size_t>(n), 0);
    for (int i : current_) in_current[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < n; ++i) {
      if (!in_current[static_cast<std::size_t>(i)]) complement_.push_back(i);
    }
  }

  std::optional<Swap> Find() {
    found_.reset();
    ScanRemoved(0);
    return found_;
  }

 private:
  bool Feasible() {
    IndexSet candidate;
    candidate.reserve(current_.size() + added_.size());
    std::set_difference(current_.begin(), current_.end(), removed_.begin(),
                        removed_.end(), std::back_inserter(candidate));
    const std::size_t mid = candidate.size();
    candidate.insert(candidate.end(), added_.begin(), added_.end());
    std::inplace_merge(candidate.begin(), candidate.begin() + static_cast<std::ptrdiff_t>(mid),
                       candidate.end());
    return problem_.is_feasible(std::span<const int>(candidate));
  }

  // Everything except the removed set; the most permissive completion of a
  // minimization swap.
  bool FeasibleWithoutRemoved() {
    IndexSet all;
    all.reserve(current_.size() + complement_.size());
    std::merge(current_.begin(), current_.end(), complement_.begin(), complement_.end(),
               std::back_inserter(all));
    IndexSet rest;
    std::set_difference(all.begin(), all.end(), removed_.begin(), removed_.end(),
                        std::back_inserter(rest));
    return problem_.is_feasible(std::span<const int>(rest));
  }

  // Pre-order DFS over subsets of current_ starting at position `from`;
  // visits removed sets in lexicographic order.
  void ScanRemoved(std::size_t from) {
    if (found_) return;
    const int a = static_cast<int>(removed_.size());
    bool descend = true;
    if (minimize_) {
      if (a >= 1) {
        if (monotone_ && !FeasibleWithoutRemoved()) return;
        ScanAdded(0);
      }
      descend = a < k_;
    } else {
      const int max_add = std::min<int>(k_, static_cast<int>(complement_.size()));
      if (a + 1 > max_add) return;
      ScanAdded(0);
      descend = a + 1 < k_;
    }
    if (!descend) return;
    for (std::size_t i = from; i < current_.size() && !found_; ++i) {
      removed_.push_back(current_[i]);
      ScanRemoved(i + 1);
      removed_.pop_back();
    }
  }

  bool Admissible(int candidate) const {
    if (adjacent_ == nullptr || !*adjacent_ || removed_.empty()) return true;
    return std::any_of(removed_.begin(), removed_.end(),
                       [&](int r) { return (*adjacent_)(candidate, r); });
  }

  void ScanAdded(std::size_t from) {
    if (found_) return;
    const int a = static_cast<int>(removed_.size());
    const int b = static_cast<int>(added_.size());
    int max_b = 0;
    if (minimize_) {
      max_b = a - 1;
      if (Feasible()) {
        found_ = Swap{removed_, added_};
        return;
      }
    } else {
      max_b = k_;
      if (b >= a + 1) {
        const bool ok = Feasible();
        if (ok) {
          found_ = Swap{removed_, added_};
          return;
        }
        if (monotone_) return;
      } else if (monotone_ && b > 0 && !Feasible()) {
        return;
      }
      // Not enough elements left to reach size a + 1.
      if (static_cast<int>(complement_.size() - from) + b < a + 1) return;
    }
    if (b >= max_b) return;
    for (std::size_t i = from; i < complement_.size() && !found_; ++i) {
      if (!Admissible(complement_[i])) continue;
      added_.push_back(complement_[i]);
      ScanAdded(i + 1);
      added_.pop_back();
    }
  }

  const P& problem_;
  IndexSet current_;
  IndexSet complement_;
  int k_;
  const std::function<bool(int, int)>* adjacent_;
  bool minimize_;
  bool monotone_;
  IndexSet removed_;
  IndexSet added_;
  std::optional<Swap> found_;
};

template <LocalSearchProblem P>
std::optional<Swap> FindSwap(const P& problem, std::span<const int> current, int k,
                             const std::function<bool(int, int)>* adjacent) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "swap budget k must be >= 1");
  SwapScanner<P> scanner(problem, current, k, adjacent);
  return scanner.Find();
}

}  // namespace internal

// First improving swap in canonical order, or nullopt if `current` is a local
// optimum for budget k.
template <LocalSearchProblem P>
std::optional<Swap> find_improving_swap(const P& problem, std::span<const int> current,
                                        int k) {
  return internal::FindSwap(problem, current, k, nullptr);
}

template <LocalSearchProblem P>
bool verify_local_optimality(const P& problem, std::span<const int> s, int k) {
  if (!problem.is_feasible(s)) return false;
  return !find_improving_swap(problem, s, k).has_value();
}

template <LocalSearchProblem P>
Solution local_search(const P& problem, const SearchConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::kInvalidInput, "swap budget k must be >= 1");
  Solution solution;
  solution.initial = initial_solution(problem);
  if (!problem.is_feasible(std::span<const int>(solution.initial))) {
    throw Error(ErrorCode::kInfeasibleStart, "initial solution is not feasible");
  }
  solution.selected = solution.initial;
  const auto* filter = cfg.adjacent ? &cfg.adjacent : nullptr;
  while (true) {
    if (cfg.max_iterations && solution.iterations >= *cfg.max_iterations) {
      solution.converged = !find_improving_swap(problem, solution.selected, cfg.k);
      break;
    }
    std::optional<Swap> swap = internal::FindSwap(problem, solution.selected, cfg.k, filter);
    if (!swap && filter != nullptr) {
      swap = find_improving_swap(problem, solution.selected, cfg.k);
    }
    if (!swap) break;
    solution.selected = ApplySwap(solution.selected, *swap);
    solution.trace.push_back(std::move(*swap));
    ++solution.iterations;
  }
  return solution;
}

// Replays `trace` from `initial`, checking that every swap is well formed,
// moves cardinality in the problem's direction, and lands on a feasible set.
// Returns the final set, or nullopt on the first violation.
template <LocalSearchProblem P>
std::optional<IndexSet> replay_trace(const P& problem, std::span<const int> initial,
                                     std::span<const Swap> trace) {
  IndexSet current(initial.begin(), initial.end());
  if (!problem.is_feasible(std::span<const int>(current))) return std::nullopt;
  const bool minimize = problem.direction() == Direction::kMinimize;
  for (const Swap& swap : trace) {
    if (!std::includes(current.begin(), current.end(), swap.removed.begin(),
                       swap.removed.end())) {
      return std::nullopt;
    }
    for (int a : swap.added) {
      if (a < 0 || a >= problem.ground_size() ||
          std::binary_search(current.begin(), current.end(), a)) {
        return std::nullopt;
      }
    }
    const bool improves = minimize ? swap.added.size() < swap.removed.size()
                                   : swap.added.size() > swap.removed.size();
    if (!improves) return std::nullopt;
    current = ApplySwap(current, swap);
    if (!problem.is_feasible(std::span<const int>(current))) return std::nullopt;
  }
  return current;
}

}  // namespace geols

#endif  // GEOLS_ENGINE_HPP_

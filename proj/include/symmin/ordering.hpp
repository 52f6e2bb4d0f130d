#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "symmin/set_function.hpp"

namespace symmin {

// A permutation (v_1, ..., v_n) of the ground set satisfying, for every
// i <= j,
//
//   f(V_{i-1} u {v_i}) + alpha * f({v_i})
//     <= f(V_{i-1} u {v_j}) + alpha * f({v_j}) + eps,
//
// where V_i = {v_1, ..., v_i} and V_0 = {}. alpha = -1, 0, 1 give the
// maximum-adjacency, minimum-capacity and minimum-degree orderings.
struct Ordering {
  std::vector<int> sequence;
  double alpha = 0.0;
  std::int64_t eval_count = 0;  // oracle calls consumed by the construction
};

namespace detail {

// Smallest element index whose key lies within the relative tie band of
// the minimum. Entries for unavailable elements are NaN.
inline int pick_min(const std::vector<double>& keys) {
  double best = std::numeric_limits<double>::infinity();
  for (double k : keys) {
    if (!std::isnan(k) && k < best) best = k;
  }
  double tol = kEps * (1.0 + std::abs(best));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!std::isnan(keys[i]) && keys[i] <= best + tol) return static_cast<int>(i);
  }
  throw std::logic_error("pick_min: no candidate");
}

}  // namespace detail

// Greedy construction: v_1 minimizes (1+alpha) f({v}); for i >= 2, v_i
// minimizes f(V_{i-1} u {u}) + alpha f({u}) over the remaining u. Ties
// (within 1e-9 relative) go to the smallest element index. Singleton
// values are cached, so the construction spends at most
// n + n(n-1)/2 oracle calls.
template <SetFunction F>
Ordering build_alpha_ordering(const F& f, double alpha) {
  const int n = f.ground().size();
  const std::int64_t start_calls = f.calls();
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> singles(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) singles[v] = f.evaluate(Subset::singleton(n, v));

  Ordering out;
  out.alpha = alpha;
  out.sequence.reserve(static_cast<std::size_t>(n));

  std::vector<double> keys(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) keys[v] = (1.0 + alpha) * singles[v];
  int first = detail::pick_min(keys);
  out.sequence.push_back(first);

  Subset prefix = Subset::singleton(n, first);
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  chosen[first] = true;

  while (static_cast<int>(out.sequence.size()) < n) {
    for (int u = 0; u < n; ++u) {
      if (chosen[u]) {
        keys[u] = kNaN;
        continue;
      }
      Subset augmented = prefix;
      augmented.set(u);
      keys[u] = f.evaluate(augmented) + alpha * singles[u];
    }
    int next = detail::pick_min(keys);
    out.sequence.push_back(next);
    chosen[next] = true;
    prefix.set(next);
  }

  out.eval_count = f.calls() - start_calls;
  return out;
}

template <SetFunction F>
Ordering build_ma(const F& f) { return build_alpha_ordering(f, -1.0); }

template <SetFunction F>
Ordering build_mc(const F& f) { return build_alpha_ordering(f, 0.0); }

template <SetFunction F>
Ordering build_md(const F& f) { return build_alpha_ordering(f, 1.0); }

// The pair (v_{n-1}, v_n) every ordering theorem is about.
inline std::pair<int, int> last_pair(const Ordering& ordering) {
  if (ordering.sequence.size() < 2) {
    throw std::invalid_argument("last_pair: ordering has fewer than two elements");
  }
  return {ordering.sequence[ordering.sequence.size() - 2], ordering.sequence.back()};
}

}  // namespace symmin

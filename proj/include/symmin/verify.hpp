#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symmin/ordering.hpp"
#include "symmin/set_function.hpp"

// Exhaustive desk-scale verifiers. Everything here enumerates subsets
// outright, so each operation guards its ground-set size; the point is
// an independent ground truth, not speed.

namespace symmin {

enum class PairProperty { contractible, pendent, flat };

inline const char* to_string(PairProperty p) {
  switch (p) {
    case PairProperty::contractible: return "contractible";
    case PairProperty::pendent: return "pendent";
    case PairProperty::flat: return "flat";
  }
  return "?";
}

// Outcome of checking one pair property by enumerating every subset X
// with |X n {u,v}| = 1. margin is the minimum slack f(X) - bound(X)
// over all such X; the witness is the first violating X in mask order.
struct PairReport {
  std::pair<int, int> pair;
  PairProperty property = PairProperty::contractible;
  bool holds = true;
  std::optional<Subset> witness;
  double margin = std::numeric_limits<double>::infinity();
};

enum class ViolationKind {
  symmetry,
  submodularity,
  ordering_condition,
  mc_cut_inequality,     // f(X) + f(V\X) >= min_{x in X} f({x}) + f(V_{n-1})
  alpha_cut_inequality,  // 2 f(X) >= min_{x in X} (1+a) f({x}) + (1-a) f({v_n})
};

// A failed inequality: lhs < rhs - eps, with the subsets instantiating it.
struct Violation {
  ViolationKind kind;
  std::vector<Subset> sets;
  double lhs = 0.0;
  double rhs = 0.0;
};

namespace detail {

inline void require_max_ground(const GroundSet& ground, int max_n, const char* what) {
  if (ground.size() > max_n) {
    throw std::invalid_argument(std::string(what) + ": ground set exceeds the exhaustive bound of " +
                                std::to_string(max_n) + " elements");
  }
}

template <SetFunction F>
std::vector<double> singleton_values(const F& f) {
  int n = f.ground().size();
  std::vector<double> singles(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) singles[v] = f.evaluate(Subset::singleton(n, v));
  return singles;
}

inline void require_permutation(const GroundSet& ground, const std::vector<int>& sequence,
                                const char* what) {
  int n = ground.size();
  if (static_cast<int>(sequence.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": ordering length does not match ground set");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sequence) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(std::string(what) + ": sequence is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace detail

// Exact minimum of f over all proper nonempty subsets, by enumeration.
// Ties go to the smallest bit mask.
template <SetFunction F>
std::pair<Subset, double> brute_force_min(const F& f) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 20, "brute_force_min");
  if (n < 2) throw std::invalid_argument("brute_force_min: ground set has fewer than two elements");

  Subset best(n);
  double best_value = std::numeric_limits<double>::infinity();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    Subset x = Subset::from_mask(n, mask);
    double value = f.evaluate(x);
    if (value < best_value) {
      best_value = value;
      best = x;
    }
  }
  return {best, best_value};
}

// Checks one of the pair properties for the ordered pair (u, v):
//   contractible:  f(X) >= min_{x in V} f({x})
//   pendent:       f(X) >= f({v})          (second element of the pair)
//   flat:          f(X) >= min_{x in X} f({x})
// over every X with exactly one of u, v.
template <SetFunction F>
PairReport check_pair(const F& f, int u, int v, PairProperty property) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 20, "check_pair");
  if (u == v) throw std::invalid_argument("check_pair: pair elements must be distinct");
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("check_pair: pair element out of range");
  }

  std::vector<double> singles = detail::singleton_values(f);
  double global_min = *std::min_element(singles.begin(), singles.end());

  PairReport report;
  report.pair = {u, v};
  report.property = property;

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    bool has_u = (mask >> u) & 1;
    bool has_v = (mask >> v) & 1;
    if (has_u == has_v) continue;
    Subset x = Subset::from_mask(n, mask);

    double bound;
    switch (property) {
      case PairProperty::contractible:
        bound = global_min;
        break;
      case PairProperty::pendent:
        bound = singles[static_cast<std::size_t>(v)];
        break;
      case PairProperty::flat: {
        bound = std::numeric_limits<double>::infinity();
        x.for_each([&](int e) { bound = std::min(bound, singles[static_cast<std::size_t>(e)]); });
        break;
      }
    }

    double slack = f.evaluate(x) - bound;
    if (slack < report.margin) report.margin = slack;
    if (slack < -kEps && !report.witness.has_value()) report.witness = x;
  }

  report.holds = report.margin >= -kEps;
  return report;
}

// First subset (mask order, including {} and V) where f(X) != f(V\X).
template <SetFunction F>
std::optional<Violation> check_symmetric(const F& f) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 20, "check_symmetric");

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset x = Subset::from_mask(n, mask);
    Subset comp = x.complement();
    double fx = f.evaluate(x);
    double fc = f.evaluate(comp);
    if (std::abs(fx - fc) > kEps) {
      if (fx < fc) return Violation{ViolationKind::symmetry, {x, comp}, fx, fc};
      return Violation{ViolationKind::symmetry, {comp, x}, fc, fx};
    }
  }
  return std::nullopt;
}

// Local submodularity: f(X u {a}) + f(X u {b}) >= f(X u {a,b}) + f(X)
// for all X and distinct a, b outside X. Equivalent to the lattice
// inequality and much cheaper to enumerate.
template <SetFunction F>
std::optional<Violation> check_submodular(const F& f) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 14, "check_submodular");

  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<double> table(static_cast<std::size_t>(limit));
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    table[mask] = f.evaluate(Subset::from_mask(n, mask));
  }

  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (int a = 0; a < n; ++a) {
      if ((mask >> a) & 1) continue;
      for (int b = a + 1; b < n; ++b) {
        if ((mask >> b) & 1) continue;
        std::uint64_t with_a = mask | (std::uint64_t{1} << a);
        std::uint64_t with_b = mask | (std::uint64_t{1} << b);
        std::uint64_t with_ab = with_a | (std::uint64_t{1} << b);
        double lhs = table[with_a] + table[with_b];
        double rhs = table[with_ab] + table[mask];
        if (lhs < rhs - kEps) {
          return Violation{ViolationKind::submodularity,
                           {Subset::from_mask(n, with_a), Subset::from_mask(n, with_b),
                            Subset::from_mask(n, with_ab), Subset::from_mask(n, mask)},
                           lhs,
                           rhs};
        }
      }
    }
  }
  return std::nullopt;
}

// Re-evaluates the full pairwise ordering condition, not just the
// consecutive greedy choices. sets[0] holds the smaller-key side.
template <SetFunction F>
std::optional<Violation> check_ordering_condition(const F& f, const Ordering& ordering,
                                                  double alpha) {
  const int n = f.ground().size();
  detail::require_permutation(f.ground(), ordering.sequence, "check_ordering_condition");

  std::vector<double> singles = detail::singleton_values(f);
  Subset prefix(n);
  for (int i = 0; i < n; ++i) {
    int vi = ordering.sequence[static_cast<std::size_t>(i)];
    Subset chosen = prefix;
    chosen.set(vi);
    double key_i = f.evaluate(chosen) + alpha * singles[static_cast<std::size_t>(vi)];
    for (int j = i + 1; j < n; ++j) {
      int vj = ordering.sequence[static_cast<std::size_t>(j)];
      Subset other = prefix;
      other.set(vj);
      double key_j = f.evaluate(other) + alpha * singles[static_cast<std::size_t>(vj)];
      if (key_i > key_j + kEps) {
        return Violation{ViolationKind::ordering_condition, {other, chosen}, key_j, key_i};
      }
    }
    prefix.set(vi);
  }
  return std::nullopt;
}

// For an MC-ordering of a submodular (not necessarily symmetric) f,
// every X with exactly one of {v_{n-1}, v_n} satisfies
//   f(X) + f(V\X) >= min_{x in X} f({x}) + f(V_{n-1}).
// sets on violation: {X, V\X, {x*}, V_{n-1}}.
template <SetFunction F>
std::optional<Violation> check_mc_cut_inequality(const F& f, const Ordering& ordering) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 16, "check_mc_cut_inequality");
  detail::require_permutation(f.ground(), ordering.sequence, "check_mc_cut_inequality");
  if (n < 2) throw std::invalid_argument("check_mc_cut_inequality: need at least two elements");

  std::vector<double> singles = detail::singleton_values(f);
  Subset head = Subset::full(n);
  head.reset(ordering.sequence.back());
  const double head_value = f.evaluate(head);
  const int u = ordering.sequence[static_cast<std::size_t>(n - 2)];
  const int v = ordering.sequence.back();

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    if (((mask >> u) & 1) == ((mask >> v) & 1)) continue;
    Subset x = Subset::from_mask(n, mask);

    int arg_min = -1;
    double min_single = std::numeric_limits<double>::infinity();
    x.for_each([&](int e) {
      if (singles[static_cast<std::size_t>(e)] < min_single) {
        min_single = singles[static_cast<std::size_t>(e)];
        arg_min = e;
      }
    });

    double lhs = f.evaluate(x) + f.evaluate(x.complement());
    double rhs = min_single + head_value;
    if (lhs < rhs - kEps) {
      return Violation{ViolationKind::mc_cut_inequality,
                       {x, x.complement(), Subset::singleton(n, arg_min), head},
                       lhs,
                       rhs};
    }
  }
  return std::nullopt;
}

// For an alpha-ordering of a symmetric submodular f, every X with
// exactly one of {v_{n-1}, v_n} satisfies
//   2 f(X) >= min_{x in X} (1 + alpha) f({x}) + (1 - alpha) f({v_n}).
// sets on violation: {X, {x*}, {v_n}}.
template <SetFunction F>
std::optional<Violation> check_alpha_cut_inequality(const F& f, const Ordering& ordering,
                                                    double alpha) {
  const int n = f.ground().size();
  detail::require_max_ground(f.ground(), 16, "check_alpha_cut_inequality");
  detail::require_permutation(f.ground(), ordering.sequence, "check_alpha_cut_inequality");
  if (n < 2) throw std::invalid_argument("check_alpha_cut_inequality: need at least two elements");

  std::vector<double> singles = detail::singleton_values(f);
  const int u = ordering.sequence[static_cast<std::size_t>(n - 2)];
  const int v = ordering.sequence.back();
  const double last_term = (1.0 - alpha) * singles[static_cast<std::size_t>(v)];

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    if (((mask >> u) & 1) == ((mask >> v) & 1)) continue;
    Subset x = Subset::from_mask(n, mask);

    int arg_min = -1;
    double min_scaled = std::numeric_limits<double>::infinity();
    x.for_each([&](int e) {
      double scaled = (1.0 + alpha) * singles[static_cast<std::size_t>(e)];
      if (scaled < min_scaled) {
        min_scaled = scaled;
        arg_min = e;
      }
    });

    double lhs = 2.0 * f.evaluate(x);
    double rhs = min_scaled + last_term;
    if (lhs < rhs - kEps) {
      return Violation{ViolationKind::alpha_cut_inequality,
                       {x, Subset::singleton(n, arg_min), Subset::singleton(n, v)},
                       lhs,
                       rhs};
    }
  }
  return std::nullopt;
}

}  // namespace symmin

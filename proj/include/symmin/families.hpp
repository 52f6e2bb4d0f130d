#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "symmin/set_function.hpp"

namespace symmin {

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

// Cut capacity of a weighted undirected graph: the total weight of
// edges with exactly one endpoint inside X. Symmetric and submodular.
class GraphCutFunction {
 public:
  GraphCutFunction(GroundSet ground, std::vector<WeightedEdge> edges)
      : ground_(std::move(ground)), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.u < 0 || e.u >= ground_.size() || e.v < 0 || e.v >= ground_.size()) {
        throw std::invalid_argument("GraphCutFunction: edge endpoint out of range");
      }
      if (e.u == e.v) throw std::invalid_argument("GraphCutFunction: self-loop");
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
        throw std::invalid_argument("GraphCutFunction: edge weight must be finite and nonnegative");
      }
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  double evaluate(const Subset& x) const {
    detail::require_compatible(ground_, x);
    counter_.bump();
    double total = 0.0;
    for (const auto& e : edges_) {
      if (x.test(e.u) != x.test(e.v)) total += e.weight;
    }
    return total;
  }

  std::int64_t calls() const { return counter_.value(); }
  void reset_calls() const { counter_.reset(); }

 private:
  GroundSet ground_;
  std::vector<WeightedEdge> edges_;
  CallCounter counter_;
};

struct CoverageItem {
  double weight;
  Subset covered_by;
};

// Weighted coverage: item j contributes weight_j whenever X intersects
// covered_by_j. Monotone and submodular, generally not symmetric.
class CoverageFunction {
 public:
  CoverageFunction(GroundSet ground, std::vector<CoverageItem> items)
      : ground_(std::move(ground)), items_(std::move(items)) {
    for (const auto& item : items_) {
      if (!(item.weight >= 0.0) || !std::isfinite(item.weight)) {
        throw std::invalid_argument("CoverageFunction: item weight must be finite and nonnegative");
      }
      if (item.covered_by.universe_size() != ground_.size()) {
        throw std::invalid_argument("CoverageFunction: covered_by universe mismatch");
      }
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<CoverageItem>& items() const { return items_; }

  double evaluate(const Subset& x) const {
    detail::require_compatible(ground_, x);
    counter_.bump();
    double total = 0.0;
    for (const auto& item : items_) {
      if (item.covered_by.intersects(x)) total += item.weight;
    }
    return total;
  }

  std::int64_t calls() const { return counter_.value(); }
  void reset_calls() const { counter_.reset(); }

 private:
  GroundSet ground_;
  std::vector<CoverageItem> items_;
  CallCounter counter_;
};

// f(X) = h(|X|). Symmetric iff h(k) = h(n-k); submodular iff the
// increments h(k+1) - h(k) are nonincreasing. By default the
// constructor insists on both.
class ConcaveCardinalityFunction {
 public:
  ConcaveCardinalityFunction(GroundSet ground, std::vector<double> h,
                             bool require_symmetric_submodular = true)
      : ground_(std::move(ground)), h_(std::move(h)) {
    int n = ground_.size();
    if (static_cast<int>(h_.size()) != n + 1) {
      throw std::invalid_argument("ConcaveCardinalityFunction: h must have n+1 values");
    }
    if (require_symmetric_submodular) {
      for (int k = 0; k <= n; ++k) {
        if (std::abs(h_[k] - h_[n - k]) > kEps) {
          throw std::invalid_argument("ConcaveCardinalityFunction: h is not symmetric");
        }
      }
      for (int k = 1; k + 1 <= n; ++k) {
        if (h_[k + 1] - h_[k] > h_[k] - h_[k - 1] + kEps) {
          throw std::invalid_argument("ConcaveCardinalityFunction: h is not concave");
        }
      }
    }
  }

  const GroundSet& ground() const { return ground_; }

  double evaluate(const Subset& x) const {
    detail::require_compatible(ground_, x);
    counter_.bump();
    return h_[static_cast<std::size_t>(x.count())];
  }

  std::int64_t calls() const { return counter_.value(); }
  void reset_calls() const { counter_.reset(); }

 private:
  GroundSet ground_;
  std::vector<double> h_;
  CallCounter counter_;
};

// Explicit oracle: one stored value per subset, indexed by bit mask.
// Capped at n <= 20 (2^20 doubles = 8 MB).
class DenseTableFunction {
 public:
  static constexpr int kMaxGroundSize = 20;

  DenseTableFunction(GroundSet ground, std::vector<double> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (ground_.size() > kMaxGroundSize) {
      throw std::invalid_argument("DenseTableFunction: ground set exceeds 20 elements");
    }
    if (values_.size() != (std::size_t{1} << ground_.size())) {
      throw std::invalid_argument("DenseTableFunction: value table must have 2^n entries");
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<double>& values() const { return values_; }

  double evaluate(const Subset& x) const {
    detail::require_compatible(ground_, x);
    counter_.bump();
    return values_[x.to_mask()];
  }

  std::int64_t calls() const { return counter_.value(); }
  void reset_calls() const { counter_.reset(); }

 private:
  GroundSet ground_;
  std::vector<double> values_;
  CallCounter counter_;
};

static_assert(SetFunction<GraphCutFunction>);
static_assert(SetFunction<CoverageFunction>);
static_assert(SetFunction<ConcaveCardinalityFunction>);
static_assert(SetFunction<DenseTableFunction>);
static_assert(SetFunction<ShiftedFunction<GraphCutFunction>>);

}  // namespace symmin

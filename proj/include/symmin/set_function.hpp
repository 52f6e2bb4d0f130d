#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>

#include "symmin/ground_set.hpp"

namespace symmin {

// Monotone evaluation counter. Incrementing is safe from concurrent
// readers; copying snapshots the current value.
class CallCounter {
 public:
  CallCounter() = default;
  CallCounter(const CallCounter& other) : n_(other.value()) {}
  CallCounter& operator=(const CallCounter& other) {
    n_.store(other.value(), std::memory_order_relaxed);
    return *this;
  }

  void bump() const { n_.fetch_add(1, std::memory_order_relaxed); }
  std::int64_t value() const { return n_.load(std::memory_order_relaxed); }
  void reset() const { n_.store(0, std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::int64_t> n_{0};
};

// Evaluation-oracle contract: a ground set, a deterministic evaluate()
// that bumps the call counter by exactly one, and counter access.
template <typename F>
concept SetFunction = requires(const F& f, const Subset& x) {
  { f.ground() } -> std::convertible_to<const GroundSet&>;
  { f.evaluate(x) } -> std::convertible_to<double>;
  { f.calls() } -> std::convertible_to<std::int64_t>;
  f.reset_calls();
};

namespace detail {

inline void require_compatible(const GroundSet& ground, const Subset& x) {
  if (x.universe_size() != ground.size()) {
    throw std::invalid_argument("set function: subset universe does not match the ground set");
  }
}

}  // namespace detail

// g(S) = f(S) + alpha * sum_{v in S} f({v}). The singleton values are
// cached at construction (n base calls), so each evaluate() afterwards
// costs exactly one base-oracle call. Holds a reference to the base
// oracle; the base must outlive the shifted view.
template <SetFunction F>
class ShiftedFunction {
 public:
  ShiftedFunction(const F& base, double alpha) : base_(&base), alpha_(alpha) {
    int n = base.ground().size();
    singletons_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      singletons_.push_back(base.evaluate(Subset::singleton(n, v)));
    }
  }

  const GroundSet& ground() const { return base_->ground(); }
  double alpha() const { return alpha_; }
  const std::vector<double>& singleton_values() const { return singletons_; }

  double evaluate(const Subset& x) const {
    detail::require_compatible(ground(), x);
    double shift = 0.0;
    x.for_each([&](int v) { shift += singletons_[static_cast<std::size_t>(v)]; });
    return base_->evaluate(x) + alpha_ * shift;
  }

  std::int64_t calls() const { return base_->calls(); }
  void reset_calls() const { base_->reset_calls(); }

 private:
  const F* base_;
  double alpha_;
  std::vector<double> singletons_;
};

template <SetFunction F>
ShiftedFunction<F> shifted(const F& base, double alpha) {
  return ShiftedFunction<F>(base, alpha);
}

}  // namespace symmin

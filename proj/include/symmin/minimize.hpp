#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symmin/contraction.hpp"
#include "symmin/ordering.hpp"

namespace symmin {

// A nontrivial minimizer of a symmetric submodular function, expressed
// over the original ground set.
struct MinimizerResult {
  Subset subset;
  double value = 0.0;
  std::int64_t oracle_calls = 0;
  double alpha_used = 0.0;
  ContractionTrace contraction_log;
};

// Ordering-based contraction: while more than two elements remain,
// build an alpha-ordering, record the last pair's singleton blocks as
// candidates, and contract the pair. For alpha in [-1, 1] the last pair
// is always contractible, so the best candidate is a nontrivial
// minimizer. Ties between equal-value candidates go to the
// lexicographically smallest bit mask. The input must be symmetric
// submodular (not checked here); total cost is O(n^3) oracle calls.
template <SetFunction F>
MinimizerResult opt_set(const F& f, double alpha = 0.0) {
  const int n = f.ground().size();
  if (n < 2) throw std::invalid_argument("opt_set: ground set has fewer than two elements");
  if (alpha < -1.0 || alpha > 1.0) {
    throw std::domain_error(
        "opt_set: alpha must lie in [-1, 1]; outside that range the ordering's last pair "
        "need not be contractible and contraction can discard every nontrivial minimizer");
  }

  const std::int64_t start_calls = f.calls();
  ContractedFunction<F> current(f);

  struct Candidate {
    Subset subset;
    double value;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(2 * static_cast<std::size_t>(n));

  auto record = [&](int element) {
    int m = current.ground().size();
    double value = current.evaluate(Subset::singleton(m, element));
    candidates.push_back({current.trace().block(element), value});
  };

  while (current.ground().size() > 2) {
    Ordering ordering = build_alpha_ordering(current, alpha);
    auto [u, v] = last_pair(ordering);
    record(u);
    record(v);
    current.merge(u, v);
  }
  record(0);
  record(1);

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].value < candidates[best].value ||
        (candidates[i].value == candidates[best].value &&
         candidates[i].subset < candidates[best].subset)) {
      best = i;
    }
  }

  return MinimizerResult{candidates[best].subset, candidates[best].value,
                         f.calls() - start_calls, alpha, current.trace()};
}

}  // namespace symmin

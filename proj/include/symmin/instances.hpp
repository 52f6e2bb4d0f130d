#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symmin/families.hpp"
#include "symmin/verify.hpp"

namespace symmin {

struct LabeledEdge {
  std::string u;
  std::string v;
  double weight;
};

// Builds a cut function from labelled edges. Parallel edges merge
// additively; self-loops, negative weights and unknown labels are
// rejected.
inline GraphCutFunction graph_from_edges(const std::vector<std::string>& labels,
                                         const std::vector<LabeledEdge>& edges) {
  GroundSet ground(labels);
  std::map<std::pair<int, int>, double> merged;
  for (const auto& e : edges) {
    int u = ground.index_of(e.u);
    int v = ground.index_of(e.v);
    if (u == v) throw std::invalid_argument("graph_from_edges: self-loop at '" + e.u + "'");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("graph_from_edges: weight must be finite and nonnegative");
    }
    merged[std::minmax(u, v)] += e.weight;
  }
  std::vector<WeightedEdge> list;
  list.reserve(merged.size());
  for (const auto& [pair, w] : merged) list.push_back({pair.first, pair.second, w});
  return GraphCutFunction(std::move(ground), std::move(list));
}

namespace detail {

inline double direct_edge_sum(const GraphCutFunction& g, const Subset& w, int y,
                              bool towards_w) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    int other;
    if (e.u == y) other = e.v;
    else if (e.v == y) other = e.u;
    else continue;
    if (w.test(other) == towards_w) total += e.weight;
  }
  return total;
}

inline void check_kappa_formula(double direct, double via_kappa, const char* what) {
  if (std::abs(direct - via_kappa) > kEps) {
    throw std::logic_error(std::string(what) + ": edge sum and cut formula disagree");
  }
}

}  // namespace detail

// adj(W, y): total weight of edges between y and W. Also evaluates the
// equivalent cut expression (k({y}) + k(W) - k(W u {y})) / 2 and
// insists the two agree.
inline double adjacency(const GraphCutFunction& g, const Subset& w, int y) {
  detail::require_compatible(g.ground(), w);
  if (y < 0 || y >= g.ground().size()) throw std::out_of_range("adjacency: element out of range");
  if (w.test(y)) throw std::invalid_argument("adjacency: y must lie outside W");

  double direct = detail::direct_edge_sum(g, w, y, true);
  Subset with_y = w;
  with_y.set(y);
  double via_kappa =
      0.5 * (g.evaluate(Subset::singleton(w.universe_size(), y)) + g.evaluate(w) - g.evaluate(with_y));
  detail::check_kappa_formula(direct, via_kappa, "adjacency");
  return direct;
}

// deg_W(y): degree of y in the graph with W removed. Cut expression:
// (k({y}) - k(W) + k(W u {y})) / 2.
inline double residual_degree(const GraphCutFunction& g, const Subset& w, int y) {
  detail::require_compatible(g.ground(), w);
  if (y < 0 || y >= g.ground().size()) {
    throw std::out_of_range("residual_degree: element out of range");
  }
  if (w.test(y)) throw std::invalid_argument("residual_degree: y must lie outside W");

  double direct = detail::direct_edge_sum(g, w, y, false);
  Subset with_y = w;
  with_y.set(y);
  double via_kappa =
      0.5 * (g.evaluate(Subset::singleton(w.universe_size(), y)) - g.evaluate(w) + g.evaluate(with_y));
  detail::check_kappa_formula(direct, via_kappa, "residual_degree");
  return direct;
}

// A graph whose alpha-ordering provably ends in a pair that fails the
// named property, together with the witness subset certifying it.
struct CounterexampleInstance {
  GraphCutFunction graph;
  double alpha;
  std::pair<int, int> expected_last_pair;  // unordered
  PairProperty violated_property;
  Subset witness;
  std::optional<double> kappa;
};

namespace detail {

// V = {p1..p4}, edges p1p4 = p2p3 = 1, p3p4 = kappa. For kappa < 1 the
// ordering ends in {p3, p4} and X = {p1, p4} cuts below every
// singleton; for any kappa > 0 it cuts below f({p3}) = f({p4}).
inline CounterexampleInstance quad_instance(double alpha, double kappa,
                                            PairProperty property) {
  GraphCutFunction graph = graph_from_edges(
      numbered_labels("p", 4),
      {{"p1", "p4", 1.0}, {"p2", "p3", 1.0}, {"p3", "p4", kappa}});
  return CounterexampleInstance{std::move(graph), alpha,           {2, 3},
                                property,         Subset::of(4, {0, 3}), kappa};
}

// V = {p1..p5}, edges p1p3 = p3p5 = 1, p1p5 = 2, p1p2 = w12,
// p3p4 = w34. The ordering ends in {p4, p5}; X = {p3, p4} has cut 2,
// below the singleton minimum f({p5}) = 3.
inline CounterexampleInstance star_instance(double alpha, double w12, double w34,
                                            PairProperty property,
                                            std::optional<double> kappa) {
  GraphCutFunction graph = graph_from_edges(
      numbered_labels("p", 5),
      {{"p1", "p3", 1.0}, {"p3", "p5", 1.0}, {"p1", "p5", 2.0},
       {"p1", "p2", w12}, {"p3", "p4", w34}});
  return CounterexampleInstance{std::move(graph), alpha,           {3, 4},
                                property,         Subset::of(5, {2, 3}), kappa};
}

}  // namespace detail

// Counterexample for alpha outside [-1, 1]: the alpha-ordering's last
// pair is not contractible. Inside [-1, 1] no such instance exists.
inline CounterexampleInstance counterexample_contractible(double alpha) {
  if (alpha >= -1.0 && alpha <= 1.0) {
    throw std::domain_error(
        "counterexample_contractible: for alpha in [-1, 1] the last pair of an "
        "alpha-ordering is always contractible");
  }
  if (alpha > 1.0) {
    return detail::quad_instance(alpha, 2.0 / (1.0 + alpha), PairProperty::contractible);
  }
  if (alpha > -2.0) {  // -2 < alpha < -1
    double kappa = 1.0 + 2.0 / (-1.0 - alpha);
    return detail::star_instance(alpha, kappa, kappa, PairProperty::contractible, kappa);
  }
  // alpha <= -2: fixed weights; the selection inequalities hold there too.
  return detail::star_instance(alpha, 7.0, 4.0, PairProperty::contractible, std::nullopt);
}

// Counterexample for alpha != -1: the last pair need not be pendent.
inline CounterexampleInstance counterexample_pendent(double alpha) {
  if (alpha == -1.0) {
    throw std::domain_error(
        "counterexample_pendent: a maximum-adjacency ordering (alpha = -1) always ends "
        "in a pendent pair");
  }
  if (alpha > -1.0 && alpha <= 1.0) {
    return detail::quad_instance(alpha, 2.0 / (1.0 + alpha), PairProperty::pendent);
  }
  CounterexampleInstance out = counterexample_contractible(alpha);
  out.violated_property = PairProperty::pendent;  // the witness violates this bound too
  return out;
}

// Counterexample for alpha != 1: the last pair need not be flat.
// For alpha in [-1, 1) uses the path p1-p2-p3-p4-p5 with weights
// 1, 1, kappa, 1 where kappa = min(2, 2/(1+alpha)) (and 2 at alpha=-1).
inline CounterexampleInstance counterexample_flat(double alpha) {
  if (alpha == 1.0) {
    throw std::domain_error(
        "counterexample_flat: a minimum-degree ordering (alpha = 1) always ends in a "
        "flat pair");
  }
  if (alpha >= -1.0 && alpha < 1.0) {
    double kappa = alpha == -1.0 ? 2.0 : std::min(2.0, 2.0 / (1.0 + alpha));
    GraphCutFunction graph = graph_from_edges(
        numbered_labels("p", 5),
        {{"p1", "p2", 1.0}, {"p2", "p3", 1.0}, {"p3", "p4", kappa}, {"p4", "p5", 1.0}});
    return CounterexampleInstance{std::move(graph), alpha,           {3, 4},
                                  PairProperty::flat, Subset::of(5, {2, 3}), kappa};
  }
  CounterexampleInstance out = counterexample_contractible(alpha);
  out.violated_property = PairProperty::flat;
  return out;
}

// Connected random graph: a random spanning tree plus each remaining
// pair with probability edge_prob, integer weights in [1, max_weight].
inline GraphCutFunction random_graph(int n, double edge_prob, int max_weight,
                                     std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_graph: need at least two vertices");
  if (max_weight < 1) throw std::invalid_argument("random_graph: max_weight must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::map<std::pair<int, int>, double> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    int u = parent(rng);
    edges[std::minmax(u, v)] += weight(rng);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < edge_prob) edges[std::minmax(u, v)] += weight(rng);
    }
  }

  std::vector<WeightedEdge> list;
  list.reserve(edges.size());
  for (const auto& [pair, w] : edges) list.push_back({pair.first, pair.second, w});
  return GraphCutFunction(GroundSet(numbered_labels("p", n)), std::move(list));
}

inline GraphCutFunction cycle_graph(int n) {
  if (n < 2) throw std::invalid_argument("cycle_graph: need at least two vertices");
  std::map<std::pair<int, int>, double> edges;
  for (int v = 0; v < n; ++v) edges[std::minmax(v, (v + 1) % n)] += 1.0;
  std::vector<WeightedEdge> list;
  for (const auto& [pair, w] : edges) list.push_back({pair.first, pair.second, w});
  return GraphCutFunction(GroundSet(numbered_labels("p", n)), std::move(list));
}

// Random coverage instance: `items` items with integer weights in
// [1, 10] and uniformly random coverage sets (possibly empty).
inline CoverageFunction random_coverage(int n, int items, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_coverage: need at least two elements");
  if (items < 0) throw std::invalid_argument("random_coverage: negative item count");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 10);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<CoverageItem> list;
  list.reserve(static_cast<std::size_t>(items));
  for (int j = 0; j < items; ++j) {
    Subset covered(n);
    for (int v = 0; v < n; ++v) {
      if (coin(rng) < 0.5) covered.set(v);
    }
    list.push_back({static_cast<double>(weight(rng)), covered});
  }
  return CoverageFunction(GroundSet(numbered_labels("e", n, 0)), std::move(list));
}

}  // namespace symmin

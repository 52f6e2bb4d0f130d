#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symmin/symmin.hpp"

namespace testutil {

// Unit-weight path p1-p2-...-pn.
inline symmin::GraphCutFunction path_graph(int n) {
  std::vector<symmin::LabeledEdge> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({"p" + std::to_string(i), "p" + std::to_string(i + 1), 1.0});
  }
  return symmin::graph_from_edges(symmin::numbered_labels("p", n), edges);
}

inline symmin::DenseTableFunction make_table(int n,
                                             const std::function<double(std::uint64_t)>& fn) {
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) values[mask] = fn(mask);
  return symmin::DenseTableFunction(symmin::GroundSet(symmin::numbered_labels("e", n, 0)),
                                    std::move(values));
}

inline bool same_unordered_pair(std::pair<int, int> a, std::pair<int, int> b) {
  return std::minmax(a.first, a.second) == std::minmax(b.first, b.second);
}

// The frozen negative-control graph: a foreign ordering of it violates
// the MC cut inequality while its own MC-ordering does not.
inline symmin::GraphCutFunction negative_control_graph() {
  return symmin::GraphCutFunction(
      symmin::GroundSet(symmin::numbered_labels("p", 4)),
      {{0, 1, 8.0}, {0, 2, 7.0}, {1, 2, 8.0}, {1, 3, 4.0}});
}

}  // namespace testutil

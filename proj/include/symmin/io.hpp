#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symmin/families.hpp"
#include "symmin/instances.hpp"
#include "symmin/minimize.hpp"

namespace symmin {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

inline double parse_weight(const std::string& token, int line_number) {
  std::size_t consumed = 0;
  double value;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(line_number, "malformed weight '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(line_number, "malformed weight '" + token + "'");
  }
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ParseError(line_number, "weight must be finite and nonnegative, got '" + token + "'");
  }
  return value;
}

}  // namespace detail

// Edge-list format: one "u v w" line per edge (labels without
// whitespace, nonnegative decimal weight), '#' lines ignored, vertex
// order = first appearance, duplicate pairs merged additively.
inline GraphCutFunction load_graph(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<LabeledEdge> edges;
  std::unordered_map<std::string, bool> seen;

  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_blank_or_comment(line)) continue;

    std::istringstream fields(line);
    std::string u, v, w, extra;
    if (!(fields >> u >> v >> w)) {
      throw ParseError(line_number, "expected 'u v w'");
    }
    if (fields >> extra) {
      throw ParseError(line_number, "trailing content '" + extra + "'");
    }
    if (u == v) throw ParseError(line_number, "self-loop at '" + u + "'");

    double weight = detail::parse_weight(w, line_number);
    for (const auto& label : {u, v}) {
      if (!seen.count(label)) {
        seen.emplace(label, true);
        labels.push_back(label);
      }
    }
    edges.push_back({u, v, weight});
  }
  if (labels.empty()) throw ParseError(line_number, "no edges found");
  return graph_from_edges(labels, edges);
}

// Dense table format: line 1 holds n (1..20), the rest of the file
// holds 2^n whitespace-separated values; value i belongs to the subset
// whose mask is i over elements e0..e{n-1}.
inline DenseTableFunction load_table(std::istream& in) {
  std::string line;
  int line_number = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string extra;
    if (!(fields >> n) || (fields >> extra)) {
      throw ParseError(line_number, "expected the ground-set size alone on the first line");
    }
    break;
  }
  if (n < 1 || n > DenseTableFunction::kMaxGroundSize) {
    throw ParseError(line_number == 0 ? 1 : line_number,
                     "ground-set size must lie in 1..20, got " + std::to_string(n));
  }

  const std::size_t expected = std::size_t{1} << n;
  std::vector<double> values;
  values.reserve(expected);
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      if (values.size() == expected) {
        throw ParseError(line_number, "more than 2^n values");
      }
      std::size_t consumed = 0;
      double value;
      try {
        value = std::stod(token, &consumed);
      } catch (const std::exception&) {
        throw ParseError(line_number, "malformed value '" + token + "'");
      }
      if (consumed != token.size()) {
        throw ParseError(line_number, "malformed value '" + token + "'");
      }
      values.push_back(value);
    }
  }
  if (values.size() != expected) {
    throw ParseError(line_number, "expected " + std::to_string(expected) + " values, got " +
                                      std::to_string(values.size()));
  }
  return DenseTableFunction(GroundSet(numbered_labels("e", n, 0)), std::move(values));
}

inline GraphCutFunction load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_graph(in);
}

inline DenseTableFunction load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_table(in);
}

// JSON report for a minimization run; parsing it back and re-evaluating
// the subset must reproduce "value".
inline nlohmann::json minimize_report(const MinimizerResult& result, const GroundSet& ground) {
  nlohmann::json subset = nlohmann::json::array();
  result.subset.for_each([&](int i) { subset.push_back(ground.label(i)); });
  return nlohmann::json{{"subset", std::move(subset)},
                        {"value", result.value},
                        {"oracle_calls", result.oracle_calls},
                        {"alpha", result.alpha_used}};
}

}  // namespace symmin

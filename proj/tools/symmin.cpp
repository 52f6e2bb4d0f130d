// Command-line front end: minimize symmetric submodular functions given
// as .graph / .table files, inspect orderings, run exhaustive property
// checks, reproduce the boundary counterexamples, and benchmark
// oracle-call scaling.
//
// Exit codes: 0 success, 1 property violation / failed reproduction,
// 2 input error, 3 domain error (alpha range, protected endpoints).

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmin/symmin.hpp"

namespace {

using nlohmann::json;
using namespace symmin;

using LoadedFunction = std::variant<GraphCutFunction, DenseTableFunction>;

LoadedFunction load_input(const std::string& path, std::string format) {
  if (format.empty()) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "graph") format = "graph";
    else if (ext == "table") format = "table";
    else throw std::runtime_error("cannot infer input format from '" + path + "'; pass --format");
  }
  if (format == "graph") return load_graph_file(path);
  if (format == "table") return load_table_file(path);
  throw std::runtime_error("unknown format '" + format + "'");
}

std::string set_to_string(const GroundSet& ground, const Subset& x) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](int i) {
    if (!first) out += ",";
    out += ground.label(i);
    first = false;
  });
  return out + "}";
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::symmetry: return "symmetry";
    case ViolationKind::submodularity: return "submodularity";
    case ViolationKind::ordering_condition: return "ordering-condition";
    case ViolationKind::mc_cut_inequality: return "mc-cut-inequality";
    case ViolationKind::alpha_cut_inequality: return "alpha-cut-inequality";
  }
  return "?";
}

void print_violation(const GroundSet& ground, const Violation& v) {
  std::cout << "violation (" << violation_kind_name(v.kind) << "): " << v.lhs << " < " << v.rhs
            << " at";
  for (const auto& s : v.sets) std::cout << " " << set_to_string(ground, s);
  std::cout << "\n";
}

json violation_json(const GroundSet& ground, const Violation& v) {
  json sets = json::array();
  for (const auto& s : v.sets) sets.push_back(member_labels(ground, s));
  return json{{"kind", violation_kind_name(v.kind)}, {"sets", sets}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

int run_minimize(const LoadedFunction& input, double alpha, bool as_json) {
  return std::visit(
      [&](const auto& f) {
        MinimizerResult result = opt_set(f, alpha);
        if (as_json) {
          std::cout << minimize_report(result, f.ground()).dump() << "\n";
        } else {
          std::cout << "minimizer: " << set_to_string(f.ground(), result.subset) << "\n"
                    << "value: " << result.value << "\n"
                    << "oracle calls: " << result.oracle_calls << "\n"
                    << "alpha: " << result.alpha_used << "\n";
        }
        return 0;
      },
      input);
}

int run_order(const LoadedFunction& input, double alpha, bool as_json) {
  return std::visit(
      [&](const auto& f) {
        const GroundSet& ground = f.ground();
        Ordering ordering = build_alpha_ordering(f, alpha);

        json out{{"alpha", alpha}, {"oracle_calls", ordering.eval_count}};
        json seq = json::array();
        for (int v : ordering.sequence) seq.push_back(ground.label(v));
        out["ordering"] = std::move(seq);

        std::optional<std::pair<int, int>> pair;
        if (ground.size() >= 2) pair = last_pair(ordering);
        if (pair) out["last_pair"] = {ground.label(pair->first), ground.label(pair->second)};

        bool classified = pair.has_value() && ground.size() <= 20;
        if (classified) {
          for (auto property :
               {PairProperty::contractible, PairProperty::pendent, PairProperty::flat}) {
            PairReport report = check_pair(f, pair->first, pair->second, property);
            out[to_string(property)] = report.holds;
          }
        }

        if (as_json) {
          std::cout << out.dump() << "\n";
        } else {
          std::cout << "ordering:";
          for (int v : ordering.sequence) std::cout << " " << ground.label(v);
          std::cout << "\n";
          if (pair) {
            std::cout << "last pair: (" << ground.label(pair->first) << ", "
                      << ground.label(pair->second) << ")\n";
          }
          if (classified) {
            std::cout << "contractible: " << (out["contractible"].get<bool>() ? "yes" : "no")
                      << "  pendent: " << (out["pendent"].get<bool>() ? "yes" : "no")
                      << "  flat: " << (out["flat"].get<bool>() ? "yes" : "no") << "\n";
          } else if (pair) {
            std::cout << "classification skipped (ground set larger than 20)\n";
          }
          std::cout << "oracle calls: " << ordering.eval_count << "\n";
        }
        return 0;
      },
      input);
}

int run_check(const LoadedFunction& input, const std::string& property, bool as_json) {
  return std::visit(
      [&](const auto& f) {
        const GroundSet& ground = f.ground();
        bool any_violation = false;
        json out;

        auto run_one = [&](const std::string& name, auto&& checker) {
          std::optional<Violation> violation = checker();
          if (as_json) {
            out[name] = violation ? violation_json(ground, *violation) : json("pass");
          } else {
            std::cout << name << ": ";
            if (violation) {
              print_violation(ground, *violation);
            } else {
              std::cout << "pass\n";
            }
          }
          any_violation = any_violation || violation.has_value();
        };

        if (property == "symmetric" || property == "both") {
          run_one("symmetric", [&] { return check_symmetric(f); });
        }
        if (property == "submodular" || property == "both") {
          run_one("submodular", [&] { return check_submodular(f); });
        }
        if (as_json) std::cout << out.dump() << "\n";
        return any_violation ? 1 : 0;
      },
      input);
}

CounterexampleInstance build_demo_instance(const std::string& property, double alpha) {
  if (property == "contractible") return counterexample_contractible(alpha);
  if (property == "pendent") return counterexample_pendent(alpha);
  if (property == "flat") return counterexample_flat(alpha);
  throw std::runtime_error("unknown property '" + property + "'; expected contractible|pendent|flat");
}

int run_demo(const std::string& property, double alpha, bool as_json) {
  CounterexampleInstance inst = build_demo_instance(property, alpha);
  const GraphCutFunction& g = inst.graph;
  const GroundSet& ground = g.ground();
  const int n = ground.size();

  Ordering ordering = build_alpha_ordering(g, inst.alpha);
  auto [u, v] = last_pair(ordering);
  bool pair_matches = std::minmax(u, v) == std::minmax(inst.expected_last_pair.first,
                                                       inst.expected_last_pair.second);

  double witness_value = g.evaluate(inst.witness);
  double bound = 0.0;
  std::string bound_text;
  switch (inst.violated_property) {
    case PairProperty::contractible: {
      double best = std::numeric_limits<double>::infinity();
      int arg = 0;
      for (int x = 0; x < n; ++x) {
        double value = g.evaluate(Subset::singleton(n, x));
        if (value < best) { best = value; arg = x; }
      }
      bound = best;
      bound_text = "min singleton f({" + ground.label(arg) + "})";
      break;
    }
    case PairProperty::pendent:
      bound = g.evaluate(Subset::singleton(n, v));
      bound_text = "f({" + ground.label(v) + "})";
      break;
    case PairProperty::flat: {
      double best = std::numeric_limits<double>::infinity();
      int arg = 0;
      inst.witness.for_each([&](int x) {
        double value = g.evaluate(Subset::singleton(n, x));
        if (value < best) { best = value; arg = x; }
      });
      bound = best;
      bound_text = "min singleton in X, f({" + ground.label(arg) + "})";
      break;
    }
  }
  bool violated = witness_value < bound - kEps;

  if (as_json) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
      edges.push_back({ground.label(e.u), ground.label(e.v), e.weight});
    }
    json seq = json::array();
    for (int x : ordering.sequence) seq.push_back(ground.label(x));
    json out{{"property", to_string(inst.violated_property)},
             {"alpha", inst.alpha},
             {"edges", edges},
             {"ordering", seq},
             {"expected_last_pair",
              {ground.label(inst.expected_last_pair.first),
               ground.label(inst.expected_last_pair.second)}},
             {"actual_last_pair", {ground.label(u), ground.label(v)}},
             {"pair_matches", pair_matches},
             {"witness", member_labels(ground, inst.witness)},
             {"witness_value", witness_value},
             {"bound", bound},
             {"violated", violated}};
    if (inst.kappa) out["kappa"] = *inst.kappa;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "property: " << to_string(inst.violated_property) << "  alpha: " << inst.alpha;
    if (inst.kappa) std::cout << "  kappa: " << *inst.kappa;
    std::cout << "\nedges:";
    for (const auto& e : g.edges()) {
      std::cout << " " << ground.label(e.u) << "-" << ground.label(e.v) << ":" << e.weight;
    }
    std::cout << "\nordering:";
    for (int x : ordering.sequence) std::cout << " " << ground.label(x);
    std::cout << "\nexpected last pair: {" << ground.label(inst.expected_last_pair.first) << ","
              << ground.label(inst.expected_last_pair.second) << "}  actual: ("
              << ground.label(u) << ", " << ground.label(v) << ")  match: "
              << (pair_matches ? "yes" : "no") << "\n";
    std::cout << "witness X = " << set_to_string(ground, inst.witness) << "  f(X) = "
              << witness_value << "  bound: " << bound_text << " = " << bound << "\n";
    std::cout << (violated ? "bound violated: the last pair fails the property\n"
                           : "bound NOT violated\n");
  }
  return pair_matches && violated ? 0 : 1;
}

int run_bench(const std::vector<int>& sizes, double alpha, std::uint64_t seed, bool use_random,
              bool as_json) {
  if (sizes.empty()) throw std::runtime_error("bench: need at least one size");
  for (int n : sizes) {
    if (n < 2) throw std::runtime_error("bench: sizes must be at least 2");
  }

  std::vector<std::pair<int, std::int64_t>> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    int n = sizes[i];
    GraphCutFunction g =
        use_random ? random_graph(n, 0.3, 10, seed + i) : cycle_graph(n);
    g.reset_calls();
    MinimizerResult result = opt_set(g, alpha);
    rows.emplace_back(n, result.oracle_calls);
  }

  std::optional<double> slope;
  if (rows.size() >= 2) {
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [n, calls] : rows) {
      mean_x += std::log(static_cast<double>(n));
      mean_y += std::log(static_cast<double>(calls));
    }
    mean_x /= static_cast<double>(rows.size());
    mean_y /= static_cast<double>(rows.size());
    double cov = 0.0, var = 0.0;
    for (const auto& [n, calls] : rows) {
      double dx = std::log(static_cast<double>(n)) - mean_x;
      cov += dx * (std::log(static_cast<double>(calls)) - mean_y);
      var += dx * dx;
    }
    if (var > 0.0) slope = cov / var;
  }

  if (as_json) {
    json table = json::array();
    for (const auto& [n, calls] : rows) table.push_back({{"n", n}, {"oracle_calls", calls}});
    json out{{"alpha", alpha}, {"instances", use_random ? "random" : "cycle"}, {"table", table}};
    if (slope) out["loglog_slope"] = *slope;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n\toracle_calls\n";
    for (const auto& [n, calls] : rows) std::cout << n << "\t" << calls << "\n";
    if (slope) std::cout << "log-log slope: " << *slope << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nontrivial minimizers of symmetric submodular functions via ordering-based "
               "contraction, with exhaustive desk-scale property checks"};
  app.require_subcommand(1);

  std::string input_path;
  std::string format;
  std::string property = "both";
  std::string demo_property;
  double alpha = 0.0;
  bool as_json = false;
  bool use_random = false;
  std::uint64_t seed = 1;
  std::vector<int> sizes{8, 16, 32, 64};

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("input", input_path, "input file (.graph edge list or .table dense table)")
          ->required();
      cmd->add_option("--format", format, "override format sniffing: graph|table");
    }
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* cmd_minimize =
      app.add_subcommand("minimize", "find a nontrivial minimizer by repeated contraction");
  add_common(cmd_minimize, true);
  cmd_minimize->add_option("--alpha", alpha, "ordering parameter in [-1, 1] (default 0)");

  CLI::App* cmd_order = app.add_subcommand("order", "build an alpha-ordering and classify its last pair");
  add_common(cmd_order, true);
  cmd_order->add_option("--alpha", alpha, "ordering parameter (default 0)");

  CLI::App* cmd_check = app.add_subcommand("check", "exhaustive symmetry/submodularity check");
  add_common(cmd_check, true);
  cmd_check->add_option("--property", property, "symmetric|submodular|both (default both)")
      ->check(CLI::IsMember({"symmetric", "submodular", "both"}));

  CLI::App* cmd_demo =
      app.add_subcommand("demo", "reproduce a boundary counterexample for the given property");
  add_common(cmd_demo, false);
  cmd_demo->add_option("--prop", demo_property, "contractible|pendent|flat")
      ->required()
      ->check(CLI::IsMember({"contractible", "pendent", "flat"}));
  cmd_demo->add_option("--alpha", alpha, "ordering parameter (default 0)");

  CLI::App* cmd_bench =
      app.add_subcommand("bench", "oracle-call growth of minimize over instance sizes");
  add_common(cmd_bench, false);
  cmd_bench->add_option("--sizes", sizes, "comma-separated instance sizes")->delimiter(',');
  cmd_bench->add_option("--alpha", alpha, "ordering parameter in [-1, 1] (default 0)");
  cmd_bench->add_option("--seed", seed, "seed for --random instances");
  cmd_bench->add_flag("--random", use_random, "random connected graphs instead of cycles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_minimize) return run_minimize(load_input(input_path, format), alpha, as_json);
    if (*cmd_order) return run_order(load_input(input_path, format), alpha, as_json);
    if (*cmd_check) return run_check(load_input(input_path, format), property, as_json);
    if (*cmd_demo) return run_demo(demo_property, alpha, as_json);
    if (*cmd_bench) return run_bench(sizes, alpha, seed, use_random, as_json);
  } catch (const ParseError& e) {
    std::cerr << input_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

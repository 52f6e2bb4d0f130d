#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "symmin/symmin.hpp"

using namespace symmin;
using Catch::Approx;
using testutil::make_table;
using testutil::negative_control_graph;
using testutil::path_graph;

TEST_CASE("brute force minimum") {
  SECTION("unit path") {
    auto [subset, value] = brute_force_min(path_graph(3));
    REQUIRE(value == 1.0);
    REQUIRE(subset == Subset::of(3, {0}));  // smallest mask among the ties
  }

  SECTION("fixed-weight star counterexample") {
    auto [subset, value] = brute_force_min(counterexample_contractible(-3.0).graph);
    REQUIRE(value == 2.0);
    REQUIRE(subset == Subset::of(5, {2, 3}));  // {p3, p4} beats the best singleton 3
  }

  SECTION("concave cardinality min(|X|, n - |X|)") {
    ConcaveCardinalityFunction f(GroundSet(numbered_labels("e", 4, 0)), {0, 1, 2, 1, 0});
    auto [subset, value] = brute_force_min(f);
    REQUIRE(value == 1.0);
    REQUIRE(subset == Subset::of(4, {0}));
  }

  SECTION("guards") {
    REQUIRE_THROWS_AS(brute_force_min(cycle_graph(21)), std::invalid_argument);
    REQUIRE_THROWS_AS(brute_force_min(make_table(1, [](std::uint64_t) { return 0.0; })),
                      std::invalid_argument);
  }
}

TEST_CASE("pair check on the quad counterexample") {
  const GraphCutFunction& g = counterexample_contractible(2.0).graph;
  double kappa = 2.0 / 3.0;

  PairReport report = check_pair(g, 2, 3, PairProperty::contractible);
  REQUIRE_FALSE(report.holds);
  REQUIRE(report.margin == Approx(kappa - 1.0).margin(1e-9));
  // first violating subset in mask order is {p2,p3}; the cut {p1,p4}
  // exhibited by the construction violates the bound as well
  REQUIRE(report.witness.has_value());
  REQUIRE(*report.witness == Subset::of(4, {1, 2}));
  REQUIRE(g.evaluate(Subset::of(4, {0, 3})) < 1.0 - 1e-9);

  // pendent fails too: f({p1,p4}) = kappa < 1 + kappa = f({p4})
  PairReport pendent = check_pair(g, 2, 3, PairProperty::pendent);
  REQUIRE_FALSE(pendent.holds);
}

TEST_CASE("pair check on the weighted path counterexample") {
  const GraphCutFunction& g = counterexample_flat(0.0).graph;  // kappa = 2
  PairReport report = check_pair(g, 3, 4, PairProperty::flat);
  REQUIRE_FALSE(report.holds);
  REQUIRE(report.witness.has_value());
  REQUIRE(*report.witness == Subset::of(5, {2, 3}));  // f = 2 < 3 = f({p3})
  REQUIRE(report.margin == Approx(-1.0).margin(1e-9));
}

TEST_CASE("pair check on two elements holds vacuously") {
  DenseTableFunction f = make_table(2, [](std::uint64_t m) { return m == 1 || m == 2 ? 3.0 : 0.0; });
  for (auto property : {PairProperty::contractible, PairProperty::pendent, PairProperty::flat}) {
    PairReport report = check_pair(f, 0, 1, property);
    REQUIRE(report.holds);
    REQUIRE(report.margin >= -1e-9);
    REQUIRE_FALSE(report.witness.has_value());
  }
}

TEST_CASE("pair check input validation") {
  GraphCutFunction g = cycle_graph(4);
  REQUIRE_THROWS_AS(check_pair(g, 1, 1, PairProperty::flat), std::invalid_argument);
  REQUIRE_THROWS_AS(check_pair(g, 0, 9, PairProperty::flat), std::out_of_range);
  REQUIRE_THROWS_AS(check_pair(cycle_graph(21), 0, 1, PairProperty::flat), std::invalid_argument);
}

TEST_CASE("symmetry check") {
  SECTION("cut functions pass") {
    REQUIRE_FALSE(check_symmetric(cycle_graph(6)).has_value());
  }

  SECTION("coverage is asymmetric already at the empty set") {
    CoverageFunction f(GroundSet(numbered_labels("e", 2, 0)),
                       {{1.0, Subset::of(2, {0})}});
    auto violation = check_symmetric(f);
    REQUIRE(violation.has_value());
    REQUIRE(violation->kind == ViolationKind::symmetry);
    // first mask-order witness: f({}) = 0 against f(V) = 1
    REQUIRE(violation->sets[0] == Subset(2));
    REQUIRE(violation->lhs == 0.0);
    REQUIRE(violation->rhs == 1.0);
  }

  SECTION("flipping one interior table entry is caught there") {
    DenseTableFunction f = make_table(3, [](std::uint64_t m) {
      if (m == 0b011) return 9.0;  // mate 0b100 keeps the old value
      return static_cast<double>(std::min(m, 7 - m));
    });
    auto violation = check_symmetric(f);
    REQUIRE(violation.has_value());
    Subset witness = violation->sets[1];  // the larger side is the flipped entry
    REQUIRE(witness == Subset::of(3, {0, 1}));
    REQUIRE(violation->lhs < violation->rhs - 1e-9);
  }

  SECTION("mirrored table passes") {
    DenseTableFunction f =
        make_table(4, [](std::uint64_t m) { return static_cast<double>(std::min(m, 15 - m)); });
    REQUIRE_FALSE(check_symmetric(f).has_value());
  }
}

TEST_CASE("submodularity check") {
  SECTION("cut functions pass") {
    for (std::uint64_t seed : {21u, 22u}) {
      REQUIRE_FALSE(check_submodular(random_graph(7, 0.5, 10, seed)).has_value());
    }
  }

  SECTION("non-concave cardinality profile is caught") {
    ConcaveCardinalityFunction f(GroundSet(numbered_labels("e", 4, 0)), {0, 1, 3, 1, 0}, false);
    auto violation = check_submodular(f);
    REQUIRE(violation.has_value());
    REQUIRE(violation->kind == ViolationKind::submodularity);
    REQUIRE(violation->lhs < violation->rhs - 1e-9);
    // re-evaluate the reported instantiation
    double lhs = f.evaluate(violation->sets[0]) + f.evaluate(violation->sets[1]);
    double rhs = f.evaluate(violation->sets[2]) + f.evaluate(violation->sets[3]);
    REQUIRE(lhs == violation->lhs);
    REQUIRE(rhs == violation->rhs);
  }

  SECTION("modular cardinality passes") {
    DenseTableFunction f =
        make_table(4, [](std::uint64_t m) { return static_cast<double>(std::popcount(m)); });
    REQUIRE_FALSE(check_submodular(f).has_value());
  }

  SECTION("guard") {
    REQUIRE_THROWS_AS(check_submodular(cycle_graph(15)), std::invalid_argument);
  }
}

TEST_CASE("ordering condition check flags a bad sequence") {
  GraphCutFunction path = path_graph(3);

  Ordering good = build_mc(path);
  REQUIRE_FALSE(check_ordering_condition(path, good, 0.0).has_value());

  Ordering bad{{1, 0, 2}, 0.0, 0};  // starts at p2 although f({p2}) = 2 > 1 = f({p1})
  auto violation = check_ordering_condition(path, bad, 0.0);
  REQUIRE(violation.has_value());
  REQUIRE(violation->kind == ViolationKind::ordering_condition);
  REQUIRE(violation->lhs == 1.0);
  REQUIRE(violation->rhs == 2.0);
  REQUIRE(violation->sets[0] == Subset::of(3, {0}));
  REQUIRE(violation->sets[1] == Subset::of(3, {1}));

  Ordering not_a_permutation{{0, 0, 2}, 0.0, 0};
  REQUIRE_THROWS_AS(check_ordering_condition(path, not_a_permutation, 0.0),
                    std::invalid_argument);
}

TEST_CASE("ordering condition on a single element") {
  DenseTableFunction f = make_table(1, [](std::uint64_t) { return 4.0; });
  Ordering ord = build_mc(f);
  REQUIRE_FALSE(check_ordering_condition(f, ord, 0.0).has_value());
}

TEST_CASE("capacity-ordering cut inequality holds for submodular functions") {
  SECTION("coverage functions, not symmetric") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      CoverageFunction f = random_coverage(4 + static_cast<int>(seed % 5), 8, seed);
      Ordering ord = build_mc(f);
      REQUIRE_FALSE(check_mc_cut_inequality(f, ord).has_value());
    }
  }

  SECTION("graph cuts, a fortiori") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GraphCutFunction g = random_graph(4 + static_cast<int>(seed % 5), 0.5, 10, seed * 7);
      Ordering ord = build_mc(g);
      REQUIRE_FALSE(check_mc_cut_inequality(g, ord).has_value());
    }
  }

  SECTION("negative control: a foreign ordering violates the inequality") {
    GraphCutFunction g = negative_control_graph();
    Ordering foreign{{2, 3, 0, 1}, 0.0, 0};
    auto violation = check_mc_cut_inequality(g, foreign);
    REQUIRE(violation.has_value());
    REQUIRE(violation->kind == ViolationKind::mc_cut_inequality);
    REQUIRE(violation->lhs == 30.0);  // f({p1}) + f(V \ {p1})
    REQUIRE(violation->rhs == 35.0);  // min singleton 15 + f(V_3) = 20
    REQUIRE(violation->sets[0] == Subset::of(4, {0}));

    Ordering own = build_mc(g);
    REQUIRE_FALSE(check_mc_cut_inequality(g, own).has_value());
  }

  SECTION("searching mismatched random pairs finds more controls") {
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 40 && found == 0; ++seed) {
      GraphCutFunction a = random_graph(5, 0.6, 9, seed);
      GraphCutFunction b = random_graph(5, 0.6, 9, seed + 1000);
      Ordering foreign = build_mc(a);
      if (check_mc_cut_inequality(b, foreign).has_value()) ++found;
    }
    REQUIRE(found > 0);
  }
}

TEST_CASE("alpha-ordering cut inequality") {
  SECTION("endpoint alpha = -1 is the pendent bound") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GraphCutFunction g = random_graph(4 + static_cast<int>(seed % 5), 0.5, 10, seed * 13);
      Ordering ord = build_ma(g);
      REQUIRE_FALSE(check_alpha_cut_inequality(g, ord, -1.0).has_value());
      // 2 f(X) >= 2 f({v_n}) is exactly the pendent-pair guarantee
      auto [u, v] = last_pair(ord);
      REQUIRE(check_pair(g, u, v, PairProperty::pendent).holds);
    }
  }

  SECTION("endpoint alpha = 1 is the flat bound") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GraphCutFunction g = random_graph(4 + static_cast<int>(seed % 5), 0.5, 10, seed * 19);
      Ordering ord = build_md(g);
      REQUIRE_FALSE(check_alpha_cut_inequality(g, ord, 1.0).has_value());
      auto [u, v] = last_pair(ord);
      REQUIRE(check_pair(g, u, v, PairProperty::flat).holds);
    }
  }

  SECTION("grid of alphas on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GraphCutFunction g = random_graph(4 + static_cast<int>(seed % 7), 0.5, 10, seed * 23);
      for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        Ordering ord = build_alpha_ordering(g, alpha);
        REQUIRE_FALSE(check_alpha_cut_inequality(g, ord, alpha).has_value());
      }
    }
  }

  SECTION("holds even on the counterexample instances at their alpha") {
    // the inequality is valid for every alpha; only contractibility needs [-1, 1]
    for (double alpha : {2.0, -1.5, -3.0}) {
      CounterexampleInstance inst = counterexample_contractible(alpha);
      Ordering ord = build_alpha_ordering(inst.graph, alpha);
      REQUIRE_FALSE(check_alpha_cut_inequality(inst.graph, ord, alpha).has_value());
    }
  }
}

TEST_CASE("pendent and flat imply contractible wherever they hold") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GraphCutFunction g = random_graph(5, 0.5, 8, seed * 41);
    for (int u = 0; u < 5; ++u) {
      for (int v = 0; v < 5; ++v) {
        if (u == v) continue;
        PairReport pendent = check_pair(g, u, v, PairProperty::pendent);
        PairReport flat = check_pair(g, u, v, PairProperty::flat);
        PairReport contractible = check_pair(g, u, v, PairProperty::contractible);
        if (pendent.holds) REQUIRE(contractible.holds);
        if (flat.holds) REQUIRE(contractible.holds);
      }
    }
  }
}

TEST_CASE("theorem-backed pair suites on random instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GraphCutFunction g = random_graph(4 + static_cast<int>(seed % 5), 0.5, 10, seed * 53);

    auto [ma_u, ma_v] = last_pair(build_ma(g));
    REQUIRE(check_pair(g, ma_u, ma_v, PairProperty::pendent).holds);

    auto [md_u, md_v] = last_pair(build_md(g));
    REQUIRE(check_pair(g, md_u, md_v, PairProperty::flat).holds);

    auto [mc_u, mc_v] = last_pair(build_mc(g));
    REQUIRE(check_pair(g, mc_u, mc_v, PairProperty::contractible).holds);

    for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      auto [u, v] = last_pair(build_alpha_ordering(g, alpha));
      REQUIRE(check_pair(g, u, v, PairProperty::contractible).holds);
    }
  }
}

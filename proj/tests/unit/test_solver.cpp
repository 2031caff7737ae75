#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "oddcolor/solver.hpp"
#include "oracles.hpp"

using namespace th;

namespace {

int chi_o(const Graph& g, int max_k = 9) {
  auto r = odd_chromatic_number(g, max_k);
  REQUIRE(r.exact());
  return r.value;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("decision examples") {
    CHECK(find_odd_coloring(cycle(4), 3).status == SolveStatus::Exhausted);
    CHECK(find_odd_coloring(cycle(4), 4).status == SolveStatus::Found);
    CHECK(find_odd_coloring(kite(), 3).status == SolveStatus::Found);
    CHECK(find_odd_coloring(kite(), 2).status == SolveStatus::Exhausted);
  }

  TEST_CASE("odd chromatic numbers") {
    CHECK(chi_o(cycle(5)) == 5);
    CHECK(chi_o(cycle(4)) == 4);
    CHECK(chi_o(kite()) == 3);
    CHECK(chi_o(path(3)) == 3);
    CHECK(chi_o(edges(1, {})) == 1);
    CHECK(chi_o(path(2)) == 2);
    Graph sk4 = subdivide(complete(4));
    CHECK(chi_o(sk4) >= 4);
    CHECK(chromatic_number(sk4, 9).value == 2);
    CHECK(chromatic_number(cycle(5), 9).value == 3);
    CHECK(chromatic_number(cycle(4), 9).value == 2);
  }

  TEST_CASE("exceeding the bound") {
    auto r = odd_chromatic_number(cycle(5), 4);
    CHECK(r.status == ChromaticResult::Status::ExceedsBound);
    CHECK_FALSE(r.witness.has_value());
  }

  TEST_CASE("backtracking agrees with brute force") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
      int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Edge> e;
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
          if (rng() % 2) e.emplace_back(u, v);
      Graph g = Graph::from_edges(n, e);
      auto fast = odd_chromatic_number(g, n);
      auto slow = brute_force_odd_chromatic(g, n);
      REQUIRE(fast.exact());
      REQUIRE(slow.exact());
      CHECK(fast.value == slow.value);
      CHECK(oracle::odd_coloring(g, fast.witness->raw()));
      CHECK(oracle::palette_size(fast.witness->raw()) <= fast.value);
      // chi <= chi_o, and once a palette works every larger one does too.
      CHECK(chromatic_number(g, n).value <= fast.value);
      if (fast.value < 9) CHECK(find_odd_coloring(g, fast.value + 1).status == SolveStatus::Found);
    }
  }

  TEST_CASE("proper coloring mode") {
    auto r = find_proper_coloring(cycle(5), 3);
    REQUIRE(r.status == SolveStatus::Found);
    CHECK(is_proper(cycle(5), *r.witness));
    CHECK(find_proper_coloring(complete(4), 3).status == SolveStatus::Exhausted);
  }

  TEST_CASE("node budget") {
    SolveOptions tight;
    tight.node_budget = 3;
    auto r = find_odd_coloring(subdivide(complete(5)), 4, tight);
    CHECK(r.status == SolveStatus::BudgetExhausted);
    CHECK(r.nodes <= 3);
    auto chi = odd_chromatic_number(subdivide(complete(5)), 9, tight);
    CHECK(chi.status == ChromaticResult::Status::BudgetExhausted);
  }

  TEST_CASE("brute force size guard") {
    CHECK_THROWS_AS(brute_force_odd_chromatic(path(30), 3), InstanceTooLarge);
  }

  TEST_CASE("budget from environment") {
    ::setenv("ODDCHROM_BUDGET", "1234", 1);
    CHECK(budget_from_env() == 1234);
    ::setenv("ODDCHROM_BUDGET", "abc", 1);
    CHECK_THROWS_AS(budget_from_env(), std::invalid_argument);
    ::unsetenv("ODDCHROM_BUDGET");
    CHECK(budget_from_env() == 0);
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/fixtures.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/rng.hpp"

using namespace orichrome;

namespace {

// Does g map into some oriented graph on k vertices? Brute force over all
// k^n vertex maps and all 3^C(k,2) targets, so only for tiny cases.
bool brute_maps_into_order(const OrientedGraph& g, int k) {
  OrientedGraphEnumerator targets(k);
  const int n = g.order();
  while (auto h = targets.next()) {
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    for (;;) {
      if (validate_homomorphism(g, *h, map)) return true;
      int i = 0;
      while (i < n && ++map[i] == k) map[i++] = 0;
      if (i == n) break;
    }
  }
  return false;
}

int brute_min_clique_arcs(int n) {
  int best = -1;
  OrientedGraphEnumerator all(n);
  while (auto g = all.next()) {
    if (!is_oriented_clique(*g)) continue;
    const int m = static_cast<int>(g->size());
    if (best < 0 || m < best) best = m;
  }
  return best;
}

}  // namespace

TEST_CASE("oriented chromatic number of small graphs") {
  CHECK(*exact_oriented_chromatic(OrientedGraph(0)).value == 0);
  CHECK(*exact_oriented_chromatic(OrientedGraph(3)).value == 1);
  CHECK(*exact_oriented_chromatic(directed_path(2)).value == 2);
  CHECK(*exact_oriented_chromatic(directed_path(3)).value == 3);

  SUBCASE("directed C5 needs 5") {
    const OrientedGraph c5 = directed_cycle(5);
    CHECK_FALSE(brute_maps_into_order(c5, 4));
    const std::vector<int> identity{0, 1, 2, 3, 4};
    CHECK(validate_homomorphism(c5, c5, identity));
    CHECK(*exact_oriented_chromatic(c5).value == 5);
  }
  SUBCASE("hexagon with a dominated centre") {
    const OrientedGraph g = figure1_graph();
    CHECK(g.order() == 7);
    CHECK(g.size() == 12);
    CHECK(validate_homomorphism(g, figure1_target(), figure1_colouring()));
    const SolveResult r = exact_oriented_chromatic(g);
    REQUIRE(r.found());
    CHECK(*r.value <= 4);
    CHECK(*r.value == 4);  // the hexagon alone needs 3 and the centre dominates it
    CHECK(validate_homomorphism(g, r.target, r.witness));
  }
  SUBCASE("k_max cap") {
    try {
      exact_oriented_chromatic(directed_path(3), 8);
      FAIL("cap not enforced");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kCapExceeded);
    }
    CHECK_FALSE(exact_oriented_chromatic(directed_cycle(5), 4).found());
  }
  SUBCASE("agrees with brute force on random graphs with n <= 5, k <= 3") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(3));
      OrientedGraph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const auto s = rng.below(3);
          if (s == 1) g.add_arc(u, v);
          if (s == 2) g.add_arc(v, u);
        }
      const int value = *exact_oriented_chromatic(g).value;
      for (int k = 1; k <= 3; ++k) CHECK(brute_maps_into_order(g, k) == (value <= k));
    }
  }
}

TEST_CASE("oriented chromatic number of simple graphs") {
  CHECK(*exact_oriented_chromatic_simple(complete_graph(3)).value == 3);
  CHECK(*exact_oriented_chromatic_simple(path_graph(3)).value == 3);
  CHECK(*exact_oriented_chromatic_simple(SimpleGraph(4)).value == 1);
  CHECK_THROWS_AS(exact_oriented_chromatic_simple(complete_graph(7)), Error);  // 21 edges
}

TEST_CASE("2-dipath chromatic number") {
  CHECK(*exact_two_dipath(directed_path(3)).value == 3);
  CHECK(*exact_two_dipath(OrientedGraph(5)).value == 1);
  CHECK(*exact_two_dipath(directed_cycle(4)).value == 4);
  CHECK(*exact_two_dipath(directed_cycle(6)).value == 3);
  CHECK_THROWS_AS(exact_two_dipath(OrientedGraph(21)), Error);

  SUBCASE("witnesses validate and equal the distinct colour count") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const OrientedGraph g = random_orientation(random_degenerate(14, 3, seed), seed);
      const SolveResult r = exact_two_dipath(g);
      CHECK(validate_two_dipath_colouring(g, r.witness));
      std::vector<int> used = r.witness;
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      CHECK(static_cast<int>(used.size()) == *r.value);
    }
  }
}

TEST_CASE("sandwich on every oriented graph with n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    OrientedGraphEnumerator all(n);
    while (auto g = all.next()) {
      const SolveResult chio = exact_oriented_chromatic(*g);
      const SolveResult chi2 = exact_two_dipath(*g);
      CHECK(*chi2.value <= *chio.value);
      CHECK(validate_homomorphism(*g, chio.target, chio.witness));
    }
  }
}

TEST_CASE("minimum-arc oriented cliques") {
  // Oracle first: brute force over all labelled oriented graphs.
  CHECK(brute_min_clique_arcs(3) == 2);
  CHECK(brute_min_clique_arcs(4) == 4);
  CHECK(brute_min_clique_arcs(5) == 5);

  for (int n = 3; n <= 5; ++n) {
    const CliqueSearchResult r = min_edge_oriented_clique(n, n * (n - 1) / 2);
    REQUIRE(r.found());
    CHECK(*r.arcs == brute_min_clique_arcs(n));
    CHECK(is_oriented_clique(r.witness));
    CHECK(static_cast<int>(r.witness.size()) == *r.arcs);
  }
  SUBCASE("budget below f(n) finds nothing") {
    CHECK_FALSE(min_edge_oriented_clique(4, 3).found());
    CHECK(min_edge_oriented_clique(4, 4).found());
  }
  SUBCASE("f(n) <= floor(n log2 n) where exhaustive mode runs") {
    for (int n = 2; n <= 6; ++n) {
      const int budget = static_cast<int>(std::floor(n * std::log2(n)));
      const CliqueSearchResult r = min_edge_oriented_clique(n, budget);
      CHECK(r.found());
    }
  }
  SUBCASE("witness mode") {
    for (int n = 5; n <= 8; ++n) {
      const int budget = static_cast<int>(std::floor(n * std::log2(n)));
      const CliqueSearchResult r = min_edge_oriented_clique(n, budget, CliqueSearchMode::kWitness, 1);
      REQUIRE(r.found());
      CHECK(*r.arcs <= budget);
      CHECK(is_oriented_clique(r.witness));
    }
  }
}

TEST_CASE("homomorphism validator") {
  const OrientedGraph g = directed_cycle(4);
  std::vector<int> identity{0, 1, 2, 3};
  CHECK(validate_homomorphism(g, g, identity));
  std::vector<int> constant{0, 0, 0, 0};
  CHECK_FALSE(validate_homomorphism(g, g, constant));
  std::vector<int> short_map{0, 1};
  CHECK_FALSE(validate_homomorphism(g, g, short_map));
}

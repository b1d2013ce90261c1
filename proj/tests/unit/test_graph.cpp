#include <doctest.h>

#include <algorithm>
#include <vector>

#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/fixtures.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/graph.hpp"
#include "orichrome/rng.hpp"

using namespace orichrome;

namespace {

// Independent reference: all-pairs directed distances by Floyd-Warshall.
std::vector<std::vector<int>> directed_distances(const OrientedGraph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& a : g.arcs()) dist[a.from][a.to] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

SimpleGraph square_by_distances(const OrientedGraph& g) {
  const auto dist = directed_distances(g);
  SimpleGraph sq(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (std::min(dist[u][v], dist[v][u]) <= 2) sq.add_edge(u, v);
  return sq;
}

// Largest minimum degree over all non-empty induced subgraphs.
int brute_degeneracy(const OrientedGraph& g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1U)) continue;
      int d = 0;
      for (int u = 0; u < n; ++u)
        if (((mask >> u) & 1U) && g.adjacent(u, v)) ++d;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

}  // namespace

TEST_CASE("arcs, signs and removal") {
  OrientedGraph g(4);
  g.add_arc(0, 1);
  g.add_arc(2, 1);
  CHECK(g.size() == 2);
  CHECK(g.has_arc(0, 1));
  CHECK_FALSE(g.has_arc(1, 0));
  CHECK(g.sign(0, 1) == 1);
  CHECK(g.sign(1, 0) == -1);
  CHECK(g.sign(0, 2) == 0);
  CHECK(g.degree(1) == 2);
  CHECK(g.in_degree(1) == 2);
  g.remove_edge(1, 2);
  CHECK(g.size() == 1);
  CHECK(g.neighbour_list(1) == std::vector<int>{0});
}

TEST_CASE("from_arcs rejects loops, duplicates and anti-parallel pairs") {
  const std::vector<Arc> loop{{0, 0}};
  const std::vector<Arc> dup{{0, 1}, {0, 1}};
  const std::vector<Arc> anti{{0, 1}, {1, 0}};
  const std::vector<Arc> range{{0, 3}};
  for (const auto* arcs : {&loop, &dup, &anti, &range}) {
    try {
      OrientedGraph::from_arcs(3, *arcs);
      FAIL("expected an invariant violation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvariantViolation);
    }
  }
}

TEST_CASE("orientation vectors") {
  SUBCASE("K_{4,4} fixture: vertex +2 toward its two out-neighbours") {
    const OrientedGraph g = figure2_graph();
    const int plus2 = 1;
    std::vector<int> outs;
    for (int u : g.neighbour_list(plus2))
      if (g.has_arc(plus2, u)) outs.push_back(u);
    REQUIRE(outs == std::vector<int>{5, 6});  // -2, -3
    CHECK(orientation_vector(g, outs, plus2).entries == std::vector<int>{1, 1});
  }
  SUBCASE("empty U") {
    CHECK(orientation_vector(directed_path(3), {}, 0).entries.empty());
  }
  SUBCASE("middle of a directed path") {
    const std::vector<int> us{0, 2};
    CHECK(orientation_vector(directed_path(3), us, 1).entries == std::vector<int>{-1, 1});
  }
  SUBCASE("non-neighbour") {
    const std::vector<int> us{2};
    CHECK_THROWS_AS(orientation_vector(directed_path(3), us, 0), Error);
  }
  SUBCASE("entries match arcs pointwise on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const OrientedGraph g = random_orientation(random_degenerate(12, 4, seed), seed);
      for (int v = 0; v < g.order(); ++v) {
        const std::vector<int> nb = g.neighbour_list(v);
        const auto vec = orientation_vector(g, nb, v);
        for (std::size_t i = 0; i < nb.size(); ++i) CHECK(vec.entries[i] == (g.has_arc(v, nb[i]) ? 1 : -1));
      }
    }
  }
}

TEST_CASE("directed square") {
  const SimpleGraph tri = directed_square(directed_path(3));
  CHECK(tri.is_complete());
  CHECK(directed_square(OrientedGraph(4)).size() == 0);
  CHECK(directed_square(directed_cycle(4)).is_complete());
  CHECK(square_by_distances(directed_cycle(4)).is_complete());

  SUBCASE("agrees with all-pairs distances and is monotone under arc addition") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(9));
      OrientedGraph g = random_orientation(random_degenerate(n, 3, rng.next()), rng.next());
      const SimpleGraph sq = directed_square(g);
      CHECK(sq == square_by_distances(g));
      for (int v = 0; v < n; ++v) CHECK_FALSE(sq.has_edge(v, v));
      // add one missing arc
      for (int u = 0; u < n; ++u) {
        bool added = false;
        for (int v = u + 1; v < n; ++v) {
          if (!g.adjacent(u, v)) {
            g.add_arc(u, v);
            added = true;
            break;
          }
        }
        if (added) break;
      }
      const SimpleGraph bigger = directed_square(g);
      for (const Edge& e : sq.edges()) CHECK(bigger.has_edge(e.u, e.v));
    }
  }
}

TEST_CASE("oriented cliques") {
  CHECK(is_oriented_clique(transitive_tournament(3)));
  CHECK(is_oriented_clique(directed_path(3)));
  CHECK_FALSE(is_oriented_clique(directed_path(4)));
  // Oracle: directed C5 has weak distance <= 2 between every pair.
  CHECK(square_by_distances(directed_cycle(5)).is_complete());
  CHECK(is_oriented_clique(directed_cycle(5)));
  CHECK_FALSE(is_oriented_clique(directed_cycle(6)));
}

TEST_CASE("clique characterizations agree on every oriented graph with n <= 5") {
  std::uint64_t count = 0;
  for (int n = 1; n <= 5; ++n) {
    OrientedGraphEnumerator all(n);
    while (auto g = all.next()) {
      ++count;
      const bool clique = is_oriented_clique(*g);
      CHECK(clique == directed_square(*g).is_complete());
      CHECK(clique == (*exact_two_dipath(*g).value == n));
      CHECK(clique == (*exact_oriented_chromatic(*g).value == n));
    }
  }
  CHECK(count == 1 + 3 + 27 + 729 + 59049);
}

TEST_CASE("degeneracy ordering") {
  CHECK(degeneracy_ordering(OrientedGraph(5)).degeneracy == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(degeneracy_ordering(random_orientation(random_tree(15, seed), seed)).degeneracy == 1);
  }
  // The octahedron is 4-regular, so every peeling starts at degree 4.
  const OrientedGraph oct = random_orientation(octahedron(), 3);
  CHECK(brute_degeneracy(oct) == 4);
  CHECK(degeneracy_ordering(oct).degeneracy == 4);

  SUBCASE("matches the brute-force value and the back-degree bound") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(11));
      const OrientedGraph g = random_orientation(random_degenerate(n, 1 + trial % 5, rng.next()), rng.next());
      const VertexOrdering ord = degeneracy_ordering(g);
      CHECK(ord.is_valid_for(g));
      CHECK(ord.degeneracy == brute_degeneracy(g));
      CHECK(ord.degeneracy <= std::max(0, g.max_degree()));
      const auto back = VertexOrdering::back_degrees(g, ord.order);
      CHECK(*std::max_element(back.begin(), back.end()) <= ord.degeneracy);
    }
  }
}

TEST_CASE("induced subgraphs and the underlying graph") {
  const OrientedGraph c = directed_cycle(5);
  const std::vector<int> keep{4, 0, 1};
  const OrientedGraph sub = c.induced(keep);
  CHECK(sub.order() == 3);
  CHECK(sub.has_arc(0, 1));  // 4 -> 0
  CHECK(sub.has_arc(1, 2));  // 0 -> 1
  CHECK(sub.size() == 2);
  CHECK(c.underlying().size() == 5);
}

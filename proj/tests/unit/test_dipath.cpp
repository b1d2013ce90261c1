#include <doctest.h>

#include <numeric>
#include <vector>

#include "orichrome/dipath.hpp"
#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/rng.hpp"
#include "orichrome/surface_params.hpp"

using namespace orichrome;

namespace {

// Direct definition: two vertices clash iff an arc or a directed 2-path joins
// them. Written without the square so it can check it.
bool brute_valid(const OrientedGraph& g, const std::vector<int>& colours) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || colours[u] != colours[v]) continue;
      if (g.has_arc(u, v)) return false;
      for (int w = 0; w < n; ++w)
        if (g.has_arc(u, w) && g.has_arc(w, v)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("greedy palette bound") {
  CHECK(greedy_palette_bound(1, 3) == 4);
  CHECK(greedy_palette_bound(3, 6) == 25);
  CHECK(greedy_palette_bound(6, 12) == 103);
  CHECK(greedy_palette_bound(0, 0) == 1);
}

TEST_CASE("greedy colouring") {
  SUBCASE("edgeless graph uses one colour") {
    const OrientedGraph g(6);
    const DipathColouring c = greedy_two_dipath(g, degeneracy_ordering(g));
    CHECK(c.palette_size == 1);
  }
  SUBCASE("forests stay within Delta + 1") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const OrientedGraph t = random_orientation(random_tree(40, seed), seed);
      const VertexOrdering ord = degeneracy_ordering(t);
      const DipathColouring c = greedy_two_dipath(t, ord);
      CHECK(c.palette_size <= greedy_palette_bound(1, t.max_degree()));
      CHECK(brute_valid(t, c.colours));
    }
  }
  SUBCASE("valid and within the bound on random degenerate graphs") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 5 + static_cast<int>(rng.below(60));
      const int d = 1 + static_cast<int>(rng.below(5));
      const OrientedGraph g = random_orientation(random_degenerate(n, d, rng.next()), rng.next());
      const VertexOrdering ord = degeneracy_ordering(g);
      const DipathColouring c = greedy_two_dipath(g, ord);
      CHECK(validate_two_dipath_colouring(g, c.colours));
      CHECK(brute_valid(g, c.colours));
      CHECK(c.palette_size <= greedy_palette_bound(ord.degeneracy, g.max_degree()));
      for (int col : c.colours) CHECK((col >= 1 && col <= c.palette_size));
    }
  }
  SUBCASE("rejects an ordering that is not a permutation") {
    const OrientedGraph g = directed_path(3);
    VertexOrdering bad;
    bad.order = {0, 0, 1};
    CHECK_THROWS_AS(greedy_two_dipath(g, bad), Error);
  }
}

TEST_CASE("validator") {
  const OrientedGraph p = directed_path(3);
  CHECK(validate_two_dipath_colouring(p, std::vector<int>{1, 2, 3}));
  CHECK_FALSE(validate_two_dipath_colouring(p, std::vector<int>{1, 2, 1}));
  // The two sources of an in-star share no directed path.
  OrientedGraph star(3);
  star.add_arc(0, 2);
  star.add_arc(1, 2);
  CHECK(validate_two_dipath_colouring(star, std::vector<int>{1, 1, 2}));
}

TEST_CASE("stratified colouring") {
  const OrientedGraph k4 = random_orientation(complete_graph(4), 2);
  SUBCASE("empty U keeps the inner colouring") {
    const DipathColouring inner = greedy_two_dipath(k4, degeneracy_ordering(k4));
    const DipathColouring c = stratified_two_dipath(k4, {}, inner);
    CHECK(c.colours == inner.colours);
    CHECK(c.palette_size == inner.palette_size);
  }
  SUBCASE("U = V gives every vertex its own fresh colour") {
    const std::vector<int> all{3, 1, 0, 2};
    DipathColouring inner;
    inner.colours.assign(4, 1);
    inner.palette_size = 1;
    const DipathColouring c = stratified_two_dipath(k4, all, inner);
    CHECK(c.colours == std::vector<int>{2, 3, 4, 5});
    CHECK(c.palette_size == 5);
    CHECK(validate_two_dipath_colouring(k4, c.colours));
  }
  SUBCASE("invalid inner colouring") {
    DipathColouring inner;
    inner.colours.assign(4, 1);
    inner.palette_size = 1;
    const std::vector<int> two{0, 1};
    try {
      stratified_two_dipath(k4, two, inner);
      FAIL("accepted a monochromatic K4");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidInner);
    }
  }
  SUBCASE("valid on random graphs and random U") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      const OrientedGraph g = random_orientation(random_degenerate(25, 3, rng.next()), rng.next());
      std::vector<int> u;
      for (int v = 0; v < g.order(); ++v)
        if (rng.below(4) == 0) u.push_back(v);
      const OrientedGraph stripped = remove_internal_arcs(g, u);
      const DipathColouring inner = greedy_two_dipath(stripped, degeneracy_ordering(stripped));
      const DipathColouring c = stratified_two_dipath(g, u, inner);
      CHECK(validate_two_dipath_colouring(g, c.colours));
      CHECK(c.palette_size == inner.palette_size + static_cast<int>(u.size()));
    }
  }
}

TEST_CASE("surface colouring") {
  SUBCASE("toroidal grid with g = 2") {
    const OrientedGraph g = random_orientation(toroidal_grid(4, 4), 1);
    const DipathColouring c = surface_two_dipath(g, 2);
    CHECK(validate_two_dipath_colouring(g, c.colours));
    CHECK(c.palette_size <= SurfaceParams{2}.dipath_palette_bound());
    CHECK(c.palette_size == c.distinct_colours());
  }
  SUBCASE("graphs with n <= 6g - 1 get exactly n colours") {
    for (int n = 1; n <= 11; ++n) {
      const OrientedGraph g = random_orientation(random_degenerate(n, 3, static_cast<std::uint64_t>(n)), 4);
      CHECK(surface_two_dipath(g, 2).palette_size == n);
    }
  }
  SUBCASE("planar triangulations under larger genus bounds") {
    for (int genus = 2; genus <= 5; ++genus) {
      const OrientedGraph g = random_orientation(planar_triangulation(200, 400, static_cast<std::uint64_t>(genus)),
                                                 static_cast<std::uint64_t>(genus));
      if (g.max_degree() > SurfaceParams{genus}.max_degree_bound()) continue;
      const DipathColouring c = surface_two_dipath(g, genus);
      CHECK(validate_two_dipath_colouring(g, c.colours));
      CHECK(c.palette_size <= SurfaceParams{genus}.dipath_palette_bound());
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(surface_two_dipath(directed_path(3), 1), Error);
    const OrientedGraph dense = random_orientation(complete_graph(14), 1);  // degree 13 > 12
    try {
      surface_two_dipath(dense, 2);
      FAIL("degree bound not enforced");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kPreconditionViolated);
    }
  }
}

TEST_CASE("exact value never exceeds the greedy palette") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const OrientedGraph g = random_orientation(random_degenerate(n, 1 + trial % 4, rng.next()), rng.next());
    const DipathColouring greedy = greedy_two_dipath(g, degeneracy_ordering(g));
    const SolveResult exact = exact_two_dipath(g);
    CHECK(*exact.value <= greedy.palette_size);
    CHECK(*exact.value >= 1);
  }
}

TEST_CASE("compaction and JSON") {
  DipathColouring c;
  c.colours = {7, 3, 7, 10};
  c.palette_size = 10;
  c.compact();
  CHECK(c.colours == std::vector<int>{2, 1, 2, 3});
  CHECK(c.palette_size == 3);
  const auto j = colouring_to_json(c);
  CHECK(j["palette"] == 3);
  CHECK(j["colours"]["3"] == 3);
}

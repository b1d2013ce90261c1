#include <doctest.h>

#include <numeric>
#include <vector>

#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/fixtures.hpp"
#include "orichrome/full_target.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/pipeline.hpp"
#include "orichrome/rng.hpp"
#include "orichrome/target.hpp"

using namespace orichrome;

namespace {

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected " << error_code_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// K_{4,13}: the 13 degree-4 vertices see only degree-13 vertices, so no rule applies.
OrientedGraph k4_13() {
  SimpleGraph g(17);
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 17; ++b) g.add_edge(a, b);
  return random_orientation(g, 3);
}

}  // namespace

TEST_CASE("reduction") {
  SUBCASE("a tree disappears") {
    const OrientedGraph t = random_orientation(random_tree(30, 2), 2);
    const ReductionResult r = reduce(t);
    CHECK(r.core_vertices.empty());
    CHECK(r.core.order() == 0);
    CHECK(r.steps.size() == 30);
  }
  SUBCASE("the icosahedron cascades through edge steps") {
    const OrientedGraph ico = random_orientation(icosahedron(), 1);
    CHECK_FALSE(is_reduced(ico));
    const ReductionResult r = reduce(ico);
    REQUIRE_FALSE(r.steps.empty());
    CHECK(r.steps.front().kind == ReductionKind::kRemoveLowDegreeEdge);
    CHECK(is_reduced(r.core));
  }
  SUBCASE("a reduced graph is left alone") {
    const OrientedGraph g = random_orientation(complete_minus_perfect_matching(12), 1);
    CHECK(is_reduced(g));
    const ReductionResult r = reduce(g);
    CHECK(r.steps.empty());
    CHECK(r.core == g);
    CHECK(is_reduced(k4_13()));
  }
  SUBCASE("every step obeys its rule and the measure drops") {
    SplitMix64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
      const OrientedGraph g =
          random_orientation(planar_triangulation(20 + static_cast<int>(rng.below(80)), 100, rng.next()), rng.next());
      const ReductionResult r = reduce(g);
      CHECK(is_reduced(r.core));
      int alive = g.order();
      long long edges = static_cast<long long>(g.size());
      for (const ReductionStep& s : r.steps) {
        const int before_alive = alive;
        const long long before_edges = edges;
        if (s.kind == ReductionKind::kRemoveLowDegreeVertex) {
          CHECK(s.vertex_degree <= 3);
          CHECK(static_cast<int>(s.removed_arcs.size()) == s.vertex_degree);
          --alive;
          edges += static_cast<long long>(s.completion_arcs.size()) - s.vertex_degree;
        } else {
          CHECK(s.vertex_degree >= 4);
          CHECK(s.vertex_degree <= 5);
          CHECK(s.other_degree < 12);
          CHECK(s.removed_arcs.size() == 1);
          --edges;
        }
        CHECK((alive < before_alive || (alive == before_alive && edges < before_edges)));
      }
      CHECK(alive == static_cast<int>(r.core_vertices.size()));
      CHECK(edges == static_cast<long long>(r.reduced.size()));
    }
  }
}

TEST_CASE("discharging ledger") {
  SUBCASE("K12 minus a perfect matching keeps charge 4 everywhere") {
    const DischargeResult d = discharge_check(random_orientation(complete_minus_perfect_matching(12), 1), 2);
    CHECK(d.ledger.transfers.empty());
    for (const Charge& c : d.ledger.final) CHECK(c == Charge(4));
    CHECK(d.max_degree == 10);
    CHECK(d.max_degree_ok);
  }
  SUBCASE("K_{4,13} by hand") {
    const DischargeResult d = discharge_check(k4_13(), 3);
    CHECK(d.ledger.transfers.size() == 52);
    for (int a = 0; a < 4; ++a) {
      CHECK(d.ledger.initial[a] == Charge(7));
      CHECK(d.ledger.final[a] == Charge(1, 2));
    }
    for (int b = 4; b < 17; ++b) {
      CHECK(d.ledger.initial[b] == Charge(-2));
      CHECK(d.ledger.final[b] == Charge(0));
    }
    CHECK(d.ledger.initial_sum() == Charge(2));
    CHECK(d.ledger.final_sum() == Charge(2));
    CHECK(d.max_degree_ok);
    CHECK_FALSE(discharge_check(k4_13(), 2).max_degree_ok);
  }
  SUBCASE("empty core") {
    const DischargeResult d = discharge_check(OrientedGraph(0), 2);
    CHECK(d.ledger.initial.empty());
    CHECK(d.ledger.final_sum() == Charge(0));
  }
  SUBCASE("charge is conserved on reduced cores") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ReductionResult r = reduce(random_orientation(toroidal_grid(6, 7, true), seed));
      const DischargeResult d = discharge_check(r.core, 2);
      CHECK(d.ledger.initial_sum() == d.ledger.final_sum());
      for (const Charge& c : d.ledger.final) CHECK(c >= 0);
    }
  }
  expect_code(ErrorCode::kNotReduced, [] { discharge_check(directed_path(3), 2); });
}

TEST_CASE("pool embedding") {
  const OrientedGraph t5 = random_tournament(5, 4);
  LazyTarget lazy(3, 8, 1);
  const Homomorphism hom = embed_small(t5, lazy);
  CHECK(hom.distinct_images() == 5);
  int arcs = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (lazy.arc_sign(hom[u], hom[v]) == 1) {
        ++arcs;
        CHECK(t5.has_arc(u, v));
      }
  CHECK(arcs == 10);
  CHECK(validate_homomorphism(t5, hom, lazy));
  expect_code(ErrorCode::kPreconditionViolated, [&] { embed_small(t5, lazy); });

  LazyTarget tiny(3, 4, 1);
  expect_code(ErrorCode::kCapacityExceeded, [&] { embed_small(t5, tiny); });
  LazyTarget exact(3, 5, 1);
  CHECK(embed_small(t5, exact).distinct_images() == 5);
}

TEST_CASE("extending a vertex") {
  // Centre 6 with six pool neighbours, alternating directions.
  OrientedGraph star(7);
  for (int i = 0; i < 6; ++i) {
    if (i % 2 == 0) {
      star.add_arc(6, i);
    } else {
      star.add_arc(i, 6);
    }
  }
  SUBCASE("lazy target") {
    LazyTarget lazy(2, 6, 3);
    Homomorphism hom(7);
    const std::vector<int> leaves{0, 1, 2, 3, 4, 5};
    embed_small(star, leaves, lazy, hom);
    CHECK_FALSE(validate_homomorphism(star, hom, lazy));
    CHECK(validate_homomorphism(star, hom, lazy, true));
    const TargetVertex img = extend_vertex(star, hom, 6, 2, lazy);
    CHECK(img.cls == 2);
    CHECK(validate_homomorphism(star, hom, lazy));
  }
  SUBCASE("restricted arity-2 target") {
    RestrictedTarget h(figure2_target(), 1);
    Homomorphism hom(7);
    const std::vector<int> three{0, 1, 2};
    embed_small(star, three, h, hom);
    expect_code(ErrorCode::kArityExceeded, [&] { extend_vertex(star, hom, 6, 1, h); });
  }
  SUBCASE("no realizer") {
    // 2 -> 0 and 2 -> 1 with 0, 1 on -1 and -3: the unrealized pattern.
    OrientedGraph g(3);
    g.add_arc(2, 0);
    g.add_arc(2, 1);
    RestrictedTarget h(figure2_target(), 1);
    Homomorphism hom(3);
    hom.image[0] = h.pool_vertex(0);
    hom.image[1] = h.pool_vertex(2);
    expect_code(ErrorCode::kNoRealizer, [&] { extend_vertex(g, hom, 2, 1, h); });
  }
  SUBCASE("conflicting constraints") {
    OrientedGraph g(3);
    g.add_arc(2, 0);
    g.add_arc(1, 2);
    LazyTarget lazy(2, 4, 0);
    Homomorphism hom(3);
    hom.image[0] = lazy.pool_vertex(0);
    hom.image[1] = lazy.pool_vertex(0);
    expect_code(ErrorCode::kConstraintConflict, [&] { extend_vertex(g, hom, 2, 1, lazy); });
  }
  SUBCASE("validation rejects shared pool images") {
    OrientedGraph g(2);
    LazyTarget lazy(2, 4, 0);
    Homomorphism hom(2);
    hom.image[0] = lazy.pool_vertex(1);
    hom.image[1] = lazy.pool_vertex(1);
    CHECK_FALSE(validate_homomorphism(g, hom, lazy));
  }
}

TEST_CASE("surface colouring pipeline") {
  const PipelineOptions debug{true, false};
  SUBCASE("single arc") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    const PipelineResult r = colour_surface_graph(directed_path(2), 2, t, debug);
    CHECK(r.valid);
    CHECK(r.colours_used == 2);
    CHECK(r.core_size == 0);
    CHECK(r.reduction_steps == 2);
  }
  SUBCASE("toroidal grid") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    const PipelineResult r = colour_surface_graph(random_orientation(toroidal_grid(5, 5), 5), 2, t, debug);
    CHECK(r.valid);
    CHECK(r.core_structure_ok);
  }
  SUBCASE("K7 fits a genus-2 surface bound") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    const PipelineResult r = colour_surface_graph(random_orientation(complete_graph(7), 1), 2, t, debug);
    CHECK(r.valid);
    CHECK(r.colours_used == 7);
  }
  SUBCASE("genus below 2 is read as 2") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    const PipelineResult r = colour_surface_graph(random_orientation(complete_graph(7), 1), 1, t);
    CHECK(r.genus == 2);
    CHECK(r.valid);
  }
  SUBCASE("colour count is at least the oriented chromatic number") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(5));
      const OrientedGraph g = random_orientation(random_degenerate(n, 1 + trial % 4, rng.next()), rng.next());
      LazyTarget t = LazyTarget::for_genus(2, rng.next());
      const PipelineResult r = colour_surface_graph(g, 2, t, debug);
      CHECK(r.valid);
      CHECK(static_cast<int>(r.colours_used) >= *exact_oriented_chromatic(g).value);
    }
  }
  SUBCASE("psi classes on a larger core") {
    LazyTarget t = LazyTarget::for_genus(3, 4);
    const PipelineResult r = colour_surface_graph(random_orientation(toroidal_grid(9, 9, true), 4), 3, t, debug);
    CHECK(r.valid);
    CHECK(r.core_size == 81);
    CHECK(r.psi_palette > 0);
    CHECK(r.core_structure_ok);
  }
  SUBCASE("an explicit sampled target") {
    RestrictedTarget h(*sample_full(5, 2, 1).target, 3);
    const PipelineResult r = colour_surface_graph(directed_path(6), 2, h, debug);
    CHECK(r.valid);
  }
  SUBCASE("false genus assertions") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    // K14 leaves a core of degree 13 > 12g - 12.
    expect_code(ErrorCode::kGenusAssumptionViolated,
                [&] { colour_surface_graph(random_orientation(complete_graph(14), 1), 2, t); });
    // K13 passes the degree check but its stripped core is 11-degenerate.
    LazyTarget u = LazyTarget::for_genus(2, 1);
    expect_code(ErrorCode::kGenusAssumptionViolated,
                [&] { colour_surface_graph(random_orientation(complete_graph(13), 1), 2, u); });
  }
  SUBCASE("trace and JSON") {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    const PipelineResult r = colour_surface_graph(directed_path(3), 2, t, {false, true});
    CHECK_FALSE(r.trace.empty());
    const auto j = pipeline_result_to_json(r);
    CHECK(j.size() == 5);
    CHECK(j["valid"] == true);
    CHECK(j["colours_used"] == r.colours_used);
  }
  expect_code(ErrorCode::kDomainError, [] {
    LazyTarget t = LazyTarget::for_genus(2, 1);
    colour_surface_graph(directed_path(2), -1, t);
  });
}

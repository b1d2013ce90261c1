#pragma once

namespace orichrome {

// Every threshold the surface colouring argument uses, derived from the
// Euler genus bound g in one place.
struct SurfaceParams {
  int genus = 2;

  static constexpr int kVertexRuleMaxDegree = 3;
  static constexpr int kLowDegreeMin = 4;
  static constexpr int kLowDegreeMax = 5;
  static constexpr int kHighDegreeMin = 12;
  static constexpr int kCoreDegeneracy = 6;
  static constexpr int kFullArity = 10;

  int total_classes() const noexcept { return 144 * genus - 162; }
  int free_classes() const noexcept { return 138 * genus - 162; }
  int pool_classes() const noexcept { return 6 * genus; }
  // Vertices placed injectively into the reserved pool.
  int small_order() const noexcept { return 6 * genus; }
  // Prefix of the degeneracy order whose internal arcs are stripped.
  int stripped_prefix() const noexcept { return 6 * genus - 1; }
  int max_degree_bound() const noexcept { return 12 * genus - 12; }
  int dipath_palette_bound() const noexcept { return 138 * genus - 162; }
  // Sum of deg(v) - 6 over a graph embedded with Euler genus at most g.
  int charge_sum_bound() const noexcept { return 6 * genus - 12; }
};

}  // namespace orichrome

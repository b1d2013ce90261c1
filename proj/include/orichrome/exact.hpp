#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orichrome/graph.hpp"

namespace orichrome {

// Outcome of an exact solver. An empty `value` is the NoneFound marker: the
// search ran to completion under its cap without a solution.
struct SolveResult {
  std::optional<int> value;
  // Colour (0-based target vertex) per source vertex.
  std::vector<int> witness;
  // For oriented colourings, the tournament the witness maps into.
  OrientedGraph target;
  std::uint64_t nodes_explored = 0;

  bool found() const noexcept { return value.has_value(); }
};

inline constexpr int kMaxTournamentOrder = 7;
inline constexpr std::size_t kMaxOrientationEdges = 15;
inline constexpr int kMaxTwoDipathOrder = 20;

// Least k <= k_max such that g maps homomorphically to a tournament on k
// vertices. Any oriented target extends to a tournament, so searching the
// isomorphism classes of tournaments is exhaustive. Throws kCapExceeded if
// k_max > 7.
SolveResult exact_oriented_chromatic(const OrientedGraph& g, int k_max = kMaxTournamentOrder);

// Maximum over all 2^m orientations. Throws kCapExceeded if m > 15 or some
// orientation needs more than 7 colours.
SolveResult exact_oriented_chromatic_simple(const SimpleGraph& g);

// Chromatic number of the directed square by branch and bound. Throws
// kCapExceeded for n > 20.
SolveResult exact_two_dipath(const OrientedGraph& g);

enum class CliqueSearchMode { kExhaustive, kWitness };

struct CliqueSearchResult {
  // Arc count of the witness, or empty when nothing fits the budget.
  std::optional<int> arcs;
  OrientedGraph witness;
  std::uint64_t nodes_explored = 0;

  bool found() const noexcept { return arcs.has_value(); }
};

// Exhaustive mode (n <= 6) finds the minimum arc count f(n) of an oriented
// clique on n vertices, reporting NoneFound when f(n) > edge_budget. Witness
// mode (n <= 9) runs seeded greedy arc deletion from random tournaments and
// returns the first clique with at most edge_budget arcs.
CliqueSearchResult min_edge_oriented_clique(int n, int edge_budget, CliqueSearchMode mode = CliqueSearchMode::kExhaustive,
                                            std::uint64_t seed = 0);

// Every arc of g must map onto an arc of h with the same direction.
bool validate_homomorphism(const OrientedGraph& g, const OrientedGraph& h, std::span<const int> map);

// Proper colouring of the directed square (colours are arbitrary integers).
bool validate_two_dipath_colouring(const OrientedGraph& g, std::span<const int> colours);

}  // namespace orichrome

#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "orichrome/graph.hpp"

namespace orichrome {

// Colours are 1..palette_size, one per vertex.
struct DipathColouring {
  std::vector<int> colours;
  int palette_size = 0;

  // Relabels the colours in use to 1..k preserving their order.
  void compact();
  int distinct_colours() const;
};

// 2 d Delta - Delta - d^2 + d + 1.
long long greedy_palette_bound(int degeneracy, int max_degree);

// Colours vertices along `ord`, giving each the least colour unused by the
// already coloured vertices within undirected distance 2. This keeps the
// coloured neighbourhood of every uncoloured vertex rainbow, which is what
// makes the palette bound above hold for the ordering's back-degree.
DipathColouring greedy_two_dipath(const OrientedGraph& g, const VertexOrdering& ord);

// g minus every arc with both ends in `subset`.
OrientedGraph remove_internal_arcs(const OrientedGraph& g, std::span<const int> subset);

// Gives each vertex of `subset` (sorted) a fresh singleton colour after the
// inner palette. Throws kInvalidInner unless `inner` is a valid 2-dipath
// colouring of g minus the arcs inside `subset`.
DipathColouring stratified_two_dipath(const OrientedGraph& g, std::span<const int> subset, const DipathColouring& inner);

// Colouring of a graph of Euler genus at most g (asserted by the caller) and
// maximum degree at most 12g-12 with at most 138g-162 colours. Throws
// kPreconditionViolated when g < 2 or the degree bound fails, and
// kDegeneracyViolation when the stripped graph is not 6-degenerate along the
// ordering, which can only happen if the genus assertion is false.
DipathColouring surface_two_dipath(const OrientedGraph& g, int genus);
DipathColouring surface_two_dipath(const OrientedGraph& g, int genus, const VertexOrdering& ord);

nlohmann::json colouring_to_json(const DipathColouring& c);

}  // namespace orichrome

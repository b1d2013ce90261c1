#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orichrome/graph.hpp"

namespace orichrome {

// Oriented families.
OrientedGraph transitive_tournament(int n);
OrientedGraph random_tournament(int n, std::uint64_t seed);
OrientedGraph directed_cycle(int n);
OrientedGraph directed_path(int n);
OrientedGraph random_orientation(const SimpleGraph& g, std::uint64_t seed);

// Underlying simple graphs.
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph random_tree(int n, std::uint64_t seed);
SimpleGraph octahedron();
SimpleGraph icosahedron();
SimpleGraph complete_minus_perfect_matching(int n);
// C_rows x C_cols; with `triangulated` each square also gets its (i,j)-(i+1,j+1)
// diagonal, giving a 6-regular triangulation of the torus.
SimpleGraph toroidal_grid(int rows, int cols, bool triangulated = false);
// Stacked triangulation of the sphere followed by `flips` random edge flips.
SimpleGraph planar_triangulation(int n, int flips, std::uint64_t seed);
// Vertex i is joined to min(d, i) distinct uniformly chosen earlier vertices.
SimpleGraph random_degenerate(int n, int d, std::uint64_t seed);
// Keeps, for each vertex in a random order, at most d randomly chosen edges to
// earlier vertices of `host`: a d-degenerate spanning subgraph, so it embeds
// wherever the host does.
SimpleGraph random_degenerate_subgraph(const SimpleGraph& host, int d, std::uint64_t seed);

// Enumerates the 2^m orientations of a fixed simple graph, mask order.
class OrientationEnumerator {
 public:
  // Throws Error(kTooLarge) if 2^m exceeds `cap`.
  explicit OrientationEnumerator(SimpleGraph g, std::uint64_t cap = std::uint64_t{1} << 24);

  std::optional<OrientedGraph> next();
  std::uint64_t count() const noexcept { return total_; }

 private:
  SimpleGraph graph_;
  std::vector<Edge> edges_;
  std::uint64_t total_ = 0;
  std::uint64_t mask_ = 0;
};

// Enumerates all 3^C(n,2) labelled oriented graphs on n vertices (each pair:
// no arc, forward, backward) in base-3 counter order.
class OrientedGraphEnumerator {
 public:
  explicit OrientedGraphEnumerator(int n, std::uint64_t cap = std::uint64_t{1} << 24);

  std::optional<OrientedGraph> next();
  std::uint64_t count() const noexcept { return total_; }

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::vector<int> state_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

// Isomorphism classes of tournaments on n <= 7 vertices, one canonical
// representative each. Computed once per n and cached.
const std::vector<OrientedGraph>& nonisomorphic_tournaments(int n);

// Canonical code of a tournament on at most 8 vertices: the minimum of the
// upper-triangle arc bits over all relabellings that sort vertices by score.
std::uint64_t tournament_canonical_code(const OrientedGraph& t);

// String front-end used by the CLI: kind plus integer parameters.
OrientedGraph generate(const std::string& kind, const std::vector<int>& params, std::uint64_t seed);
std::vector<std::string> generator_kinds();

}  // namespace orichrome

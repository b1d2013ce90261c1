#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace orichrome {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph. Used for underlying graphs, directed squares and
// as the input of the orientation generators.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  // Adds {u,v}; loops are rejected, repeats are ignored. Returns true if added.
  bool add_edge(int u, int v);
  void remove_edge(int u, int v);

  const Bitset& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  int max_degree() const;
  bool is_complete() const;

  // Sorted with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> adj_;
  std::size_t edge_count_ = 0;
};

// Loopless digraph with at most one arc per unordered vertex pair. Arc queries
// are O(1) and neighbourhoods are bitset rows, one out-row and one in-row.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);

  // Throws Error(kInvariantViolation) on a loop, duplicate or anti-parallel arc.
  static OrientedGraph from_arcs(int n, std::span<const Arc> arcs);

  int order() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t size() const noexcept { return arc_count_; }

  bool has_arc(int from, int to) const { return out_[from].test(to); }
  bool adjacent(int u, int v) const { return out_[u].test(v) || in_[u].test(v); }
  // +1 if u->v, -1 if v->u, 0 if not adjacent.
  int sign(int u, int v) const;

  void add_arc(int from, int to);
  void remove_arc(int from, int to);
  // Removes whichever arc joins u and v, if any.
  void remove_edge(int u, int v);

  const Bitset& out(int v) const { return out_[v]; }
  const Bitset& in(int v) const { return in_[v]; }
  Bitset neighbours(int v) const { return out_[v] | in_[v]; }
  std::vector<int> neighbour_list(int v) const;

  int out_degree(int v) const { return static_cast<int>(out_[v].count()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].count()); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }
  int max_degree() const;
  int min_degree() const;

  // Lexicographically sorted.
  std::vector<Arc> arcs() const;
  SimpleGraph underlying() const;
  OrientedGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::vector<Bitset> out_;
  std::vector<Bitset> in_;
  std::size_t arc_count_ = 0;
};

// Entry i is +1 iff the arc joins the probe vertex to u_i in that direction.
struct OrientationVector {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  friend bool operator==(const OrientationVector&, const OrientationVector&) = default;
};

struct VertexOrdering {
  std::vector<int> order;
  int degeneracy = 0;

  // Back-degree of every vertex of `g` along `order`, indexed by position.
  static std::vector<int> back_degrees(const OrientedGraph& g, std::span<const int> order);
  static VertexOrdering from_order(const OrientedGraph& g, std::vector<int> order);
  bool is_valid_for(const OrientedGraph& g) const;
};

// Throws Error(kNonAdjacent) if some u_i is not adjacent to v, or v is in `us`.
OrientationVector orientation_vector(const OrientedGraph& g, std::span<const int> us, int v);

// Undirected graph joining u,w whenever a directed path of length 1 or 2
// runs between them in either direction.
SimpleGraph directed_square(const OrientedGraph& g);

// Weak directed diameter at most 2.
bool is_oriented_clique(const OrientedGraph& g);

// Repeatedly peels a minimum-degree vertex (lowest index on ties); the order
// lists the peeled vertices last-removed first, so v_i has minimum degree in
// the subgraph induced by v_1..v_i.
VertexOrdering degeneracy_ordering(const OrientedGraph& g);

}  // namespace orichrome

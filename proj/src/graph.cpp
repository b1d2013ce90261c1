#include "orichrome/graph.hpp"

#include <algorithm>
#include <string>

#include "orichrome/error.hpp"

namespace orichrome {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kInvariantViolation,
                "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool SimpleGraph::add_edge(int u, int v) {
  check_vertex(u, order());
  check_vertex(v, order());
  if (u == v) throw Error(ErrorCode::kInvariantViolation, "loop at " + std::to_string(u));
  if (adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
  return true;
}

void SimpleGraph::remove_edge(int u, int v) {
  if (!adj_[u].test(v)) return;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --edge_count_;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool SimpleGraph::is_complete() const {
  const auto n = static_cast<std::size_t>(order());
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(static_cast<std::size_t>(u)); v != Bitset::npos; v = adj_[u].find_next(v)) {
      result.push_back({u, static_cast<int>(v)});
    }
  }
  return result;
}

OrientedGraph::OrientedGraph(int n)
    : out_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))),
      in_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

OrientedGraph OrientedGraph::from_arcs(int n, std::span<const Arc> arcs) {
  if (n < 0) throw Error(ErrorCode::kInvariantViolation, "negative vertex count");
  OrientedGraph g(n);
  for (const Arc& a : arcs) g.add_arc(a.from, a.to);
  return g;
}

int OrientedGraph::sign(int u, int v) const {
  if (out_[u].test(v)) return 1;
  if (in_[u].test(v)) return -1;
  return 0;
}

void OrientedGraph::add_arc(int from, int to) {
  check_vertex(from, order());
  check_vertex(to, order());
  if (from == to) throw Error(ErrorCode::kInvariantViolation, "loop at " + std::to_string(from));
  if (out_[from].test(to)) {
    throw Error(ErrorCode::kInvariantViolation,
                "duplicate arc " + std::to_string(from) + "->" + std::to_string(to));
  }
  if (in_[from].test(to)) {
    throw Error(ErrorCode::kInvariantViolation,
                "anti-parallel arc " + std::to_string(from) + "->" + std::to_string(to));
  }
  out_[from].set(to);
  in_[to].set(from);
  ++arc_count_;
}

void OrientedGraph::remove_arc(int from, int to) {
  if (!out_[from].test(to)) return;
  out_[from].reset(to);
  in_[to].reset(from);
  --arc_count_;
}

void OrientedGraph::remove_edge(int u, int v) {
  remove_arc(u, v);
  remove_arc(v, u);
}

std::vector<int> OrientedGraph::neighbour_list(int v) const {
  std::vector<int> result;
  const Bitset nb = neighbours(v);
  for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u)) result.push_back(static_cast<int>(u));
  return result;
}

int OrientedGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

int OrientedGraph::min_degree() const {
  if (order() == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (int u = 0; u < order(); ++u) {
    for (auto v = out_[u].find_first(); v != Bitset::npos; v = out_[u].find_next(v)) {
      result.push_back({u, static_cast<int>(v)});
    }
  }
  return result;
}

SimpleGraph OrientedGraph::underlying() const {
  SimpleGraph g(order());
  for (const Arc& a : arcs()) g.add_edge(a.from, a.to);
  return g;
}

OrientedGraph OrientedGraph::induced(std::span<const int> vertices) const {
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  OrientedGraph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Bitset& row = out_[vertices[i]];
    for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w)) {
      if (index[w] >= 0) sub.add_arc(static_cast<int>(i), index[w]);
    }
  }
  return sub;
}

std::vector<int> VertexOrdering::back_degrees(const OrientedGraph& g, std::span<const int> order) {
  Bitset seen(static_cast<std::size_t>(g.order()));
  std::vector<int> result;
  result.reserve(order.size());
  for (int v : order) {
    result.push_back(static_cast<int>((g.neighbours(v) & seen).count()));
    seen.set(v);
  }
  return result;
}

VertexOrdering VertexOrdering::from_order(const OrientedGraph& g, std::vector<int> order) {
  const auto backs = back_degrees(g, order);
  const int d = backs.empty() ? 0 : *std::max_element(backs.begin(), backs.end());
  return {std::move(order), d};
}

bool VertexOrdering::is_valid_for(const OrientedGraph& g) const {
  if (order.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.order(); ++i) {
    if (sorted[i] != i) return false;
  }
  const auto backs = back_degrees(g, order);
  return std::all_of(backs.begin(), backs.end(), [&](int b) { return b <= degeneracy; });
}

OrientationVector orientation_vector(const OrientedGraph& g, std::span<const int> us, int v) {
  OrientationVector result;
  result.entries.reserve(us.size());
  for (int u : us) {
    const int s = (u == v) ? 0 : g.sign(v, u);
    if (s == 0) {
      throw Error(ErrorCode::kNonAdjacent,
                  "vertex " + std::to_string(u) + " is not adjacent to " + std::to_string(v));
    }
    result.entries.push_back(s);
  }
  return result;
}

SimpleGraph directed_square(const OrientedGraph& g) {
  SimpleGraph sq(g.order());
  for (int u = 0; u < g.order(); ++u) {
    Bitset reach = g.out(u);
    const Bitset& first = g.out(u);
    for (auto w = first.find_first(); w != Bitset::npos; w = first.find_next(w)) reach |= g.out(static_cast<int>(w));
    reach.reset(static_cast<std::size_t>(u));
    for (auto w = reach.find_first(); w != Bitset::npos; w = reach.find_next(w)) sq.add_edge(u, static_cast<int>(w));
  }
  return sq;
}

bool is_oriented_clique(const OrientedGraph& g) { return directed_square(g).is_complete(); }

VertexOrdering degeneracy_ordering(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> removal;
  removal.reserve(static_cast<std::size_t>(n));
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    degeneracy = std::max(degeneracy, degree[best]);
    removed[best] = true;
    removal.push_back(best);
    const Bitset nb = g.neighbours(best);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (!removed[w]) --degree[w];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return {std::move(removal), degeneracy};
}

}  // namespace orichrome

#include "orichrome/dipath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/surface_params.hpp"

namespace orichrome {

void DipathColouring::compact() {
  std::set<int> used(colours.begin(), colours.end());
  std::map<int, int> relabel;
  int next = 1;
  for (int c : used) relabel[c] = next++;
  for (int& c : colours) c = relabel[c];
  palette_size = static_cast<int>(used.size());
}

int DipathColouring::distinct_colours() const {
  return static_cast<int>(std::set<int>(colours.begin(), colours.end()).size());
}

long long greedy_palette_bound(int degeneracy, int max_degree) {
  const long long d = degeneracy;
  const long long delta = max_degree;
  return 2 * d * delta - delta - d * d + d + 1;
}

DipathColouring greedy_two_dipath(const OrientedGraph& g, const VertexOrdering& ord) {
  if (!ord.is_valid_for(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "ordering is not a permutation with the stated degeneracy");
  }
  const int n = g.order();
  DipathColouring result;
  result.colours.assign(static_cast<std::size_t>(n), 0);
  Bitset coloured(static_cast<std::size_t>(n));
  std::vector<char> taken;
  for (int v : ord.order) {
    const Bitset first = g.neighbours(v);
    Bitset ball = first;
    for (auto w = first.find_first(); w != Bitset::npos; w = first.find_next(w)) ball |= g.neighbours(static_cast<int>(w));
    ball.reset(static_cast<std::size_t>(v));
    ball &= coloured;
    taken.assign(ball.count() + 2, 0);
    for (auto w = ball.find_first(); w != Bitset::npos; w = ball.find_next(w)) {
      const auto c = static_cast<std::size_t>(result.colours[w]);
      if (c < taken.size()) taken[c] = 1;
    }
    int colour = 1;
    while (taken[static_cast<std::size_t>(colour)] != 0) ++colour;
    result.colours[v] = colour;
    result.palette_size = std::max(result.palette_size, colour);
    coloured.set(static_cast<std::size_t>(v));
  }
  if (n > 0 && result.palette_size > greedy_palette_bound(ord.degeneracy, g.max_degree())) {
    throw std::logic_error("greedy 2-dipath colouring exceeded 2d*Delta - Delta - d^2 + d + 1");
  }
  return result;
}

OrientedGraph remove_internal_arcs(const OrientedGraph& g, std::span<const int> subset) {
  Bitset inside(static_cast<std::size_t>(g.order()));
  for (int v : subset) inside.set(static_cast<std::size_t>(v));
  OrientedGraph result(g.order());
  for (const Arc& a : g.arcs()) {
    if (!(inside.test(a.from) && inside.test(a.to))) result.add_arc(a.from, a.to);
  }
  return result;
}

DipathColouring stratified_two_dipath(const OrientedGraph& g, std::span<const int> subset, const DipathColouring& inner) {
  const OrientedGraph stripped = remove_internal_arcs(g, subset);
  if (!validate_two_dipath_colouring(stripped, inner.colours)) {
    throw Error(ErrorCode::kInvalidInner, "inner colouring is not a 2-dipath colouring of G - E(G[U])");
  }
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  DipathColouring result = inner;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    result.colours[sorted[i]] = inner.palette_size + 1 + static_cast<int>(i);
  }
  result.palette_size = inner.palette_size + static_cast<int>(sorted.size());
  return result;
}

DipathColouring surface_two_dipath(const OrientedGraph& g, int genus) {
  return surface_two_dipath(g, genus, degeneracy_ordering(g));
}

DipathColouring surface_two_dipath(const OrientedGraph& g, int genus, const VertexOrdering& ord) {
  const SurfaceParams params{genus};
  if (genus < 2) throw Error(ErrorCode::kPreconditionViolated, "surface colouring needs g >= 2");
  if (g.max_degree() > params.max_degree_bound()) {
    throw Error(ErrorCode::kPreconditionViolated, "maximum degree " + std::to_string(g.max_degree()) +
                                                      " exceeds 12g-12 = " + std::to_string(params.max_degree_bound()));
  }
  const auto prefix = std::min<std::size_t>(static_cast<std::size_t>(params.stripped_prefix()), ord.order.size());
  const std::span<const int> stripped_set(ord.order.data(), prefix);
  const OrientedGraph stripped = remove_internal_arcs(g, stripped_set);
  VertexOrdering inner_order = VertexOrdering::from_order(stripped, ord.order);
  if (inner_order.degeneracy > SurfaceParams::kCoreDegeneracy) {
    throw Error(ErrorCode::kDegeneracyViolation,
                "stripped graph has back-degree " + std::to_string(inner_order.degeneracy) + " > 6");
  }
  const DipathColouring inner = greedy_two_dipath(stripped, inner_order);
  DipathColouring result = stratified_two_dipath(g, stripped_set, inner);
  result.compact();
  if (result.palette_size > params.dipath_palette_bound()) {
    throw std::logic_error("surface 2-dipath colouring exceeded 138g-162 colours");
  }
  return result;
}

nlohmann::json colouring_to_json(const DipathColouring& c) {
  nlohmann::json colours = nlohmann::json::object();
  for (std::size_t v = 0; v < c.colours.size(); ++v) colours[std::to_string(v)] = c.colours[v];
  return {{"palette", c.palette_size}, {"colours", std::move(colours)}};
}

}  // namespace orichrome

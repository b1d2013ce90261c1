#include "orichrome/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "orichrome/error.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/rng.hpp"

namespace orichrome {

namespace {

// Source vertices by decreasing degree, lowest index first on ties; each
// vertex carries its already-placed neighbours as (position, sign).
struct SearchPlan {
  std::vector<int> order;
  std::vector<std::vector<std::pair<int, int>>> back;
};

SearchPlan make_plan(const OrientedGraph& g) {
  SearchPlan plan;
  plan.order.resize(static_cast<std::size_t>(g.order()));
  std::iota(plan.order.begin(), plan.order.end(), 0);
  std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> position(plan.order.size());
  for (std::size_t p = 0; p < plan.order.size(); ++p) position[plan.order[p]] = static_cast<int>(p);
  plan.back.resize(plan.order.size());
  for (std::size_t p = 0; p < plan.order.size(); ++p) {
    const int v = plan.order[p];
    for (int u : g.neighbour_list(v)) {
      if (position[u] < static_cast<int>(p)) plan.back[p].emplace_back(position[u], g.sign(v, u));
    }
  }
  return plan;
}

bool map_into_tournament(const SearchPlan& plan, const std::array<std::uint8_t, 8>& out, int k,
                         std::vector<int>& assignment, std::size_t p, std::uint64_t& nodes) {
  if (p == plan.order.size()) return true;
  for (int c = 0; c < k; ++c) {
    ++nodes;
    bool ok = true;
    for (const auto& [q, s] : plan.back[p]) {
      const int a = assignment[q];
      const bool arc = s > 0 ? ((out[c] >> a) & 1U) : ((out[a] >> c) & 1U);
      if (!arc) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assignment[p] = c;
    if (map_into_tournament(plan, out, k, assignment, p + 1, nodes)) return true;
  }
  return false;
}

// Directed distances from `source` by BFS along out-arcs; -1 if unreachable.
std::vector<int> bfs_distances(const OrientedGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (auto w = g.out(u).find_first(); w != Bitset::npos; w = g.out(u).find_next(w)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(static_cast<int>(w));
      }
    }
  }
  return dist;
}

using Mask = std::uint32_t;

struct SquareSearch {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<int> colour;
  std::uint64_t nodes = 0;

  int max_clique() {
    int best = 0;
    auto expand = [&](auto&& self, Mask candidates, int size) -> void {
      if (candidates == 0) {
        best = std::max(best, size);
        return;
      }
      if (size + std::popcount(candidates) <= best) return;
      while (candidates != 0) {
        if (size + std::popcount(candidates) <= best) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        ++nodes;
        self(self, candidates & adj[v], size + 1);
      }
    };
    expand(expand, n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1, 0);
    return best;
  }

  int saturation(int v) const {
    Mask seen = 0;
    for (int u = 0; u < n; ++u) {
      if (colour[u] >= 0 && ((adj[v] >> u) & 1U)) seen |= Mask{1} << colour[u];
    }
    return std::popcount(seen);
  }

  int pick_vertex() const {
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      const int sat = saturation(v);
      if (sat > best_sat || (sat == best_sat && std::popcount(adj[v]) > std::popcount(adj[best]))) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  }

  // DSATUR greedy; returns the number of colours used.
  int greedy() {
    colour.assign(static_cast<std::size_t>(n), -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
      const int v = pick_vertex();
      Mask taken = 0;
      for (int u = 0; u < n; ++u) {
        if (colour[u] >= 0 && ((adj[v] >> u) & 1U)) taken |= Mask{1} << colour[u];
      }
      const int c = std::countr_one(taken);
      colour[v] = c;
      used = std::max(used, c + 1);
    }
    return used;
  }

  bool colourable(int k, int coloured, int used) {
    if (coloured == n) return true;
    const int v = pick_vertex();
    Mask taken = 0;
    for (int u = 0; u < n; ++u) {
      if (colour[u] >= 0 && ((adj[v] >> u) & 1U)) taken |= Mask{1} << colour[u];
    }
    // A fresh colour is interchangeable with any other fresh colour.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((taken >> c) & 1U) continue;
      ++nodes;
      colour[v] = c;
      if (colourable(k, coloured + 1, std::max(used, c + 1))) return true;
      colour[v] = -1;
    }
    return false;
  }
};

// Oriented cliques on at most 16 vertices as out-neighbour masks.
bool small_is_clique(int n, const std::array<std::uint16_t, 16>& out) {
  std::array<std::uint16_t, 16> cover{};
  for (int u = 0; u < n; ++u) {
    std::uint16_t reach = out[u];
    for (std::uint16_t w = out[u]; w != 0; w &= static_cast<std::uint16_t>(w - 1)) reach |= out[std::countr_zero(w)];
    cover[u] |= reach;
    for (std::uint16_t w = reach; w != 0; w &= static_cast<std::uint16_t>(w - 1)) {
      cover[std::countr_zero(w)] |= static_cast<std::uint16_t>(1U << u);
    }
  }
  const auto full = static_cast<std::uint16_t>((1U << n) - 1);
  for (int u = 0; u < n; ++u) {
    if ((cover[u] | (1U << u)) != full) return false;
  }
  return true;
}

OrientedGraph graph_from_masks(int n, const std::array<std::uint16_t, 16>& out) {
  OrientedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((out[u] >> v) & 1U) g.add_arc(u, v);
    }
  }
  return g;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

CliqueSearchResult exhaustive_pair_states(int n, int budget) {
  const auto pairs = all_pairs(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  CliqueSearchResult result;
  std::array<std::uint16_t, 16> best_out{};
  for (std::uint64_t code = 0; code < total; ++code) {
    ++result.nodes_explored;
    std::array<std::uint16_t, 16> out{};
    int arcs = 0;
    std::uint64_t rest = code;
    for (const Edge& e : pairs) {
      const auto state = rest % 3;
      rest /= 3;
      if (state == 1) out[e.u] |= static_cast<std::uint16_t>(1U << e.v);
      if (state == 2) out[e.v] |= static_cast<std::uint16_t>(1U << e.u);
      arcs += state != 0 ? 1 : 0;
    }
    if (arcs > budget || (result.arcs && arcs >= *result.arcs)) continue;
    if (small_is_clique(n, out)) {
      result.arcs = arcs;
      best_out = out;
    }
  }
  if (result.arcs) result.witness = graph_from_masks(n, best_out);
  return result;
}

// Underlying graphs by ascending edge count, each with all its orientations.
CliqueSearchResult exhaustive_by_edge_count(int n, int budget) {
  const auto pairs = all_pairs(n);
  const int p = static_cast<int>(pairs.size());
  CliqueSearchResult result;
  std::array<std::uint16_t, 16> adj{};
  for (int m = 0; m <= std::min(budget, p); ++m) {
    const std::uint32_t limit = std::uint32_t{1} << p;
    std::uint32_t subset = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;
    while (subset < limit) {
      adj.fill(0);
      std::vector<Edge> chosen;
      for (int i = 0; i < p; ++i) {
        if ((subset >> i) & 1U) {
          chosen.push_back(pairs[i]);
          adj[pairs[i].u] |= static_cast<std::uint16_t>(1U << pairs[i].v);
          adj[pairs[i].v] |= static_cast<std::uint16_t>(1U << pairs[i].u);
        }
      }
      // An oriented clique has undirected diameter at most 2.
      bool diameter_ok = true;
      for (int u = 0; u < n && diameter_ok; ++u) {
        std::uint16_t reach = adj[u];
        for (std::uint16_t w = adj[u]; w != 0; w &= static_cast<std::uint16_t>(w - 1)) reach |= adj[std::countr_zero(w)];
        diameter_ok = (reach | (1U << u)) == (1U << n) - 1;
      }
      if (diameter_ok) {
        for (std::uint32_t orient = 0; orient < (std::uint32_t{1} << m); ++orient) {
          ++result.nodes_explored;
          std::array<std::uint16_t, 16> out{};
          for (int i = 0; i < m; ++i) {
            const Edge& e = chosen[i];
            if ((orient >> i) & 1U) {
              out[e.v] |= static_cast<std::uint16_t>(1U << e.u);
            } else {
              out[e.u] |= static_cast<std::uint16_t>(1U << e.v);
            }
          }
          if (small_is_clique(n, out)) {
            result.arcs = m;
            result.witness = graph_from_masks(n, out);
            return result;
          }
        }
      }
      if (m == 0) break;
      // Next subset with the same popcount.
      const std::uint32_t low = subset & (~subset + 1);
      const std::uint32_t ripple = subset + low;
      subset = ripple | (((ripple ^ subset) >> 2) / low);
    }
  }
  return result;
}

}  // namespace

SolveResult exact_oriented_chromatic(const OrientedGraph& g, int k_max) {
  if (k_max > kMaxTournamentOrder) {
    throw Error(ErrorCode::kCapExceeded, "k_max " + std::to_string(k_max) + " exceeds tournament cap 7");
  }
  SolveResult result;
  if (g.order() == 0) {
    result.value = 0;
    return result;
  }
  const SearchPlan plan = make_plan(g);
  std::vector<int> assignment(plan.order.size(), -1);
  for (int k = 1; k <= k_max; ++k) {
    for (const OrientedGraph& t : nonisomorphic_tournaments(k)) {
      std::array<std::uint8_t, 8> out{};
      for (const Arc& a : t.arcs()) out[a.from] |= static_cast<std::uint8_t>(1U << a.to);
      if (map_into_tournament(plan, out, k, assignment, 0, result.nodes_explored)) {
        result.value = k;
        result.target = t;
        result.witness.assign(plan.order.size(), 0);
        for (std::size_t p = 0; p < plan.order.size(); ++p) result.witness[plan.order[p]] = assignment[p];
        return result;
      }
    }
  }
  return result;
}

SolveResult exact_oriented_chromatic_simple(const SimpleGraph& g) {
  if (g.size() > kMaxOrientationEdges) {
    throw Error(ErrorCode::kCapExceeded, "orientation enumeration supports at most 15 edges");
  }
  SolveResult best;
  best.value = g.order() == 0 ? 0 : 1;
  OrientationEnumerator orientations(g);
  bool first = true;
  while (auto h = orientations.next()) {
    SolveResult r = exact_oriented_chromatic(*h);
    if (!r.found()) throw Error(ErrorCode::kCapExceeded, "an orientation needs more than 7 colours");
    best.nodes_explored += r.nodes_explored;
    if (first || *r.value > *best.value) {
      const auto nodes = best.nodes_explored;
      best = std::move(r);
      best.nodes_explored = nodes;
      first = false;
    }
  }
  return best;
}

SolveResult exact_two_dipath(const OrientedGraph& g) {
  if (g.order() > kMaxTwoDipathOrder) {
    throw Error(ErrorCode::kCapExceeded, "two-dipath branch and bound supports n <= 20");
  }
  SquareSearch search;
  search.n = g.order();
  search.adj.assign(static_cast<std::size_t>(search.n), 0);
  const SimpleGraph square = directed_square(g);
  for (const Edge& e : square.edges()) {
    search.adj[e.u] |= Mask{1} << e.v;
    search.adj[e.v] |= Mask{1} << e.u;
  }
  SolveResult result;
  if (search.n == 0) {
    result.value = 0;
    return result;
  }
  const int lower = search.max_clique();
  int upper = search.greedy();
  std::vector<int> best = search.colour;
  for (int k = lower; k < upper; ++k) {
    search.colour.assign(static_cast<std::size_t>(search.n), -1);
    if (search.colourable(k, 0, 0)) {
      upper = k;
      best = search.colour;
      break;
    }
  }
  result.value = upper;
  result.witness = std::move(best);
  result.nodes_explored = search.nodes;
  return result;
}

CliqueSearchResult min_edge_oriented_clique(int n, int edge_budget, CliqueSearchMode mode, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::kDomainError, "negative order");
  if (mode == CliqueSearchMode::kExhaustive) {
    if (n > 6) throw Error(ErrorCode::kCapExceeded, "exhaustive clique search supports n <= 6");
    return n <= 4 ? exhaustive_pair_states(n, edge_budget) : exhaustive_by_edge_count(n, edge_budget);
  }
  if (n > 9) throw Error(ErrorCode::kCapExceeded, "witness clique search supports n <= 9");
  CliqueSearchResult result;
  constexpr int kTrials = 4096;
  const auto pairs = all_pairs(n);
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(trial));
    std::array<std::uint16_t, 16> out{};
    for (const Edge& e : pairs) {
      if (rng.coin()) {
        out[e.u] |= static_cast<std::uint16_t>(1U << e.v);
      } else {
        out[e.v] |= static_cast<std::uint16_t>(1U << e.u);
      }
    }
    ++result.nodes_explored;
    if (!small_is_clique(n, out)) continue;
    std::vector<Edge> order = pairs;
    rng.shuffle(order);
    int arcs = static_cast<int>(pairs.size());
    for (const Edge& e : order) {
      const auto saved_u = out[e.u];
      const auto saved_v = out[e.v];
      out[e.u] &= static_cast<std::uint16_t>(~(1U << e.v));
      out[e.v] &= static_cast<std::uint16_t>(~(1U << e.u));
      ++result.nodes_explored;
      if (small_is_clique(n, out)) {
        --arcs;
      } else {
        out[e.u] = saved_u;
        out[e.v] = saved_v;
      }
    }
    if (arcs <= edge_budget) {
      result.arcs = arcs;
      result.witness = graph_from_masks(n, out);
      return result;
    }
  }
  return result;
}

bool validate_homomorphism(const OrientedGraph& g, const OrientedGraph& h, std::span<const int> map) {
  if (map.size() != static_cast<std::size_t>(g.order())) return false;
  for (int image : map) {
    if (image < 0 || image >= h.order()) return false;
  }
  for (const Arc& a : g.arcs()) {
    if (!h.has_arc(map[a.from], map[a.to])) return false;
  }
  return true;
}

bool validate_two_dipath_colouring(const OrientedGraph& g, std::span<const int> colours) {
  if (colours.size() != static_cast<std::size_t>(g.order())) return false;
  for (int u = 0; u < g.order(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (int w = 0; w < g.order(); ++w) {
      if (w != u && dist[w] >= 1 && dist[w] <= 2 && colours[u] == colours[w]) return false;
    }
  }
  return true;
}

}  // namespace orichrome

#include "orichrome/generate.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>

#include "orichrome/error.hpp"
#include "orichrome/fixtures.hpp"
#include "orichrome/rng.hpp"

namespace orichrome {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kDomainError, what);
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > cap / base) {
      throw Error(ErrorCode::kTooLarge, "enumeration size exceeds cap " + std::to_string(cap));
    }
    result *= base;
  }
  if (result > cap) throw Error(ErrorCode::kTooLarge, "enumeration size exceeds cap " + std::to_string(cap));
  return result;
}

}  // namespace

OrientedGraph transitive_tournament(int n) {
  OrientedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v);
  }
  return g;
}

OrientedGraph random_tournament(int n, std::uint64_t seed) { return random_orientation(complete_graph(n), seed); }

OrientedGraph directed_cycle(int n) {
  OrientedGraph g(n);
  if (n >= 3) {
    for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  } else if (n == 2) {
    g.add_arc(0, 1);
  }
  return g;
}

OrientedGraph directed_path(int n) {
  OrientedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
  return g;
}

OrientedGraph random_orientation(const SimpleGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  OrientedGraph result(g.order());
  for (const Edge& e : g.edges()) {
    if (rng.coin()) {
      result.add_arc(e.u, e.v);
    } else {
      result.add_arc(e.v, e.u);
    }
  }
  return result;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph random_tree(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  return g;
}

SimpleGraph octahedron() {
  SimpleGraph g(6);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 1 || u % 2 == 1) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph icosahedron() {
  SimpleGraph g(12);
  for (int i = 1; i <= 5; ++i) {
    const int next = i % 5 + 1;
    g.add_edge(0, i);
    g.add_edge(i, next);
    g.add_edge(i + 5, next + 5);
    g.add_edge(i, i + 5);
    g.add_edge(i, next + 5);
    g.add_edge(11, i + 5);
  }
  return g;
}

SimpleGraph complete_minus_perfect_matching(int n) {
  require(n % 2 == 0, "complete_minus_perfect_matching needs an even order");
  SimpleGraph g = complete_graph(n);
  for (int i = 0; i + 1 < n; i += 2) g.remove_edge(i, i + 1);
  return g;
}

SimpleGraph toroidal_grid(int rows, int cols, bool triangulated) {
  require(rows >= 3 && cols >= 3, "toroidal grid needs at least 3 rows and 3 columns");
  SimpleGraph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      g.add_edge(id(r, c), id(r, (c + 1) % cols));
      g.add_edge(id(r, c), id((r + 1) % rows, c));
      if (triangulated) g.add_edge(id(r, c), id((r + 1) % rows, (c + 1) % cols));
    }
  }
  return g;
}

SimpleGraph planar_triangulation(int n, int flips, std::uint64_t seed) {
  require(n >= 3, "planar triangulation needs at least 3 vertices");
  SplitMix64 rng(seed);
  SimpleGraph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    const auto f = static_cast<std::size_t>(rng.below(faces.size()));
    const auto [a, b, c] = faces[f];
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  for (int attempt = 0; attempt < flips; ++attempt) {
    const auto f1 = static_cast<std::size_t>(rng.below(faces.size()));
    const auto side = static_cast<int>(rng.below(3));
    const int u = faces[f1][side];
    const int v = faces[f1][(side + 1) % 3];
    const int x = faces[f1][(side + 2) % 3];
    std::size_t f2 = faces.size();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (f == f1) continue;
      const auto& face = faces[f];
      const bool has_u = std::find(face.begin(), face.end(), u) != face.end();
      const bool has_v = std::find(face.begin(), face.end(), v) != face.end();
      if (has_u && has_v) {
        f2 = f;
        break;
      }
    }
    if (f2 == faces.size()) continue;
    int y = -1;
    for (int w : faces[f2]) {
      if (w != u && w != v) y = w;
    }
    if (y < 0 || y == x || g.has_edge(x, y) || g.degree(u) <= 3 || g.degree(v) <= 3) continue;
    g.remove_edge(u, v);
    g.add_edge(x, y);
    faces[f1] = {u, x, y};
    faces[f2] = {v, x, y};
  }
  return g;
}

SimpleGraph random_degenerate(int n, int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SimpleGraph g(n);
  std::vector<int> earlier;
  for (int v = 1; v < n; ++v) {
    earlier.resize(static_cast<std::size_t>(v));
    std::iota(earlier.begin(), earlier.end(), 0);
    const int picks = std::min(d, v);
    for (int i = 0; i < picks; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(v - i)));
      std::swap(earlier[i], earlier[j]);
      g.add_edge(v, earlier[i]);
    }
  }
  return g;
}

SimpleGraph random_degenerate_subgraph(const SimpleGraph& host, int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = host.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  SimpleGraph g(n);
  std::vector<int> earlier;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    earlier.clear();
    const Bitset& nb = host.neighbours(v);
    for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u)) {
      if (position[u] < i) earlier.push_back(static_cast<int>(u));
    }
    rng.shuffle(earlier);
    for (std::size_t j = 0; j < earlier.size() && j < static_cast<std::size_t>(d); ++j) g.add_edge(v, earlier[j]);
  }
  return g;
}

OrientationEnumerator::OrientationEnumerator(SimpleGraph g, std::uint64_t cap)
    : graph_(std::move(g)), edges_(graph_.edges()) {
  total_ = checked_pow(2, edges_.size(), cap);
}

std::optional<OrientedGraph> OrientationEnumerator::next() {
  if (mask_ >= total_) return std::nullopt;
  OrientedGraph result(graph_.order());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((mask_ >> i) & 1U) {
      result.add_arc(edges_[i].v, edges_[i].u);
    } else {
      result.add_arc(edges_[i].u, edges_[i].v);
    }
  }
  ++mask_;
  return result;
}

OrientedGraphEnumerator::OrientedGraphEnumerator(int n, std::uint64_t cap) : n_(n) {
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs_.push_back({u, v});
  }
  state_.assign(pairs_.size(), 0);
  total_ = checked_pow(3, pairs_.size(), cap);
}

std::optional<OrientedGraph> OrientedGraphEnumerator::next() {
  if (emitted_ >= total_) return std::nullopt;
  OrientedGraph result(n_);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (state_[i] == 1) result.add_arc(pairs_[i].u, pairs_[i].v);
    if (state_[i] == 2) result.add_arc(pairs_[i].v, pairs_[i].u);
  }
  ++emitted_;
  for (std::size_t i = 0; i < state_.size(); ++i) {
    if (++state_[i] < 3) break;
    state_[i] = 0;
  }
  return result;
}

std::uint64_t tournament_canonical_code(const OrientedGraph& t) {
  const int n = t.order();
  require(n <= 8, "canonical code supports at most 8 vertices");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  std::stable_sort(labels.begin(), labels.end(),
                   [&](int a, int b) { return t.out_degree(a) < t.out_degree(b); });
  // Permute only inside runs of equal score; labels[i] is the old vertex
  // placed at new position i.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && t.out_degree(labels[j]) == t.out_degree(labels[i])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) code = (code << 1) | (t.has_arc(labels[a], labels[b]) ? 1U : 0U);
    }
    best = std::min(best, code);
  };
  auto recurse = [&](auto&& self, std::size_t run) -> void {
    if (run == runs.size()) {
      encode();
      return;
    }
    auto first = labels.begin() + static_cast<std::ptrdiff_t>(runs[run].first);
    auto last = labels.begin() + static_cast<std::ptrdiff_t>(runs[run].second);
    std::sort(first, last);
    do {
      self(self, run + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

namespace {

OrientedGraph decode_tournament(int n, std::uint64_t code) {
  OrientedGraph t(n);
  int bit = n * (n - 1) / 2;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      --bit;
      if ((code >> bit) & 1U) {
        t.add_arc(a, b);
      } else {
        t.add_arc(b, a);
      }
    }
  }
  return t;
}

}  // namespace

const std::vector<OrientedGraph>& nonisomorphic_tournaments(int n) {
  if (n < 0 || n > 7) throw Error(ErrorCode::kCapExceeded, "tournament enumeration supports n <= 7");
  static std::mutex mutex;
  static std::vector<std::vector<OrientedGraph>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) {
    cache.emplace_back(1, OrientedGraph(0));
    cache.emplace_back(1, OrientedGraph(1));
  }
  // Each order grows from the classes one vertex smaller by every
  // out-neighbourhood of a new vertex.
  for (int size = static_cast<int>(cache.size()); size <= n; ++size) {
    std::set<std::uint64_t> codes;
    for (const OrientedGraph& base : cache[size - 1]) {
      const auto base_arcs = base.arcs();
      for (std::uint32_t mask = 0; mask < (1U << (size - 1)); ++mask) {
        OrientedGraph t = OrientedGraph::from_arcs(size, base_arcs);
        for (int v = 0; v < size - 1; ++v) {
          if ((mask >> v) & 1U) {
            t.add_arc(size - 1, v);
          } else {
            t.add_arc(v, size - 1);
          }
        }
        codes.insert(tournament_canonical_code(t));
      }
    }
    std::vector<OrientedGraph> classes;
    for (std::uint64_t code : codes) classes.push_back(decode_tournament(size, code));
    cache.push_back(std::move(classes));
  }
  return cache[n];
}

std::vector<std::string> generator_kinds() {
  return {"transitive-tournament", "complete-tournament", "directed-cycle", "directed-path",
          "toroidal-grid",         "toroidal-triangulation", "planar-triangulation", "random-degenerate",
          "random-tree",           "complete",             "octahedron",     "icosahedron",
          "complete-minus-matching", "figure1"};
}

OrientedGraph generate(const std::string& kind, const std::vector<int>& params, std::uint64_t seed) {
  auto param = [&](std::size_t i, int fallback) { return i < params.size() ? params[i] : fallback; };
  auto need = [&](std::size_t count) {
    require(params.size() >= count, "generator '" + kind + "' needs " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "transitive-tournament") return need(1), transitive_tournament(params[0]);
  if (kind == "complete-tournament") return need(1), random_tournament(params[0], seed);
  if (kind == "directed-cycle") return need(1), directed_cycle(params[0]);
  if (kind == "directed-path") return need(1), directed_path(params[0]);
  if (kind == "toroidal-grid") return need(2), random_orientation(toroidal_grid(params[0], params[1]), seed);
  if (kind == "toroidal-triangulation") {
    return need(2), random_orientation(toroidal_grid(params[0], params[1], true), seed);
  }
  if (kind == "planar-triangulation") {
    need(1);
    return random_orientation(planar_triangulation(params[0], param(1, 2 * params[0]), seed), seed + 1);
  }
  if (kind == "random-degenerate") {
    need(1);
    return random_orientation(random_degenerate(params[0], param(1, 3), seed), seed + 1);
  }
  if (kind == "random-tree") return need(1), random_orientation(random_tree(params[0], seed), seed + 1);
  if (kind == "complete") return need(1), random_orientation(complete_graph(params[0]), seed);
  if (kind == "octahedron") return random_orientation(octahedron(), seed);
  if (kind == "icosahedron") return random_orientation(icosahedron(), seed);
  if (kind == "complete-minus-matching") return need(1), random_orientation(complete_minus_perfect_matching(params[0]), seed);
  if (kind == "figure1") return figure1_graph();
  throw Error(ErrorCode::kDomainError, "unknown generator kind '" + kind + "'");
}

}  // namespace orichrome

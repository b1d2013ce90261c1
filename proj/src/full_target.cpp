#include "orichrome/full_target.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "orichrome/error.hpp"
#include "orichrome/rng.hpp"

namespace orichrome {

struct FullTargetAccess {
  static void set_certified(FullTarget& t, bool value) { t.certified_ = value; }
};

FullTarget::FullTarget(int classes, int arity, int class_size, OrientedGraph graph, std::uint64_t seed)
    : classes_(classes), arity_(arity), class_size_(class_size), seed_(seed), graph_(std::move(graph)) {
  if (classes < 1 || class_size < 1 || arity < 0) {
    throw Error(ErrorCode::kInvariantViolation, "full target needs k >= 1, N >= 1, d >= 0");
  }
  if (graph_.order() != classes * class_size) {
    throw Error(ErrorCode::kInvariantViolation, "vertex count is not k*N");
  }
  for (int u = 0; u < graph_.order(); ++u) {
    for (int v = u + 1; v < graph_.order(); ++v) {
      const bool same = class_of(u) == class_of(v);
      if (same == graph_.adjacent(u, v)) {
        throw Error(ErrorCode::kInvariantViolation, "graph is not a complete k-partite orientation");
      }
    }
  }
}

FullTarget FullTarget::with_reversed(int u, int v) const {
  OrientedGraph g = graph_;
  const int s = g.sign(u, v);
  if (s == 0) throw Error(ErrorCode::kInvariantViolation, "no arc to reverse");
  if (s > 0) {
    g.remove_arc(u, v);
    g.add_arc(v, u);
  } else {
    g.remove_arc(v, u);
    g.add_arc(u, v);
  }
  return FullTarget(classes_, arity_, class_size_, std::move(g), seed_);
}

namespace {

double binomial(double n, int t) {
  double result = 1.0;
  for (int i = 0; i < t; ++i) result = result * (n - i) / (i + 1);
  return std::max(result, 0.0);
}

// Realizer sets of one class as packed words: rows[o] has bit x set iff
// local vertex x of the class has an arc to outside vertex o.
class ClassRows {
 public:
  ClassRows(const FullTarget& t, int cls) : words_((t.class_size() + 63) / 64) {
    const OrientedGraph& g = t.graph();
    for (int v = 0; v < g.order(); ++v) {
      if (t.class_of(v) != cls) outside_.push_back(v);
    }
    rows_.assign(outside_.size() * static_cast<std::size_t>(words_), 0);
    for (std::size_t o = 0; o < outside_.size(); ++o) {
      for (int x = 0; x < t.class_size(); ++x) {
        if (g.has_arc(t.vertex(cls, x), outside_[o])) {
          rows_[o * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
        }
      }
    }
    const int tail = t.class_size() % 64;
    last_mask_ = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  }

  const std::vector<int>& outside() const noexcept { return outside_; }
  int words() const noexcept { return words_; }

  // out = acc & (sign > 0 ? row : ~row); returns whether out is non-empty.
  bool intersect(const std::uint64_t* acc, std::size_t o, int sign, std::uint64_t* out) const {
    const std::uint64_t* row = rows_.data() + o * words_;
    std::uint64_t any = 0;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t r = sign > 0 ? row[w] : ~row[w];
      if (w == words_ - 1) r &= last_mask_;
      out[w] = acc[w] & r;
      any |= out[w];
    }
    return any != 0;
  }

  std::vector<std::uint64_t> all() const {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(words_), ~std::uint64_t{0});
    a.back() &= last_mask_;
    return a;
  }

 private:
  int words_;
  std::uint64_t last_mask_ = 0;
  std::vector<int> outside_;
  std::vector<std::uint64_t> rows_;
};

struct SubsetSearch {
  const ClassRows& rows;
  int depth_limit;
  std::vector<std::uint64_t> stack;  // (depth_limit + 1) accumulators
  std::vector<std::size_t> chosen;
  std::vector<int> signs;
  std::uint64_t checks = 0;

  // True if every extension of the current prefix to depth_limit is realized.
  bool run(int depth, std::size_t start) {
    if (depth == depth_limit) return true;
    const auto words = static_cast<std::size_t>(rows.words());
    const std::uint64_t* acc = stack.data() + static_cast<std::size_t>(depth) * words;
    std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
    const std::size_t remaining = static_cast<std::size_t>(depth_limit - depth - 1);
    for (std::size_t o = start; o + remaining < rows.outside().size(); ++o) {
      chosen.push_back(o);
      for (int sign : {1, -1}) {
        signs.push_back(sign);
        ++checks;
        if (!rows.intersect(acc, o, sign, next) || !run(depth + 1, o + 1)) return false;
        signs.pop_back();
      }
      chosen.pop_back();
    }
    return true;
  }
};

}  // namespace

FullnessReport check_full(const FullTarget& target, const VerifyBudget& budget) {
  if (target.arity() > budget.max_arity) {
    throw Error(ErrorCode::kBudgetExceeded, "arity " + std::to_string(target.arity()) + " above verifier cap " +
                                                std::to_string(budget.max_arity));
  }
  const int outside_count = target.graph().order() - target.class_size();
  const int t = std::min(target.arity(), outside_count);
  const double estimate = target.classes() * binomial(outside_count, t) * std::ldexp(1.0, t);
  if (estimate > static_cast<double>(budget.max_checks)) {
    throw Error(ErrorCode::kBudgetExceeded, "fullness check needs about " + std::to_string(estimate) + " intersections");
  }
  FullnessReport report;
  for (int cls = 1; cls <= target.classes(); ++cls) {
    const ClassRows rows(target, cls);
    SubsetSearch search{rows, t, {}, {}, {}, 0};
    search.stack.assign(static_cast<std::size_t>(t + 1) * static_cast<std::size_t>(rows.words()), 0);
    const auto all = rows.all();
    std::copy(all.begin(), all.end(), search.stack.begin());
    const bool ok = search.run(0, 0);
    report.checks += search.checks;
    if (!ok) {
      FailureWitness failure;
      failure.cls = cls;
      for (std::size_t o : search.chosen) failure.subset.push_back(rows.outside()[o]);
      failure.pattern.entries = search.signs;
      report.failure = std::move(failure);
      return report;
    }
  }
  report.full = true;
  return report;
}

FullnessReport verify_full(FullTarget& target, const VerifyBudget& budget) {
  FullnessReport report = check_full(target, budget);
  FullTargetAccess::set_certified(target, report.full);
  return report;
}

bool naive_is_full(const FullTarget& target) {
  const OrientedGraph& g = target.graph();
  for (int cls = 1; cls <= target.classes(); ++cls) {
    std::vector<int> outside;
    for (int v = 0; v < g.order(); ++v) {
      if (target.class_of(v) != cls) outside.push_back(v);
    }
    std::vector<int> tuple;
    // Every ordered tuple of distinct outside vertices, every sign vector.
    auto realized = [&](const std::vector<int>& us, std::uint32_t signs) {
      for (int x = 0; x < target.class_size(); ++x) {
        const int v = target.vertex(cls, x);
        bool match = true;
        for (std::size_t i = 0; i < us.size() && match; ++i) {
          const int want = ((signs >> i) & 1U) ? 1 : -1;
          match = g.sign(v, us[i]) == want;
        }
        if (match) return true;
      }
      return false;
    };
    auto extend = [&](auto&& self) -> bool {
      for (std::uint32_t signs = 0; signs < (1U << tuple.size()); ++signs) {
        if (!realized(tuple, signs)) return false;
      }
      if (static_cast<int>(tuple.size()) == target.arity()) return true;
      for (int u : outside) {
        if (std::find(tuple.begin(), tuple.end(), u) != tuple.end()) continue;
        tuple.push_back(u);
        const bool ok = self(self);
        tuple.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!extend(extend)) return false;
  }
  return true;
}

int full_class_size(int k, int d) {
  if (k < 1 || d < 0) throw Error(ErrorCode::kDomainError, "class size needs k >= 1, d >= 0");
  return static_cast<int>(std::ceil(std::pow(8.0, d) * std::log(static_cast<double>(k))));
}

double failure_probability_bound(int k, int d, long long n) {
  if (k < 1 || d < 1 || n < 1) throw Error(ErrorCode::kDomainError, "bound needs k, d, N >= 1");
  const double log_p = std::log(static_cast<double>(k)) + d * std::log(static_cast<double>(k) * static_cast<double>(n)) +
                       d * std::log(2.0) - static_cast<double>(n) / std::ldexp(1.0, d);
  return std::exp(log_p);
}

FullTarget random_multipartite(int k, int d, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  OrientedGraph g(k * n);
  for (int u = 0; u < k * n; ++u) {
    for (int v = u + 1; v < k * n; ++v) {
      if (u / n == v / n) continue;
      if (rng.coin()) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
  }
  return FullTarget(k, d, n, std::move(g), seed);
}

SampleReport sample_full(int k, int d, std::uint64_t seed, const VerifyBudget& budget, std::optional<int> class_size) {
  if (k < 5 || d < 2) throw Error(ErrorCode::kDomainError, "sampling needs k >= 5 and d >= 2");
  if (class_size && *class_size < 1) throw Error(ErrorCode::kDomainError, "class size must be positive");
  const int n = class_size.value_or(full_class_size(k, d));
  SampleReport report;
  for (int attempt = 0; attempt < kSampleRetryLimit; ++attempt) {
    FullTarget candidate = random_multipartite(k, d, n, seed + static_cast<std::uint64_t>(attempt));
    const FullnessReport check = verify_full(candidate, budget);
    report.attempts = attempt + 1;
    report.checks += check.checks;
    if (check.full) {
      report.target = std::move(candidate);
      return report;
    }
  }
  throw Error(ErrorCode::kBudgetExceeded, "no full target within 32 seeds");
}

namespace {

// Sign patterns over at most two coordinates: bit j of `a` and `b` gives the
// two coordinates of item j. Returns whether all 2^t patterns occur, t = 1 when
// `b` is absent.
bool covers_patterns(std::uint32_t a, std::optional<std::uint32_t> b, int items) {
  unsigned seen = 0;
  for (int j = 0; j < items; ++j) {
    const unsigned x = (a >> j) & 1U;
    const unsigned y = b ? (*b >> j) & 1U : 0U;
    seen |= 1U << (x | (y << 1));
  }
  return seen == (b ? 0xFU : 0x3U);
}

// Class-2 condition restricted to subsets containing the newest row: every
// pair of class-1 vertices sees all sign patterns across the columns.
bool newest_row_ok(const std::vector<std::uint32_t>& rows, int n, int d) {
  const std::uint32_t last = rows.back();
  if (d >= 1 && !covers_patterns(last, std::nullopt, n)) return false;
  if (d >= 2 && n >= 2) {
    for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
      if (!covers_patterns(last, rows[r], n)) return false;
    }
  }
  return true;
}

bool columns_ok(const std::vector<std::uint32_t>& rows, int n, int d) {
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((rows[a] >> b) & 1U) cols[b] |= 1U << a;
    }
  }
  for (int b = 0; b < n; ++b) {
    if (d >= 1 && !covers_patterns(cols[b], std::nullopt, n)) return false;
    for (int c = b + 1; d >= 2 && c < n; ++c) {
      if (!covers_patterns(cols[b], cols[c], n)) return false;
    }
  }
  return true;
}

FullTarget bipartite_from_rows(const std::vector<std::uint32_t>& rows, int d, int n) {
  OrientedGraph g(2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((rows[a] >> b) & 1U) {
        g.add_arc(a, n + b);
      } else {
        g.add_arc(n + b, a);
      }
    }
  }
  return FullTarget(2, d, n, std::move(g));
}

// Two classes: the orientation is an N x N sign matrix (row a, bit b set iff
// a -> b). Relabelling class 1 permutes rows, so rows are enumerated in
// nondecreasing order, and a row is kept only if class 2 still realizes every
// pattern over the subsets it completes.
std::optional<FullTarget> search_bipartite(int d, int n, std::uint64_t& tried) {
  std::vector<std::uint32_t> rows;
  const std::uint32_t values = 1U << n;
  std::optional<FullTarget> found;
  auto extend = [&](auto&& self, std::uint32_t from) -> bool {
    if (static_cast<int>(rows.size()) == n) {
      ++tried;
      if (!columns_ok(rows, n, d)) return false;
      found = bipartite_from_rows(rows, d, n);
      return true;
    }
    for (std::uint32_t r = from; r < values; ++r) {
      rows.push_back(r);
      if (newest_row_ok(rows, n, d) && self(self, r)) return true;
      rows.pop_back();
    }
    return false;
  };
  extend(extend, 0);
  return found;
}

std::optional<FullTarget> search_all_orientations(int k, int d, int n, std::uint64_t& tried) {
  std::vector<Edge> pairs;
  for (int u = 0; u < k * n; ++u) {
    for (int v = u + 1; v < k * n; ++v) {
      if (u / n != v / n) pairs.push_back({u, v});
    }
  }
  if (pairs.size() > 24) {
    throw Error(ErrorCode::kBudgetExceeded,
                "N=" + std::to_string(n) + " needs 2^" + std::to_string(pairs.size()) + " orientations");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    OrientedGraph g(k * n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        g.add_arc(pairs[i].u, pairs[i].v);
      } else {
        g.add_arc(pairs[i].v, pairs[i].u);
      }
    }
    ++tried;
    FullTarget candidate(k, d, n, std::move(g));
    if (check_full(candidate).full) return candidate;
  }
  return std::nullopt;
}

}  // namespace

MinimalFullReport minimal_full_n(int k, int d, int n_cap) {
  if (k < 1 || k > 3 || d < 0 || d > 2 || n_cap < 1 || n_cap > 6) {
    throw Error(ErrorCode::kDomainError, "minimal search supports k <= 3, d <= 2, N_cap <= 6");
  }
  MinimalFullReport report;
  for (int n = 1; n <= n_cap; ++n) {
    std::optional<FullTarget> found = k == 2 ? search_bipartite(d, n, report.orientations_tried)
                                             : search_all_orientations(k, d, n, report.orientations_tried);
    if (found) {
      if (!verify_full(*found).full) throw std::logic_error("minimal search returned a target that is not full");
      report.class_size = n;
      report.witness = std::move(found);
      return report;
    }
    report.refuted.push_back(n);
  }
  return report;
}

RestrictedTarget::RestrictedTarget(FullTarget base, int free_classes)
    : base_(std::move(base)), free_classes_(free_classes) {
  if (free_classes < 1 || free_classes >= base_.classes()) {
    throw Error(ErrorCode::kDomainError, "restricted target needs 1 <= free classes < k");
  }
}

RestrictedTarget build_restricted(FullTarget base, int free_classes) {
  return RestrictedTarget(std::move(base), free_classes);
}

std::int64_t RestrictedTarget::pool_capacity() const {
  return static_cast<std::int64_t>(base_.classes() - free_classes_) * base_.class_size();
}

TargetVertex RestrictedTarget::pool_vertex(std::int64_t i) const {
  if (i < 0 || i >= pool_capacity()) {
    throw Error(ErrorCode::kCapacityExceeded, "pool index " + std::to_string(i) + " beyond capacity " +
                                                  std::to_string(pool_capacity()));
  }
  return {0, i};
}

int RestrictedTarget::base_vertex(TargetVertex v) const {
  const int n = base_.class_size();
  if (v.cls == 0 && v.index >= 0 && v.index < pool_capacity()) return free_classes_ * n + static_cast<int>(v.index);
  if (v.cls >= 1 && v.cls <= free_classes_ && v.index >= 0 && v.index < n) {
    return base_.vertex(v.cls, static_cast<int>(v.index));
  }
  throw Error(ErrorCode::kInvalidClass,
              "no vertex (" + std::to_string(v.cls) + "," + std::to_string(v.index) + ") in the restricted target");
}

TargetVertex RestrictedTarget::target_vertex(int base_vertex) const {
  const int cls = base_.class_of(base_vertex);
  if (cls > free_classes_) return {0, base_vertex - free_classes_ * base_.class_size()};
  return {cls, base_vertex - (cls - 1) * base_.class_size()};
}

void RestrictedTarget::install_pool_arc(TargetVertex from, TargetVertex to) {
  if (from.cls != 0 || to.cls != 0 || from == to) {
    throw Error(ErrorCode::kInvariantViolation, "pool arcs must join two distinct pool vertices");
  }
  const int a = base_vertex(from);
  const int b = base_vertex(to);
  if (extra_arcs_.contains({a, b}) || extra_arcs_.contains({b, a})) {
    throw Error(ErrorCode::kInvariantViolation, "pool pair already carries an arc");
  }
  extra_arcs_.insert({a, b});
}

std::optional<TargetVertex> RestrictedTarget::query(int cls, std::span<const Constraint> constraints,
                                                    std::span<const TargetVertex> exclude) {
  if (cls < 1 || cls > free_classes_) {
    throw Error(ErrorCode::kInvalidClass, "class " + std::to_string(cls) + " is not a free class");
  }
  std::unordered_map<int, int> wanted;
  for (const Constraint& c : constraints) {
    const int b = base_vertex(c.vertex);
    if (c.vertex.cls == cls) {
      throw Error(ErrorCode::kClassCollision, "constraint vertex lies in queried class " + std::to_string(cls));
    }
    const auto [it, inserted] = wanted.emplace(b, c.sign);
    if (!inserted && it->second != c.sign) {
      throw Error(ErrorCode::kConstraintConflict, "one vertex constrained with both signs");
    }
  }
  if (static_cast<int>(wanted.size()) > base_.arity()) {
    throw Error(ErrorCode::kArityExceeded, std::to_string(wanted.size()) + " constraints exceed fullness arity " +
                                               std::to_string(base_.arity()));
  }
  for (int x = 0; x < base_.class_size(); ++x) {
    const TargetVertex candidate{cls, x};
    if (std::find(exclude.begin(), exclude.end(), candidate) != exclude.end()) continue;
    const int b = base_.vertex(cls, x);
    const bool ok = std::all_of(wanted.begin(), wanted.end(),
                                [&](const auto& w) { return base_.graph().sign(b, w.first) == w.second; });
    if (ok) return candidate;
  }
  return std::nullopt;
}

int RestrictedTarget::arc_sign(TargetVertex a, TargetVertex b) {
  const int x = base_vertex(a);
  const int y = base_vertex(b);
  if (a.cls == 0 && b.cls == 0) {
    if (extra_arcs_.contains({x, y})) return 1;
    if (extra_arcs_.contains({y, x})) return -1;
    return 0;
  }
  return base_.graph().sign(x, y);
}

OrientedGraph RestrictedTarget::realized_graph() const {
  OrientedGraph g(base_.graph().order());
  for (const Arc& a : base_.graph().arcs()) {
    if (base_.class_of(a.from) <= free_classes_ || base_.class_of(a.to) <= free_classes_) g.add_arc(a.from, a.to);
  }
  for (const Arc& a : extra_arcs_) g.add_arc(a.from, a.to);
  return g;
}

std::string RestrictedTarget::describe() const {
  std::ostringstream out;
  out << "restricted(k=" << base_.classes() << ", d=" << base_.arity() << ", N=" << base_.class_size()
      << ", free_classes=" << free_classes_ << ")";
  return out.str();
}

namespace {

constexpr char kBase64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    const std::size_t chunk = std::min<std::size_t>(3, bytes.size() - i);
    std::uint32_t triple = static_cast<std::uint32_t>(bytes[i]) << 16;
    if (chunk > 1) triple |= static_cast<std::uint32_t>(bytes[i + 1]) << 8;
    if (chunk > 2) triple |= bytes[i + 2];
    for (std::size_t j = 0; j < 4; ++j) {
      out.push_back(j <= chunk ? kBase64Alphabet[(triple >> (18 - 6 * j)) & 0x3F] : '=');
    }
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ParseError(1, "base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t triple = 0;
    int padding = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const char c = text[i + j];
      std::uint32_t value = 0;
      if (c == '=') {
        ++padding;
      } else {
        const char* hit = std::find(kBase64Alphabet, kBase64Alphabet + 64, c);
        if (hit == kBase64Alphabet + 64 || padding > 0) throw ParseError(1, "invalid base64 character");
        value = static_cast<std::uint32_t>(hit - kBase64Alphabet);
      }
      triple = (triple << 6) | value;
    }
    if (padding > 2 || (padding > 0 && i + 4 != text.size())) throw ParseError(1, "misplaced base64 padding");
    out.push_back(static_cast<std::uint8_t>(triple >> 16));
    if (padding < 2) out.push_back(static_cast<std::uint8_t>((triple >> 8) & 0xFF));
    if (padding < 1) out.push_back(static_cast<std::uint8_t>(triple & 0xFF));
  }
  return out;
}

nlohmann::json target_to_json(const FullTarget& t) {
  const OrientedGraph& g = t.graph();
  std::vector<std::uint8_t> bytes;
  std::size_t bit = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (t.class_of(u) == t.class_of(v)) continue;
      if (bit % 8 == 0) bytes.push_back(0);
      if (g.has_arc(u, v)) bytes.back() |= static_cast<std::uint8_t>(1U << (bit % 8));
      ++bit;
    }
  }
  return {{"k", t.classes()},
          {"d", t.arity()},
          {"N", t.class_size()},
          {"seed", t.seed()},
          {"arcs", base64_encode(bytes)},
          {"certificate", {{"verified", t.certified()}, {"verifier_version", kVerifierVersion}}}};
}

FullTarget target_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    const int d = j.at("d").get<int>();
    const int n = j.at("N").get<int>();
    const auto seed = j.value("seed", std::uint64_t{0});
    if (k < 1 || n < 1 || d < 0 || static_cast<long long>(k) * n > (1 << 16)) {
      throw ParseError(1, "target parameters out of range");
    }
    const auto bytes = base64_decode(j.at("arcs").get<std::string>());
    OrientedGraph g(k * n);
    std::size_t bit = 0;
    for (int u = 0; u < k * n; ++u) {
      for (int v = u + 1; v < k * n; ++v) {
        if (u / n == v / n) continue;
        if (bit / 8 >= bytes.size()) throw ParseError(1, "arc bitfield too short");
        if ((bytes[bit / 8] >> (bit % 8)) & 1U) {
          g.add_arc(u, v);
        } else {
          g.add_arc(v, u);
        }
        ++bit;
      }
    }
    if ((bit + 7) / 8 != bytes.size()) throw ParseError(1, "arc bitfield length mismatch");
    return FullTarget(k, d, n, std::move(g), seed);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed target JSON: ") + e.what());
  }
}

}  // namespace orichrome

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orichrome/graph.hpp"
#include "orichrome/target.hpp"

namespace orichrome {

inline constexpr const char* kVerifierVersion = "orichrome-full-verifier/1";

// Orientation of a complete k-partite graph with classes of exactly N
// vertices. Class c (1-based) holds vertices (c-1)N .. cN-1.
class FullTarget {
 public:
  // Throws kInvariantViolation unless `graph` is an orientation of the
  // complete k-partite graph with classes of size N.
  FullTarget(int classes, int arity, int class_size, OrientedGraph graph, std::uint64_t seed = 0);

  int classes() const noexcept { return classes_; }
  int arity() const noexcept { return arity_; }
  int class_size() const noexcept { return class_size_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const OrientedGraph& graph() const noexcept { return graph_; }
  bool certified() const noexcept { return certified_; }

  int class_of(int v) const noexcept { return v / class_size_ + 1; }
  int vertex(int cls, int local) const noexcept { return (cls - 1) * class_size_ + local; }

  // Returns a copy with the arc between u and v reversed (uncertified).
  FullTarget with_reversed(int u, int v) const;

 private:
  friend struct FullTargetAccess;

  int classes_;
  int arity_;
  int class_size_;
  std::uint64_t seed_;
  OrientedGraph graph_;
  bool certified_ = false;
};

struct FailureWitness {
  int cls = 0;
  std::vector<int> subset;
  OrientationVector pattern;
};

struct FullnessReport {
  bool full = false;
  std::optional<FailureWitness> failure;
  std::uint64_t checks = 0;
};

struct VerifyBudget {
  int max_arity = 3;
  std::uint64_t max_checks = std::uint64_t{1} << 34;
};

// Checks every class, every subset U of size t = min(d, |outside|) of the
// other classes in lexicographic order and every sign vector over U for a
// realizer in the class (bitset intersections). Subsets of a realized set are
// realized, so t = d covers all smaller sizes, and unordered subsets with all
// sign vectors cover all ordered ones. The first failure in (class, U) order
// is reported. Marks the target certified on success. Throws kBudgetExceeded.
FullnessReport verify_full(FullTarget& target, const VerifyBudget& budget = {});

// Same check without touching the certificate.
FullnessReport check_full(const FullTarget& target, const VerifyBudget& budget = {});

// Literal definition: every class, ordered tuple of distinct outside vertices
// of size <= d and sign vector, scanned vertex by vertex. Test oracle for tiny
// targets only.
bool naive_is_full(const FullTarget& target);

// ceil(8^d ln k).
int full_class_size(int k, int d);

// k (kN)^d 2^d exp(-N / 2^d), evaluated in log space.
double failure_probability_bound(int k, int d, long long n);

struct SampleReport {
  std::optional<FullTarget> target;
  int attempts = 0;
  std::uint64_t checks = 0;
};

inline constexpr int kSampleRetryLimit = 32;

// Las Vegas: orient every cross-class pair by a fair coin from seed, seed+1,
// ... until verify_full certifies. Requires k >= 5, d >= 2 (kDomainError);
// throws kBudgetExceeded after 32 failed seeds. The class size defaults to
// full_class_size(k, d).
SampleReport sample_full(int k, int d, std::uint64_t seed, const VerifyBudget& budget = {},
                         std::optional<int> class_size = std::nullopt);

// Random orientation of the complete k-partite graph with class size N.
FullTarget random_multipartite(int k, int d, int n, std::uint64_t seed);

struct MinimalFullReport {
  std::optional<int> class_size;
  std::optional<FullTarget> witness;
  // Class sizes proven insufficient by exhausting all orientations.
  std::vector<int> refuted;
  std::uint64_t orientations_tried = 0;
};

// Smallest N <= n_cap admitting a (k,d,N)-full orientation, by exhaustive
// search. Limited to k <= 3, d <= 2, n_cap <= 6. For k = 2 the search runs
// over sign matrices with sorted rows and prunes as rows are added; otherwise
// every orientation is tried, and kBudgetExceeded is thrown when some N needs
// more than 2^24 of them.
MinimalFullReport minimal_full_n(int k, int d, int n_cap);

// H_g style restriction of a full target: classes above `free_classes` merge
// into the pool P_0 and lose all arcs among themselves. Pool vertex j is base
// vertex free_classes*N + j.
class RestrictedTarget final : public Target {
 public:
  RestrictedTarget(FullTarget base, int free_classes);

  const FullTarget& base() const noexcept { return base_; }
  int free_classes() const override { return free_classes_; }
  std::int64_t pool_capacity() const override;
  std::optional<int> arity() const override { return base_.arity(); }
  TargetVertex pool_vertex(std::int64_t i) const override;
  bool pool_has_arcs() const override { return !extra_arcs_.empty(); }
  void install_pool_arc(TargetVertex from, TargetVertex to) override;
  std::optional<TargetVertex> query(int cls, std::span<const Constraint> constraints,
                                    std::span<const TargetVertex> exclude) override;
  int arc_sign(TargetVertex a, TargetVertex b) override;
  std::string describe() const override;

  int base_vertex(TargetVertex v) const;
  TargetVertex target_vertex(int base_vertex) const;
  // Base arcs minus those inside the pool, plus installed pool arcs.
  OrientedGraph realized_graph() const;
  const std::set<Arc>& extra_arcs() const noexcept { return extra_arcs_; }

 private:
  FullTarget base_;
  int free_classes_;
  std::set<Arc> extra_arcs_;  // in base vertex ids
};

// Throws kDomainError unless 1 <= free_classes < k.
RestrictedTarget build_restricted(FullTarget base, int free_classes);

// {"k","d","N","seed","arcs": base64 of the cross-class pair orientations
// (u < v lexicographic, bit set iff u->v, LSB first), "certificate": {...}}.
nlohmann::json target_to_json(const FullTarget& t);
// Certificate is trusted only after re-verification by the caller.
FullTarget target_from_json(const nlohmann::json& j);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace orichrome

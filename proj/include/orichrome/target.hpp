#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace orichrome {

// A vertex of a colouring target. Class 0 is the reserved pool P_0; classes
// 1..free_classes() are the independent free classes P_1, P_2, ...
struct TargetVertex {
  int cls = 0;
  std::int64_t index = 0;

  friend auto operator<=>(const TargetVertex&, const TargetVertex&) = default;
  std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cls)) << 40) ^ static_cast<std::uint64_t>(index);
  }
};

struct TargetVertexHash {
  std::size_t operator()(const TargetVertex& v) const noexcept { return std::hash<std::uint64_t>{}(v.key()); }
};

// Realizer requirement: sign +1 asks for an arc from the realizer to `vertex`,
// -1 for an arc from `vertex` to the realizer.
struct Constraint {
  TargetVertex vertex;
  int sign = 1;

  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

// The colouring pipeline's view of a target graph: independent free classes
// that realize sign patterns toward outside vertices, plus a reserved pool
// that starts arc-free and receives arcs as small graphs are embedded.
class Target {
 public:
  virtual ~Target() = default;

  virtual int free_classes() const = 0;
  virtual std::int64_t pool_capacity() const = 0;
  // Maximum constraint count a query is guaranteed to satisfy; empty if unbounded.
  virtual std::optional<int> arity() const = 0;

  virtual TargetVertex pool_vertex(std::int64_t i) const = 0;
  virtual bool pool_has_arcs() const = 0;
  // Throws kInvariantViolation if the pair already carries an arc.
  virtual void install_pool_arc(TargetVertex from, TargetVertex to) = 0;

  // A vertex of class `cls` realizing every constraint and not in `exclude`,
  // or empty if the target has none. Throws kInvalidClass for a class outside
  // 1..free_classes(), kClassCollision if a constraint vertex lies in `cls`
  // and kArityExceeded when there are more constraints than arity().
  virtual std::optional<TargetVertex> query(int cls, std::span<const Constraint> constraints,
                                            std::span<const TargetVertex> exclude) = 0;

  // +1 if a->b, -1 if b->a, 0 if not adjacent. May decide an undecided pair.
  virtual int arc_sign(TargetVertex a, TargetVertex b) = 0;

  virtual std::string describe() const = 0;
};

// Arbitrarily large full target realized on demand. Free-class vertices are
// minted only when a query cannot reuse an existing one; each cross-class
// pair is decided once (by a query constraint, or by a seeded hash coin the
// first time it is inspected) and never changes.
class LazyTarget final : public Target {
 public:
  LazyTarget(int free_classes, std::int64_t pool_capacity, std::uint64_t seed);
  // 138g-162 free classes and an unbounded pool.
  static LazyTarget for_genus(int genus, std::uint64_t seed);

  int free_classes() const override { return free_classes_; }
  std::int64_t pool_capacity() const override { return pool_capacity_; }
  std::optional<int> arity() const override { return std::nullopt; }
  TargetVertex pool_vertex(std::int64_t i) const override;
  bool pool_has_arcs() const override { return !pool_arcs_.empty(); }
  void install_pool_arc(TargetVertex from, TargetVertex to) override;
  std::optional<TargetVertex> query(int cls, std::span<const Constraint> constraints,
                                    std::span<const TargetVertex> exclude) override;
  int arc_sign(TargetVertex a, TargetVertex b) override;
  std::string describe() const override;

  std::int64_t minted(int cls) const;
  std::int64_t total_minted() const;
  std::size_t decided_pairs() const noexcept { return memo_.size(); }
  // Decided sign without deciding; 0 when undecided or not a cross pair.
  int peek_sign(TargetVertex a, TargetVertex b) const;

 private:
  struct PairKey {
    std::uint64_t lo;
    std::uint64_t hi;
    friend bool operator==(const PairKey&, const PairKey&) = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept;
  };

  void check_vertex(TargetVertex v) const;
  // Sign stored from the perspective of the lower key.
  static PairKey make_key(TargetVertex a, TargetVertex b) noexcept;
  void fix(TargetVertex a, TargetVertex b, int sign);

  int free_classes_;
  std::int64_t pool_capacity_;
  std::uint64_t seed_;
  std::vector<std::int64_t> minted_;
  std::unordered_map<PairKey, std::int8_t, PairKeyHash> memo_;
  std::unordered_map<PairKey, std::int8_t, PairKeyHash> pool_arcs_;
};

}  // namespace orichrome

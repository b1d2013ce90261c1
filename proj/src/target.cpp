#include "orichrome/target.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "orichrome/error.hpp"
#include "orichrome/rng.hpp"
#include "orichrome/surface_params.hpp"

namespace orichrome {

LazyTarget::LazyTarget(int free_classes, std::int64_t pool_capacity, std::uint64_t seed)
    : free_classes_(free_classes),
      pool_capacity_(pool_capacity),
      seed_(seed),
      minted_(static_cast<std::size_t>(free_classes) + 1, 0) {
  if (free_classes < 1) throw Error(ErrorCode::kDomainError, "a lazy target needs at least one free class");
  if (pool_capacity < 0) throw Error(ErrorCode::kDomainError, "negative pool capacity");
}

LazyTarget LazyTarget::for_genus(int genus, std::uint64_t seed) {
  const SurfaceParams params{genus};
  if (genus < 2) throw Error(ErrorCode::kDomainError, "lazy surface target needs g >= 2");
  return LazyTarget(params.free_classes(), std::numeric_limits<std::int64_t>::max(), seed);
}

TargetVertex LazyTarget::pool_vertex(std::int64_t i) const {
  if (i < 0 || i >= pool_capacity_) {
    throw Error(ErrorCode::kCapacityExceeded, "pool index " + std::to_string(i) + " beyond capacity " +
                                                  std::to_string(pool_capacity_));
  }
  return {0, i};
}

std::size_t LazyTarget::PairKeyHash::operator()(const PairKey& k) const noexcept {
  return static_cast<std::size_t>(splitmix64_mix(k.lo ^ splitmix64_mix(k.hi)));
}

LazyTarget::PairKey LazyTarget::make_key(TargetVertex a, TargetVertex b) noexcept {
  return a < b ? PairKey{a.key(), b.key()} : PairKey{b.key(), a.key()};
}

void LazyTarget::check_vertex(TargetVertex v) const {
  const bool ok = v.cls == 0 ? (v.index >= 0 && v.index < pool_capacity_)
                             : (v.cls >= 1 && v.cls <= free_classes_ && v.index >= 0 && v.index < minted_[v.cls]);
  if (!ok) {
    throw Error(ErrorCode::kInvalidClass,
                "no vertex (" + std::to_string(v.cls) + "," + std::to_string(v.index) + ") in the lazy target");
  }
}

void LazyTarget::install_pool_arc(TargetVertex from, TargetVertex to) {
  check_vertex(from);
  check_vertex(to);
  if (from.cls != 0 || to.cls != 0 || from == to) {
    throw Error(ErrorCode::kInvariantViolation, "pool arcs must join two distinct pool vertices");
  }
  const PairKey key = make_key(from, to);
  if (pool_arcs_.contains(key)) throw Error(ErrorCode::kInvariantViolation, "pool pair already carries an arc");
  pool_arcs_.emplace(key, static_cast<std::int8_t>(from < to ? 1 : -1));
}

int LazyTarget::peek_sign(TargetVertex a, TargetVertex b) const {
  if (a == b) return 0;
  const PairKey key = make_key(a, b);
  const auto& table = (a.cls == 0 && b.cls == 0) ? pool_arcs_ : memo_;
  const auto it = table.find(key);
  if (it == table.end()) return 0;
  return a < b ? it->second : -it->second;
}

void LazyTarget::fix(TargetVertex a, TargetVertex b, int sign) {
  memo_.emplace(make_key(a, b), static_cast<std::int8_t>(a < b ? sign : -sign));
}

int LazyTarget::arc_sign(TargetVertex a, TargetVertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b || a.cls == b.cls) return (a.cls == 0 && b.cls == 0) ? peek_sign(a, b) : 0;
  const PairKey key = make_key(a, b);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    const std::uint64_t coin = splitmix64_mix(seed_ ^ splitmix64_mix(key.lo) ^ (splitmix64_mix(key.hi) << 1));
    it = memo_.emplace(key, static_cast<std::int8_t>((coin >> 63) != 0 ? 1 : -1)).first;
  }
  return a < b ? it->second : -it->second;
}

std::optional<TargetVertex> LazyTarget::query(int cls, std::span<const Constraint> constraints,
                                              std::span<const TargetVertex> exclude) {
  if (cls < 1 || cls > free_classes_) {
    throw Error(ErrorCode::kInvalidClass, "class " + std::to_string(cls) + " is not a free class");
  }
  std::unordered_map<TargetVertex, int, TargetVertexHash> wanted;
  for (const Constraint& c : constraints) {
    check_vertex(c.vertex);
    if (c.vertex.cls == cls) {
      throw Error(ErrorCode::kClassCollision, "constraint vertex lies in queried class " + std::to_string(cls));
    }
    const auto [it, inserted] = wanted.emplace(c.vertex, c.sign);
    if (!inserted && it->second != c.sign) {
      throw Error(ErrorCode::kConstraintConflict, "one vertex constrained with both signs");
    }
  }
  const std::unordered_set<TargetVertex, TargetVertexHash> excluded(exclude.begin(), exclude.end());
  for (std::int64_t x = 0; x < minted_[cls]; ++x) {
    const TargetVertex candidate{cls, x};
    if (excluded.contains(candidate)) continue;
    bool compatible = true;
    for (const Constraint& c : constraints) {
      const int decided = peek_sign(candidate, c.vertex);
      if (decided != 0 && decided != c.sign) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    for (const Constraint& c : constraints) fix(candidate, c.vertex, c.sign);
    return candidate;
  }
  const TargetVertex fresh{cls, minted_[cls]++};
  for (const Constraint& c : constraints) fix(fresh, c.vertex, c.sign);
  return fresh;
}

std::int64_t LazyTarget::minted(int cls) const {
  if (cls < 1 || cls > free_classes_) throw Error(ErrorCode::kInvalidClass, "not a free class");
  return minted_[cls];
}

std::int64_t LazyTarget::total_minted() const { return std::accumulate(minted_.begin(), minted_.end(), std::int64_t{0}); }

std::string LazyTarget::describe() const {
  std::ostringstream out;
  out << "lazy(free_classes=" << free_classes_ << ", minted=" << total_minted() << ", seed=" << seed_ << ")";
  return out.str();
}

}  // namespace orichrome

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "orichrome/error.hpp"
#include "orichrome/rng.hpp"
#include "orichrome/target.hpp"

using namespace orichrome;

namespace {

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected " << error_code_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("lazy target basics") {
  LazyTarget t = LazyTarget::for_genus(2, 7);
  CHECK(t.free_classes() == 114);
  CHECK(t.pool_capacity() == std::numeric_limits<std::int64_t>::max());
  CHECK_FALSE(t.arity().has_value());
  CHECK(t.total_minted() == 0);

  const auto first = t.query(3, {}, {});
  REQUIRE(first.has_value());
  CHECK(*first == TargetVertex{3, 0});
  CHECK(t.minted(3) == 1);
  // An unconstrained query reuses the minted vertex.
  CHECK(*t.query(3, {}, {}) == TargetVertex{3, 0});
  CHECK(t.minted(3) == 1);
  const std::vector<TargetVertex> exclude{{3, 0}};
  CHECK(*t.query(3, {}, exclude) == TargetVertex{3, 1});

  expect_code(ErrorCode::kDomainError, [] { LazyTarget::for_genus(1, 0); });
  expect_code(ErrorCode::kDomainError, [] { LazyTarget(0, 1, 0); });
  expect_code(ErrorCode::kInvalidClass, [&] { t.query(0, {}, {}); });
  expect_code(ErrorCode::kInvalidClass, [&] { t.query(115, {}, {}); });
  expect_code(ErrorCode::kInvalidClass, [&] { t.minted(0); });
}

TEST_CASE("constraints are honoured and decisions are permanent") {
  LazyTarget t(4, 20, 11);
  std::vector<Constraint> cs;
  for (int i = 0; i < 6; ++i) cs.push_back({t.pool_vertex(i), i % 2 == 0 ? 1 : -1});
  for (int i = 0; i < 4; ++i) cs.push_back({*t.query(2, {}, {}), i % 3 == 0 ? -1 : 1});
  // The four class-2 queries above all return the same vertex, so dedupe.
  cs.resize(7);
  const auto v = t.query(1, cs, {});
  REQUIRE(v.has_value());
  for (const Constraint& c : cs) {
    CHECK(t.arc_sign(*v, c.vertex) == c.sign);
    CHECK(t.arc_sign(c.vertex, *v) == -c.sign);
    CHECK(t.peek_sign(*v, c.vertex) == c.sign);
  }

  SUBCASE("a conflicting query mints a new vertex") {
    std::vector<Constraint> flipped = cs;
    for (Constraint& c : flipped) c.sign = -c.sign;
    const auto w = t.query(1, flipped, {});
    REQUIRE(w.has_value());
    CHECK(*w != *v);
    CHECK(t.minted(1) == 2);
    for (const Constraint& c : flipped) CHECK(t.arc_sign(*w, c.vertex) == c.sign);
    for (const Constraint& c : cs) CHECK(t.arc_sign(*v, c.vertex) == c.sign);
  }
  SUBCASE("a compatible query reuses the vertex") {
    const std::vector<Constraint> sub(cs.begin(), cs.begin() + 3);
    CHECK(*t.query(1, sub, {}) == *v);
    CHECK(t.minted(1) == 1);
  }
  SUBCASE("query errors") {
    const std::vector<Constraint> clash{{t.pool_vertex(0), 1}, {t.pool_vertex(0), -1}};
    expect_code(ErrorCode::kConstraintConflict, [&] { t.query(1, clash, {}); });
    const std::vector<Constraint> own{{*v, 1}};
    expect_code(ErrorCode::kClassCollision, [&] { t.query(1, own, {}); });
    const std::vector<Constraint> ghost{{TargetVertex{3, 5}, 1}};
    expect_code(ErrorCode::kInvalidClass, [&] { t.query(1, ghost, {}); });
  }
}

TEST_CASE("coins are memoized, antisymmetric and seed-determined") {
  LazyTarget a(3, 10, 5);
  LazyTarget b(3, 10, 5);
  // Mint a few distinct class-1 vertices in both by excluding earlier ones.
  std::vector<TargetVertex> seen;
  for (int i = 0; i < 5; ++i) {
    const auto va = a.query(1, {}, seen);
    const auto vb = b.query(1, {}, seen);
    CHECK(*va == *vb);
    seen.push_back(*va);
  }
  int positive = 0;
  for (const TargetVertex& x : seen) {
    for (int p = 0; p < 10; ++p) {
      const TargetVertex y = a.pool_vertex(p);
      CHECK(a.peek_sign(x, y) == 0);
      const int s = a.arc_sign(x, y);
      CHECK((s == 1 || s == -1));
      CHECK(a.arc_sign(y, x) == -s);
      CHECK(a.arc_sign(x, y) == s);
      CHECK(b.arc_sign(x, y) == s);
      if (s > 0) ++positive;
    }
  }
  CHECK(a.decided_pairs() == 50);
  CHECK(positive > 5);
  CHECK(positive < 45);
  // Same class, no arc.
  CHECK(a.arc_sign(seen[0], seen[1]) == 0);
}

TEST_CASE("pool arcs") {
  LazyTarget t(2, 4, 0);
  CHECK_FALSE(t.pool_has_arcs());
  CHECK(t.arc_sign(t.pool_vertex(0), t.pool_vertex(1)) == 0);
  t.install_pool_arc(t.pool_vertex(1), t.pool_vertex(0));
  CHECK(t.pool_has_arcs());
  CHECK(t.arc_sign(t.pool_vertex(0), t.pool_vertex(1)) == -1);
  CHECK(t.arc_sign(t.pool_vertex(1), t.pool_vertex(0)) == 1);
  expect_code(ErrorCode::kInvariantViolation, [&] { t.install_pool_arc(t.pool_vertex(0), t.pool_vertex(1)); });
  expect_code(ErrorCode::kInvariantViolation, [&] { t.install_pool_arc(t.pool_vertex(2), t.pool_vertex(2)); });
  expect_code(ErrorCode::kCapacityExceeded, [&] { t.pool_vertex(4); });
  CHECK(t.describe().find("lazy") == 0);
}

TEST_CASE("random constraint sets always realize") {
  LazyTarget t = LazyTarget::for_genus(3, 42);
  SplitMix64 rng(1);
  std::vector<TargetVertex> known;
  for (int i = 0; i < 30; ++i) known.push_back(t.pool_vertex(i));
  for (int q = 0; q < 2000; ++q) {
    const int cls = 1 + static_cast<int>(rng.below(8));
    std::vector<Constraint> cs;
    std::vector<TargetVertex> used;
    const int want = static_cast<int>(rng.below(11));
    while (static_cast<int>(cs.size()) < want) {
      const TargetVertex u = known[rng.below(known.size())];
      if (u.cls == cls || std::find(used.begin(), used.end(), u) != used.end()) continue;
      used.push_back(u);
      cs.push_back({u, rng.coin() ? 1 : -1});
    }
    const auto v = t.query(cls, cs, {});
    REQUIRE(v.has_value());
    for (const Constraint& c : cs) CHECK(t.arc_sign(*v, c.vertex) == c.sign);
    if (std::find(known.begin(), known.end(), *v) == known.end()) known.push_back(*v);
  }
}

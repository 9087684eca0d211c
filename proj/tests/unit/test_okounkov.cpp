#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::set<ZVec> ray_set(const RationalCone& c) { return {c.rays().begin(), c.rays().end()}; }

QVec point(std::initializer_list<long> xs) { return qv(xs); }

}  // namespace

TEST_CASE("semigroup points") {
  auto a1 = variety("A1", "1");
  const auto pts = semigroup(a1, DivisorClass::canonical({2}), 2);
  // Level 1 has nu = 0,1,2; level 2 has 0..4.
  CHECK(pts.size() == 8);
  for (const auto& p : pts) {
    CHECK(p.nu[0] >= 0);
    CHECK(p.nu[0] <= 2 * p.level);
  }
}

TEST_CASE("bodies of small examples") {
  auto a1 = variety("A1", "1");
  const auto b = body(a1, DivisorClass::canonical({3}), 3);
  CHECK(b.polytope == RationalPolytope::hull({point({0}), point({3})}));

  auto a2 = variety("A2", "1,2");
  const auto b2 = body(a2, DivisorClass::canonical({0, 1}), 3);
  CHECK(b2.polytope.volume() == q(1, 2));
  CHECK(b2.polytope.dimension() == 2);
  // Zero class gives the origin.
  const auto z = body(a2, DivisorClass::canonical({0, 0}), 2);
  CHECK(z.polytope.vertices().size() == 1);
}

TEST_CASE("bodies grow with the class") {
  auto bs = variety("A2", "1,2");
  const auto small = body(bs, DivisorClass::canonical({1, 0}), 3).polytope;
  const auto large = body(bs, DivisorClass::canonical({1, 1}), 3).polytope;
  CHECK(large.contains(small));
  // Delta(D) + Delta(E) sits inside Delta(D + E).
  const auto d = body(bs, DivisorClass::canonical({0, 1}), 3).polytope;
  const auto sum = body(bs, DivisorClass::canonical({1, 1}), 3).polytope;
  CHECK(sum.contains(small.minkowski_sum(d)));
  // Effective but not nef.
  const auto e = body(bs, DivisorClass::effective({1, 2}), 3).polytope;
  const auto e2 = body(bs, DivisorClass::effective({2, 3}), 3).polytope;
  CHECK(e2.contains(e));
}

TEST_CASE("global cone of P1") {
  auto a1 = variety("A1", "1");
  const auto g = global_cone(a1, 3, 2);
  CHECK(g.saturated);
  CHECK(ray_set(g.cone) == std::set<ZVec>{zv({0, 1}), zv({1, 1})});
}

TEST_CASE("global cone slices are the bodies") {
  auto bs = variety("A2", "1,2");
  const auto g = global_cone(bs, 6, 3);
  REQUIRE(g.saturated);
  CHECK(ray_set(g.cone) == std::set<ZVec>{zv({0, 0, 1, 0}), zv({0, 0, 1, 1}), zv({0, 1, 0, 1}), zv({1, 0, 1, 0})});
  for (const auto& e : std::vector<IVec>{{1, 1}, {1, 2}, {2, 1}, {2, 3}}) {
    const auto b = body(bs, DivisorClass::effective(e), 4).polytope;
    for (const auto& v : b.vertices()) {
      QVec x = v;
      for (auto c : e) x.emplace_back(static_cast<long>(c));
      CHECK(g.cone.contains(x));
    }
    // Slice of the cone: points of the lattice box in the cone are in the body.
    for (const auto& nu : box(2, 0, 6)) {
      QVec x{q(static_cast<long>(nu[0]), 2), q(static_cast<long>(nu[1]), 2)};
      QVec full = x;
      for (auto c : e) full.emplace_back(static_cast<long>(c));
      CHECK(g.cone.contains(full) == b.contains(x));
    }
  }
}

TEST_CASE("surface recipe") {
  for (const auto& type : {"A2", "B2"}) {
    auto bs = variety(type, "1,2");
    const auto r = indok_generators_surface(bs);
    const auto g = global_cone(bs, 6, 3);
    REQUIRE(g.saturated);
    CHECK(ray_set(r.cone) == ray_set(g.cone));
    CHECK(r.chambers.size() == 2);
  }
  CHECK_THROWS_AS(indok_generators_surface(variety("A2", "1,2,1")), Error);
}

TEST_CASE("volume checks") {
  const auto v = volume_check(variety("A2", "1,2"), DivisorClass::canonical({1, 1}), 4);
  CHECK(v.counts_match);
  CHECK(v.hull_volume == v.expected);
  CHECK(v.expected == q(3, 2));
  CHECK(v.stable);
  CHECK(saturation_level(variety("A1", "1"), DivisorClass::canonical({2}), 4) == 2);
  CHECK(saturation_level(variety("A2", "1,2"), DivisorClass::canonical({0, 1}), 4) >= 2);
}

TEST_CASE("restriction to the truncated word") {
  for (const auto& m : std::vector<IVec>{{0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    const auto r = restriction_check(variety("A2", "1,2"), DivisorClass::canonical(m), 4);
    CHECK(r.contained);
    CHECK(r.equal);
  }
}

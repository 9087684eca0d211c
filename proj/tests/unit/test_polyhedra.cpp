#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace testing;

namespace {

// Extreme rays of a planar cone by angular sort (generators in an open half-plane).
std::vector<ZVec> planar_rays(std::vector<ZVec> g) {
  for (auto& v : g) v = primitive(v);
  std::sort(g.begin(), g.end(), [](const ZVec& a, const ZVec& b) { return a[0] * b[1] - a[1] * b[0] > 0; });
  std::vector<ZVec> out{g.front()};
  if (g.back() != g.front()) out.push_back(g.back());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hull examples") {
  auto tri = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), QVec{q(1, 2), q(1, 4)}});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.dimension() == 2);
  auto pt = RationalPolytope::hull({QVec{q(1, 3), q(2)}});
  CHECK(pt.vertices().size() == 1);
  CHECK(pt.dimension() == 0);
  auto sq = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1}), QVec{q(1, 2), q(1, 2)}});
  CHECK(sq.vertices().size() == 4);
  CHECK_THROWS_AS(RationalPolytope::hull({}), Error);
}

TEST_CASE("extreme rays") {
  // (1,2) = (1,1) + (0,1) lies inside the cone spanned by the other two.
  const std::vector<ZVec> gens{zv({0, 1}), zv({1, 1}), zv({1, 2})};
  const auto cone = RationalCone::from_generators(gens, 2);
  CHECK(cone.rays() == planar_rays(gens));
  CHECK(cone.rays() == std::vector<ZVec>{zv({0, 1}), zv({1, 1})});
  const auto single = RationalCone::from_generators({zv({2, 4})}, 2);
  CHECK(single.rays() == std::vector<ZVec>{zv({1, 2})});
  const auto line = RationalCone::from_generators({zv({1, 0}), zv({-1, 0})}, 2);
  CHECK_FALSE(line.pointed());
  CHECK(line.lineality().size() == 1);
  CHECK(RationalCone::from_generators({}, 3).is_zero());
}

TEST_CASE("planar extreme rays against angular sort") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> x(0, 9), y(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ZVec> g;
    for (int i = 0; i < 6; ++i) g.push_back(zv({x(rng), y(rng)}));
    CHECK(RationalCone::from_generators(g, 2).rays() == planar_rays(g));
  }
}

TEST_CASE("volumes") {
  auto sq = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  CHECK(sq.volume() == 1);
  auto simplex = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  CHECK(simplex.volume() == q(1, 2));
  auto cube = RationalPolytope::hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}), qv({1, 1, 0}),
                                      qv({1, 0, 1}), qv({0, 1, 1}), qv({1, 1, 1})});
  CHECK(cube.volume() == 1);
  CHECK(cube.inequalities().size() == 6);
  CHECK(simplex_volume({qv({0, 0, 0}), qv({2, 0, 0}), qv({0, 3, 0}), qv({0, 0, 1})}) == 1);
}

TEST_CASE("slices") {
  auto sq = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  const AffineMap height{{qv({0, 1})}, qv({0})};
  auto mid = sq.slice(height, {q(1, 2)});
  CHECK(mid.dimension() == 1);
  CHECK(mid.vertices() == std::vector<QVec>{QVec{q(0), q(1, 2)}, QVec{q(1), q(1, 2)}});
  CHECK(mid.lattice_volume() == 1);
  const AffineMap diag{{qv({1, 1})}, qv({0})};
  auto corner = sq.slice(diag, {q(2)});
  CHECK(corner.vertices() == std::vector<QVec>{qv({1, 1})});
  CHECK(sq.slice(height, {q(3)}).empty());
}

TEST_CASE("lattice points") {
  auto seg = RationalPolytope::hull({qv({0}), qv({1})});
  CHECK(seg.lattice_points(2) == std::vector<QVec>{qv({0}), QVec{q(1, 2)}, qv({1})});
  auto tri = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  CHECK(tri.lattice_points(1).size() == 3);
  auto empty = RationalPolytope::from_h({qv({-1, 1}), qv({0, -1})}, {}, 1);  // x >= 1 and x <= 0
  CHECK(empty.empty());
  CHECK(empty.lattice_points(3).empty());
}

TEST_CASE("duality round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ZVec> g;
    for (int i = 0; i < 6; ++i) g.push_back(zv({c(rng), c(rng), c(rng) + 4}));
    const ConeHRep h = cone_v_to_h(g, 3);
    const ConeVRep v = cone_h_to_v(h.facets, h.equations, 3);
    const auto cone = RationalCone::from_generators(g, 3);
    CHECK(v.rays == cone.rays());
    CHECK(v.lineality == cone.lineality());
    for (const auto& x : g) CHECK(cone.contains(to_q(x)));
  }
  std::vector<QVec> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(QVec{Q(c(rng)), Q(c(rng)), Q(c(rng))});
  const auto p = RationalPolytope::hull(pts);
  std::vector<QVec> ineq, eq;
  for (const auto& r : p.inequalities()) ineq.push_back(to_q(r));
  for (const auto& r : p.equations()) eq.push_back(to_q(r));
  CHECK(RationalPolytope::from_h(ineq, eq, 3) == p);
  CHECK(RationalPolytope::from_json(p.to_json()) == p);
}

TEST_CASE("volume is invariant under unimodular maps") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QVec> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(QVec{Q(c(rng)), Q(c(rng)), Q(c(rng))});
    const auto p = RationalPolytope::hull(pts);
    // Product of elementary matrices.
    QMat u = identity(3);
    for (int s = 0; s < 4; ++s) {
      QMat e = identity(3);
      const size_t i = static_cast<size_t>(s % 3), j = static_cast<size_t>((s + 1) % 3);
      e[i][j] = c(rng);
      u = multiply(u, e, 3);
    }
    const auto img = p.image(AffineMap{u, qv({1, -2, 0})});
    CHECK(img.volume() == p.volume());
    CHECK(img.lattice_points(1).size() == p.lattice_points(1).size());
  }
}

TEST_CASE("lattice point counts are polynomial in the dilation") {
  const std::vector<RationalPolytope> fixtures{
      RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})}),
      RationalPolytope::hull({qv({0, 0}), qv({2, 0}), qv({0, 1}), qv({1, 1})}),
      RationalPolytope::hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}), qv({1, 1, 1})})};
  for (const auto& p : fixtures) {
    const int d = p.dimension();
    std::vector<Q> counts;
    for (int k = 0; k <= d + 1; ++k)
      counts.emplace_back(k == 0 ? 1L : static_cast<long>(p.lattice_points(k).size()));
    // The (d+1)-th difference of a degree-d polynomial vanishes.
    for (int level = 0; level <= d; ++level)
      for (size_t i = 0; i + 1 < counts.size() - static_cast<size_t>(level); ++i) counts[i] = counts[i + 1] - counts[i];
    CHECK(counts[0] == 0);
  }
}

TEST_CASE("corrupted polytope json is rejected") {
  auto tri = RationalPolytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  std::string text = tri.to_json();
  const auto pos = text.find("\"inequalities\"");
  REQUIRE(pos != std::string::npos);
  const auto digit = text.find("\"1\"", pos);
  REQUIRE(digit != std::string::npos);
  text.replace(digit, 3, "\"5\"");
  CHECK_THROWS_AS(RationalPolytope::from_json(text), Error);
}

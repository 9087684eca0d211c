#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("weight projection on P1") {
  auto a1 = variety("A1", "1");
  const auto ws = weighted_semigroup(a1, DivisorClass::canonical({2}), 3);
  const AffineMap q = weight_projection(ws);
  // mu = 2k - 2 nu for sections t^nu of O(2).
  CHECK(q.a == QMat{{Q(-2)}});
  CHECK(q.b == QVec{Q(2)});
  for (const auto& p : ws.points) CHECK(p.mu[0] == 2 * p.level - 2 * p.nu[0]);
}

TEST_CASE("sub-torus projections") {
  CHECK(project_weight({}, {3, -1}) == std::vector<long long>{3, -1});
  CHECK(project_weight({{1, 1}}, {3, -1}) == std::vector<long long>{2});
  auto bs = variety("A2", "1,2");
  const auto ws = weighted_semigroup(bs, DivisorClass::canonical({1, 1}), 2, {{1, 1}});
  CHECK(ws.weight_dim == 1);
}

TEST_CASE("weights are well defined and match the character") {
  for (const auto& [type, word, m] : std::vector<std::tuple<std::string, std::string, IVec>>{
           {"A2", "1,2", {1, 1}}, {"A2", "1,2,1", {0, 1, 1}}, {"B2", "1,2", {1, 1}}}) {
    auto bs = variety(type, word);
    const auto ws = weighted_semigroup(bs, DivisorClass::canonical(m), 3);
    for (long long k = 1; k <= 3; ++k) {
      Character from_points;
      for (const auto& p : ws.points)
        if (p.level == k) from_points.add(Weight(p.mu.begin(), p.mu.end()), 1);
      IVec km = m;
      for (auto& x : km) x *= k;
      CHECK(from_points == bs_character(bs.cartan(), bs.word(), km));
    }
  }
}

TEST_CASE("multiplicity asymptotics for the zero weight") {
  auto bs = variety("A2", "1,2,1");
  const DivisorClass d = pullback_from_flag_variety(bs, {1, 1});
  const auto rep = multiplicity_asymptotics(bs, d, qv({0, 0}), 4);
  CHECK(rep.d == 3);
  CHECK(rep.r == 2);
  CHECK(rep.slice_volume == 1);
  for (const auto& row : rep.rows) {
    CHECK(row.sections == row.level + 1);
    CHECK(row.character == row.sections);
    CHECK(row.lattice == row.sections);
    CHECK(row.error == q(1, row.level));
  }
  CHECK_FALSE(rep.on_boundary);
}

TEST_CASE("multiplicity errors and boundary weights") {
  auto bs = variety("A2", "1,2,1");
  const DivisorClass d = DivisorClass::canonical({0, 1, 1});
  try {
    multiplicity_asymptotics(bs, d, qv({5, 0}), 3);
    FAIL("expected NotInterior");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInterior);
  }
  const auto top = multiplicity_asymptotics(bs, d, qv({1, 1}), 3);
  CHECK(top.on_boundary);
  CHECK(top.slice.dimension() == 0);
  for (const auto& row : top.rows) CHECK(row.sections == 1);
  try {
    multiplicity_asymptotics(bs, d, QVec{Q(1, 7), Q(0)}, 3);
    FAIL("expected NonIntegralAll");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralAll);
  }
}

TEST_CASE("slices partition the lattice points") {
  auto bs = variety("A2", "1,2");
  const DivisorClass d = DivisorClass::canonical({1, 1});
  const auto ob = body(bs, d, 4).polytope;
  const auto q = weight_projection(weighted_semigroup(bs, d, 3));
  const auto image = ob.image(q);
  for (long long k = 1; k <= 3; ++k) {
    long long total = 0;
    for (const auto& mu : image.lattice_points(k)) total += slice_lattice_count(ob, q, mu, k);
    CHECK(total == static_cast<long long>(ob.lattice_points(k).size()));
    CHECK(total == bs_character(bs.cartan(), bs.word(), {k, k}).dimension());
  }
}

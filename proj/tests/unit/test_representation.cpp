#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("fundamental representations have Weyl dimensions and valid relations") {
  for (const auto& type : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
    const auto c = CartanDatum::parse(type);
    for (int i = 0; i < c.rank(); ++i) {
      const auto rep = FundamentalRep::build(c, i);
      CHECK(static_cast<long long>(rep.dim()) == weyl_dimension(c, c.fundamental_weight(i)));
      CHECK(rep.weights()[rep.highest()] == c.fundamental_weight(i));
      CHECK_NOTHROW(rep.validate(c));
    }
  }
}

TEST_CASE("lowering operators shift weights by simple roots") {
  const auto c = CartanDatum::type_B(2);
  for (int i = 0; i < c.rank(); ++i) {
    const auto rep = FundamentalRep::build(c, i);
    for (int j = 0; j < c.rank(); ++j) {
      const QMat& f = rep.f(j);
      for (size_t r = 0; r < rep.dim(); ++r)
        for (size_t col = 0; col < rep.dim(); ++col)
          if (f[r][col] != 0) {
            Weight expect = rep.weights()[col];
            for (size_t k = 0; k < expect.size(); ++k) expect[k] -= c.simple_root(j)[k];
            CHECK(rep.weights()[r] == expect);
          }
      // Nilpotent of the recorded index.
      QMat power = f;
      for (int e = 1; e < rep.nilpotency(j); ++e) power = multiply(power, f, rep.dim());
      bool zero_next = true;
      const QMat next = multiply(power, f, rep.dim());
      for (const auto& row : next)
        for (const auto& x : row) zero_next = zero_next && x == 0;
      CHECK(zero_next);
    }
  }
}

TEST_CASE("representation json round trip") {
  const auto c = CartanDatum::type_G2();
  const auto rep = FundamentalRep::build(c, 1);
  const auto back = FundamentalRep::from_json(c, rep.to_json());
  CHECK(back.dim() == rep.dim());
  CHECK(back.weights() == rep.weights());
  for (int j = 0; j < c.rank(); ++j) {
    CHECK(back.f(j) == rep.f(j));
    CHECK(back.e(j) == rep.e(j));
  }
  CHECK_THROWS_AS(FundamentalRep::from_json(c, "{\"highest\": 0}"), Error);
}

TEST_CASE("group elements act on highest weight vectors by characters") {
  const auto c = CartanDatum::type_A(2);
  const GroupModel g(c);
  std::mt19937_64 rng(5);
  const QVec t{random_q(rng) + 20, random_q(rng) + 20};
  const BorelElement b = borel_element(g, t, {{0, q(2)}, {1, q(-3, 2)}});
  const GroupElem<Q> one = b.g * b.inverse;
  for (int i = 0; i < c.rank(); ++i) {
    CHECK(one.rep[i] == mat_identity<Q>(g.rep(i).dim()));
    const size_t hi = g.rep(i).highest();
    // e kills the highest vector, so b v = t^{omega_i} v.
    for (size_t r = 0; r < g.rep(i).dim(); ++r) CHECK(b.g.rep[i][r][hi] == (r == hi ? t[i] : Q(0)));
  }
  // sdot_j maps the highest vector of V_{omega_j} to a lowest-by-one vector.
  for (int j = 0; j < c.rank(); ++j) {
    const auto s = g.sdot(j);
    const size_t hi = g.rep(j).highest();
    size_t nonzero = 0;
    for (size_t r = 0; r < g.rep(j).dim(); ++r) nonzero += s.rep[j][r][hi] != 0;
    CHECK(nonzero == 1);
  }
}

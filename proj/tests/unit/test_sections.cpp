#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

bool in_span(const SectionBasis& b, const Poly& p) {
  SectionBasis both = b;
  both.members.push_back(SectionPoly{p, b.members.empty() ? DivisorClass{} : b.members[0].multidegree, {}});
  return joint_rank(b, both) == b.members.size();
}

Q power(const Q& base, long long e) {
  Q out = 1;
  for (long long i = 0; i < std::abs(e); ++i) out *= e > 0 ? base : 1 / base;
  return out;
}

}  // namespace

TEST_CASE("cell polynomials") {
  auto a1 = variety("A1", "1");
  const auto& rep = a1.group().rep(0);
  const size_t hi = rep.highest(), lo = 1 - hi;
  CHECK(cell_polynomial(a1, 0, hi).poly == Poly(1, Q(1)));
  CHECK(cell_polynomial(a1, 0, lo).poly == Poly::variable(1, 0));
  CHECK(cell_polynomial(a1, 0, lo).weight == Weight{-1});

  auto a2 = variety("A2", "1,2");
  const auto& r2 = a2.group().rep(1);
  for (size_t xi = 0; xi < r2.dim(); ++xi) {
    const SectionPoly s = cell_polynomial(a2, 1, xi);
    if (r2.weights()[xi] == Weight{-1, 0}) {  // s_1 s_2 omega_2
      CHECK(s.poly.degree_in(0) + s.poly.degree_in(1) == 2);
      CHECK(s.poly.lead() == Exponent{1, 1});
    }
    CHECK(s.multidegree == DivisorClass::canonical({0, 1}));
  }
  // Cells of the first factor only involve t_1.
  for (size_t xi = 0; xi < a2.group().rep(0).dim(); ++xi) CHECK(cell_polynomial(a2, 0, xi).poly.degree_in(1) == 0);
}

TEST_CASE("nef bases") {
  auto a2 = variety("A2", "1,2");
  const auto zero = section_basis_nef(a2, DivisorClass::canonical({0, 0}));
  REQUIRE(zero.members.size() == 1);
  CHECK(zero.members[0].poly == Poly(2, Q(1)));

  auto a1 = variety("A1", "1");
  for (long long d = 0; d <= 5; ++d) {
    const auto b = section_basis_nef(a1, DivisorClass::canonical({d}));
    REQUIRE(b.members.size() == static_cast<size_t>(d + 1));
    for (long long j = 0; j <= d; ++j) CHECK(in_span(b, Poly::monomial({static_cast<int>(j)})));
  }

  const auto b = section_basis_nef(a2, DivisorClass::canonical({0, 1}));
  REQUIRE(b.members.size() == 3);
  std::vector<int> degrees;
  for (const auto& s : b.members) degrees.push_back(s.poly.degree_in(0) + s.poly.degree_in(1));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(section_basis_nef(a2, DivisorClass::canonical({0, -1})), Error);
}

TEST_CASE("gluing bases") {
  // One chart pair: t -> 1/s with cocycle s^d keeps degrees <= d.
  auto a1 = variety("A1", "1");
  for (long long d = 0; d <= 6; ++d) {
    const auto b = section_basis_glue(a1, DivisorClass::canonical({d}));
    REQUIRE(b.members.size() == static_cast<size_t>(d + 1));
    for (const auto& s : b.members) CHECK(s.poly.size() == 1);
  }
  auto a2 = variety("A2", "1,2");
  CHECK(section_basis_glue(a2, DivisorClass::canonical({0, 0})).members.size() == 1);
  const DivisorClass e10 = DivisorClass::effective({1, 0});
  const IVec can = to_canonical(a2, e10).coords;
  CHECK(section_dimension(a2, e10) == bs_character(a2.cartan(), a2.word(), can).dimension());
  CHECK(section_dimension(a2, DivisorClass::effective({-1, 0})) == 0);
}

TEST_CASE("boundary sections") {
  auto a1 = variety("A1", "1");
  CHECK(boundary_section(a1, 0).poly == Poly::variable(1, 0));
  auto a2 = variety("A2", "1,2");
  const SectionPoly s2 = boundary_section(a2, 1);
  for (const auto& [a, c] : s2.poly.terms()) CHECK(a[1] >= 1);
  for (const auto& word : {"1,2", "1,2,1"}) {
    auto bs = variety("A2", word);
    for (size_t j = 0; j < bs.n(); ++j) CHECK(valuation(boundary_section(bs, j))[j] >= 1);
  }
  // Weight of t_1 is the bundle weight minus alpha_1.
  const SectionPoly s1 = boundary_section(a2, 0);
  CHECK(s1.weight == a2.monomial_weight(s1.multidegree.coords, {1, 0}));
}

TEST_CASE("fixed part peeling") {
  auto a2 = variety("A2", "1,2");
  for (const auto& can : {IVec{1, 1}, IVec{0, 2}, IVec{2, 0}}) {
    const auto r = fixed_part_peel(a2, DivisorClass::canonical(can), 1);
    CHECK(r.fixed.is_zero());
  }
  const auto z2 = fixed_part_peel(a2, DivisorClass::effective({0, 1}), 1);
  CHECK(section_dimension(a2, DivisorClass::effective({0, 1})) == 1);
  CHECK(z2.fixed == DivisorClass::effective({0, 1}));
  CHECK(z2.movable_dim == 1);
  for (const auto& e : {IVec{0, 1}, IVec{1, 2}, IVec{1, 3}}) {
    const DivisorClass d = DivisorClass::effective(e);
    const auto base = fixed_part_peel(a2, d, 1).fixed;
    for (long long k = 2; k <= 3; ++k) CHECK(fixed_part_peel(a2, d, k).fixed == base.scaled(k));
  }
}

TEST_CASE("nef and gluing oracles agree") {
  const std::vector<std::pair<std::string, std::string>> cases{{"A1", "1"}, {"A2", "1,2"}, {"A2", "1,2,1"}, {"B2", "1,2"}};
  for (const auto& [type, word] : cases) {
    auto bs = variety(type, word);
    const long long cap = bs.n() >= 3 ? 2 : 3;
    for (const auto& m : box(bs.n(), 0, cap)) {
      const DivisorClass d = DivisorClass::canonical(m);
      const auto nef = section_basis_nef(bs, d);
      const auto glue = section_basis_glue(bs, d);
      const long long ch = bs_character(bs.cartan(), bs.word(), m).dimension();
      CHECK(static_cast<long long>(nef.members.size()) == ch);
      CHECK(static_cast<long long>(glue.members.size()) == ch);
      CHECK(joint_rank(nef, glue) == nef.members.size());
    }
  }
}

TEST_CASE("torus grading matches the character") {
  const std::vector<std::pair<std::string, std::string>> cases{{"A2", "1,2"}, {"A2", "1,2,1"}, {"B2", "1,2"}, {"G2", "2,1"}};
  for (const auto& [type, word] : cases) {
    auto bs = variety(type, word);
    for (const auto& m : box(bs.n(), 0, 2)) {
      const auto b = section_basis(bs, DivisorClass::canonical(m));
      CHECK(basis_character(b) == bs_character(bs.cartan(), bs.word(), m));
      for (const auto& s : b.members)
        for (const auto& [a, c] : s.poly.terms()) CHECK(bs.monomial_weight(m, a) == s.weight);
    }
  }
}

TEST_CASE("equivariance law at random points") {
  std::mt19937_64 rng(2024);
  const std::vector<std::tuple<std::string, std::string, IVec>> cases{
      {"A2", "1,2", {1, 1}}, {"A2", "1,2,1", {0, 1, 1}}, {"B2", "1,2", {1, 1}}};
  for (const auto& [type, word, m] : cases) {
    auto bs = variety(type, word);
    const auto b = section_basis(bs, DivisorClass::canonical(m));
    const int rank = bs.cartan().rank();
    for (int trial = 0; trial < 20; ++trial) {
      QVec t(bs.n());
      for (auto& x : t) x = random_q(rng);
      const PwPoint p = big_cell_point(bs, t);
      std::vector<BorelElement> borel;
      for (size_t k = 0; k < bs.n(); ++k) {
        QVec torus(static_cast<size_t>(rank));
        for (auto& x : torus) x = random_q(rng) + 10;
        borel.push_back(borel_element(bs.group(), torus, {{0, random_q(rng)}, {rank - 1, random_q(rng)}}));
      }
      const PwPoint moved = right_action(p, borel);
      for (const auto& s : b.members) {
        const Q at = section_value(bs, s, p);
        CHECK(at == s.poly.evaluate(t));
        Q chi = 1;
        for (size_t k = 0; k < bs.n(); ++k) chi *= power(borel_character(bs, k, borel[k].g), m[k]);
        CHECK(section_value(bs, s, moved) == chi * at);
      }
    }
  }
}

TEST_CASE("products of sections are sections") {
  auto bs = variety("A2", "1,2,1");
  const std::vector<std::pair<IVec, IVec>> pairs{{{1, 0, 0}, {0, 1, 0}}, {{0, 1, 1}, {1, 0, 1}}, {{0, 0, 1}, {0, 1, 1}}};
  for (const auto& [m1, m2] : pairs) {
    IVec sum(3);
    for (size_t i = 0; i < 3; ++i) sum[i] = m1[i] + m2[i];
    const auto b1 = section_basis_glue(bs, DivisorClass::canonical(m1));
    const auto b2 = section_basis_glue(bs, DivisorClass::canonical(m2));
    const auto b = section_basis_glue(bs, DivisorClass::canonical(sum));
    for (const auto& s1 : b1.members)
      for (const auto& s2 : b2.members) CHECK(in_span(b, s1.poly * s2.poly));
  }
}

TEST_CASE("divisor classes of boundary sections") {
  auto bs = variety("A2", "1,2,1");
  for (size_t j = 0; j < 3; ++j) {
    const SectionPoly s = boundary_section(bs, j);
    CHECK(divisor_class_of(bs, s.poly) == s.multidegree.coords);
    CHECK(s.multidegree.coords[j] == 1);
  }
  // A product has the sum of the classes.
  const Poly p = boundary_section(bs, 0).poly * boundary_section(bs, 2).poly;
  IVec expect(3);
  for (size_t i = 0; i < 3; ++i)
    expect[i] = boundary_section(bs, 0).multidegree.coords[i] + boundary_section(bs, 2).multidegree.coords[i];
  CHECK(divisor_class_of(bs, p) == expect);
}

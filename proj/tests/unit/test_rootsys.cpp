#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Product over positive roots of <lambda + rho, beta^vee> / <rho, beta^vee>
// for A2, written out: (a+1)(b+1)(a+b+2)/2.
long long a2_dimension(long long a, long long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

Character random_character(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> coord(-3, 3), mult(1, 3), count(1, 5);
  Character f;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Weight w(static_cast<size_t>(rank));
    for (auto& x : w) x = coord(rng);
    f.add(w, mult(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("weyl group orders") {
  CHECK(weyl_group_order(CartanDatum::type_A(1)) == 2);
  CHECK(weyl_group_order(CartanDatum::type_A(2)) == 6);
  CHECK(weyl_group_order(CartanDatum::type_B(2)) == 8);
  CHECK(weyl_group_order(CartanDatum::type_G2()) == 12);
  CHECK(weyl_group_order(CartanDatum::type_A(3)) == 24);
  CHECK(weyl_group_order(CartanDatum::type_C(3)) == 48);
  CHECK(weyl_group_order(CartanDatum::type_D(4)) == 192);
  CHECK(weyl_group_order(CartanDatum::parse("A1xA1")) == 4);
}

TEST_CASE("cartan validation") {
  CHECK_THROWS_AS(CartanDatum({{2, 1}, {-1, 2}}), Error);
  CHECK_THROWS_AS(CartanDatum({{2, -2}, {-2, 2}}), Error);  // affine, det 0
  CHECK_THROWS_AS(CartanDatum::parse("Q7"), Error);
  CHECK(CartanDatum::type_B(2).matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
}

TEST_CASE("reduced words") {
  const auto a2 = CartanDatum::type_A(2);
  CHECK(is_reduced(a2, WeylWord::parse("1,2,1")));
  CHECK(is_reduced(a2, WeylWord::parse("2,1,2")));
  CHECK_FALSE(is_reduced(a2, WeylWord::parse("1,2,1,2")));
  CHECK_FALSE(is_reduced(a2, WeylWord::parse("1,1")));
  CHECK_FALSE(is_reduced(CartanDatum::type_B(2), WeylWord::parse("2,2")));
  CHECK(is_reduced(a2, WeylWord{}));
  CHECK(is_reduced(CartanDatum::type_B(2), WeylWord::parse("1,2,1,2")));
}

TEST_CASE("simple reflections fix the coordinate convention") {
  for (const auto& c : {CartanDatum::type_A(2), CartanDatum::type_B(2), CartanDatum::type_G2(), CartanDatum::type_C(3)})
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) {
        Weight expect = c.fundamental_weight(j);
        if (i == j)
          for (size_t k = 0; k < expect.size(); ++k) expect[k] -= c.simple_root(i)[k];
        CHECK(simple_reflection(c, i, c.fundamental_weight(j)) == expect);
      }
}

TEST_CASE("simple reflections are involutions permuting the roots") {
  for (const auto& c : {CartanDatum::type_A(3), CartanDatum::type_B(3), CartanDatum::type_G2()}) {
    std::set<Weight> roots;
    for (const auto& beta : c.positive_roots()) {
      const Weight w = c.root_to_weight(beta);
      roots.insert(w);
      Weight neg = w;
      for (auto& x : neg) x = -x;
      roots.insert(neg);
    }
    for (int i = 0; i < c.rank(); ++i)
      for (const auto& r : roots) {
        CHECK(simple_reflection(c, i, simple_reflection(c, i, r)) == r);
        CHECK(roots.count(simple_reflection(c, i, r)) == 1);
      }
  }
}

TEST_CASE("demazure operator examples") {
  const auto a1 = CartanDatum::type_A(1);
  CHECK(demazure_operator(a1, 0, Character::monomial({0})) == Character::monomial({0}));
  for (long long m = 0; m <= 6; ++m) {
    // Geometric series e^{m} + e^{m-2} + ... + e^{-m}.
    Character expect;
    for (long long j = 0; j <= m; ++j) expect.add({m - 2 * j}, 1);
    CHECK(demazure_operator(a1, 0, Character::monomial({m})) == expect);
  }
  const auto a2 = CartanDatum::type_A(2);
  CHECK(demazure_operator(a2, 0, Character::monomial({-1, 3})).is_zero());
  CHECK(demazure_operator(a2, 1, Character::monomial({4, -1})).is_zero());
}

TEST_CASE("demazure operators are projectors") {
  std::mt19937_64 rng(11);
  for (const auto& c : {CartanDatum::type_A(2), CartanDatum::type_B(2), CartanDatum::type_G2()})
    for (int trial = 0; trial < 20; ++trial) {
      const Character f = random_character(rng, c.rank());
      for (int i = 0; i < c.rank(); ++i) {
        const Character once = demazure_operator(c, i, f);
        CHECK(demazure_operator(c, i, once) == once);
      }
    }
}

TEST_CASE("bott-samelson characters") {
  const auto a1 = CartanDatum::type_A(1);
  const auto a2 = CartanDatum::type_A(2);
  CHECK(bs_character(a2, WeylWord::parse("1,2"), {0, 0}) == Character::monomial({0, 0}));
  for (long long d = 0; d <= 5; ++d) CHECK(bs_character(a1, WeylWord::parse("1"), {d}).dimension() == d + 1);
  const Character c = bs_character(a2, WeylWord::parse("1,2"), {0, 1});
  CHECK(c.dimension() == 3);
  CHECK_THROWS_AS(bs_character(a2, WeylWord::parse("1,2"), {1}), Error);
}

TEST_CASE("bott-samelson multiplicities are nonnegative") {
  for (const auto& [type, word] : std::vector<std::pair<std::string, std::string>>{
           {"A2", "1,2,1"}, {"B2", "1,2,1,2"}, {"A2", "2,1,1"}, {"G2", "1,2"}}) {
    const auto c = CartanDatum::parse(type);
    const auto w = WeylWord::parse(word);
    for (const auto& m : box(w.size(), 0, 2)) {
      const Character ch = bs_character(c, w, m);
      CHECK(ch.all_nonnegative());
      Weight top(static_cast<size_t>(c.rank()), 0);
      for (size_t k = 0; k < w.size(); ++k) top[w.index(k)] += m[k];
      // Every weight lies below the top one in the root order.
      for (const auto& [mu, mult] : ch.terms()) {
        Weight diff = top;
        for (size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
        for (const auto& x : weight_to_root_coords(c, diff)) CHECK(x >= 0);
      }
    }
  }
}

TEST_CASE("weyl dimension") {
  const auto a2 = CartanDatum::type_A(2);
  CHECK(weyl_dimension(a2, {0, 0}) == 1);
  for (long long m = 0; m <= 6; ++m) CHECK(weyl_dimension(CartanDatum::type_A(1), {m}) == m + 1);
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  for (long long a = 0; a <= 4; ++a)
    for (long long b = 0; b <= 4; ++b) CHECK(weyl_dimension(a2, {a, b}) == a2_dimension(a, b));
  CHECK(weyl_dimension(CartanDatum::type_G2(), {1, 0}) == 14);
  CHECK(weyl_dimension(CartanDatum::type_G2(), {0, 1}) == 7);
  CHECK_THROWS_AS(weyl_dimension(a2, {-1, 0}), Error);
}

TEST_CASE("longest-element words give the Weyl dimension") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"A1", {"1"}}, {"A2", {"1,2,1", "2,1,2"}}, {"B2", {"1,2,1,2", "2,1,2,1"}}};
  for (const auto& [type, words] : cases) {
    const auto c = CartanDatum::parse(type);
    for (const auto& word : words)
      for (const auto& lam : box(static_cast<size_t>(c.rank()), 0, 3)) {
        const Weight lambda(lam.begin(), lam.end());
        CHECK(demazure_character(c, WeylWord::parse(word), lambda).dimension() == weyl_dimension(c, lambda));
      }
  }
}

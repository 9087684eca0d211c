#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("effective and nef criteria") {
  auto a2 = variety("A2", "1,2");
  auto a2b = variety("A2", "1,2,1");
  CHECK(is_effective(a2b, DivisorClass::effective({1, 0, 2})));
  CHECK(is_effective(a2, DivisorClass::effective({0, 0})));
  CHECK_FALSE(is_effective(a2, DivisorClass::effective({-1, 0})));
  CHECK(is_nef(a2, DivisorClass::canonical({1, 1})));
  CHECK(is_nef(a2, DivisorClass::canonical({0, 0})));
  CHECK_FALSE(is_nef(a2, DivisorClass::canonical({0, -1})));
  // Mixed-basis queries convert first.
  CHECK(is_effective(a2, DivisorClass::canonical({0, 1})));
  CHECK_FALSE(is_nef(a2, DivisorClass::effective({0, 1})));
}

TEST_CASE("basis change matrices") {
  for (const auto& type : {"A1", "A2", "B2", "G2"}) {
    auto bs = variety(type, "1");
    CHECK(bs.basis_change().m == std::vector<IVec>{{1}});
  }
  CHECK(variety("A2", "1,2").basis_change().m == std::vector<IVec>{{1, -1}, {0, 1}});
  CHECK(variety("B2", "1,2").basis_change().m == std::vector<IVec>{{1, -1}, {0, 1}});
  CHECK(variety("A2", "1,2,1").basis_change().m == std::vector<IVec>{{1, -1, 1}, {0, 1, -1}, {0, 0, 1}});
  for (const auto& [type, word] : std::vector<std::pair<std::string, std::string>>{{"A2", "1,2"}, {"A2", "1,2,1"}, {"B2", "2,1"}}) {
    auto bs = variety(type, word);
    const auto& bc = bs.basis_change();
    for (size_t j = 0; j < bs.n(); ++j) CHECK(bc.m[j][j] == 1);
    CHECK(to_canonical(bs, DivisorClass::effective(IVec(bs.n(), 0))).coords == IVec(bs.n(), 0));
  }
}

TEST_CASE("effective cone oracle on A2 (1,2)") {
  // A class has sections iff it is a nonnegative combination of the boundary divisors.
  auto bs = variety("A2", "1,2");
  const auto& m = bs.basis_change().m;
  for (const auto& c : box(2, -3, 3)) {
    const long long dim = section_dimension(bs, DivisorClass::canonical(c));
    bool in_cone = false;
    for (const auto& e : box(2, 0, 6)) {
      if (m[0][0] * e[0] + m[0][1] * e[1] == c[0] && m[1][0] * e[0] + m[1][1] * e[1] == c[1]) in_cone = true;
    }
    CHECK_MESSAGE((dim > 0) == in_cone, "class can:" << c[0] << "," << c[1]);
  }
}

TEST_CASE("round trip between bases") {
  for (const auto& [type, word] : std::vector<std::pair<std::string, std::string>>{{"A2", "1,2"}, {"A2", "1,2,1"}, {"B2", "1,2"}}) {
    auto bs = variety(type, word);
    const long long r = bs.n() >= 3 ? 3 : 5;
    for (const auto& c : box(bs.n(), -r, r)) {
      const DivisorClass e = DivisorClass::effective(c);
      CHECK(to_effective(bs, to_canonical(bs, e)) == e);
      const DivisorClass k = DivisorClass::canonical(c);
      CHECK(to_canonical(bs, to_effective(bs, k)) == k);
    }
  }
}

TEST_CASE("nef classes are effective") {
  for (const auto& [type, word] : std::vector<std::pair<std::string, std::string>>{
           {"A1", "1"}, {"A2", "1,2"}, {"A2", "1,2,1"}, {"B2", "1,2"}, {"B2", "2,1,2"}, {"G2", "1,2"}}) {
    auto bs = variety(type, word);
    for (const auto& c : box(bs.n(), 0, 4)) CHECK(is_effective(bs, DivisorClass::canonical(c)));
  }
}

TEST_CASE("volumes") {
  CHECK(volume(variety("A1", "1"), DivisorClass::canonical({4})) == 4);
  auto a2 = variety("A2", "1,2");
  CHECK(volume(a2, DivisorClass::canonical({0, 0})) == 0);
  CHECK(volume(a2, DivisorClass::canonical({0, 1})) == 1);
  CHECK_THROWS_AS(volume(a2, DivisorClass::canonical({0, -1})), Error);
  for (const auto& [type, word, m] : std::vector<std::tuple<std::string, std::string, IVec>>{
           {"A2", "1,2", {1, 1}}, {"A2", "1,2,1", {0, 1, 1}}, {"B2", "1,2", {1, 2}}}) {
    auto bs = variety(type, word);
    const Q v = volume(bs, DivisorClass::canonical(m));
    CHECK(v > 0);
    for (long long k = 1; k <= 3; ++k) {
      Q kn = 1;
      for (size_t i = 0; i < bs.n(); ++i) kn *= static_cast<long>(k);
      CHECK(volume(bs, DivisorClass::canonical(m).scaled(k)) == kn * v);
    }
  }
  // Hilbert values agree with the character.
  auto hv = hilbert_values(a2, DivisorClass::canonical({0, 1}), 4);
  CHECK(hv == std::vector<long long>{1, 3, 6, 10, 15});
}

TEST_CASE("pullbacks from the flag variety") {
  CHECK(pullback_from_flag_variety(variety("A2", "1,2"), {0, 0}).coords == IVec{0, 0});
  for (long long m = 0; m <= 4; ++m)
    CHECK(pullback_from_flag_variety(variety("A1", "1"), {m}) == DivisorClass::canonical({m}));
  CHECK(pullback_from_flag_variety(variety("A2", "1,2"), {0, 1}) == DivisorClass::canonical({0, 1}));
  CHECK(pullback_from_flag_variety(variety("A2", "1,2,1"), {1, 1}) == DivisorClass::canonical({0, 1, 1}));
  // The matched class reproduces the Demazure character.
  auto bs = variety("B2", "1,2,1");
  for (const auto& lambda : box(2, 0, 2)) {
    const DivisorClass d = pullback_from_flag_variety(bs, Weight(lambda.begin(), lambda.end()));
    CHECK(bs_character(bs.cartan(), bs.word(), d.coords) ==
          demazure_character(bs.cartan(), bs.word(), Weight(lambda.begin(), lambda.end())));
  }
}

TEST_CASE("truncated word gives the leading block") {
  for (const auto& [type, word, head] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"A2", "1,2", "1"}, {"A2", "1,2,1", "1,2"}, {"A1xA1", "1,2", "1"}, {"B2", "1,2,1", "1,2"}}) {
    auto whole = variety(type, word);
    auto truncated = variety(type, head);
    const auto& full = whole.basis_change().m;
    const auto& part = truncated.basis_change().m;
    for (size_t r = 0; r < part.size(); ++r)
      for (size_t c = 0; c < part.size(); ++c) CHECK(full[r][c] == part[r][c]);
  }
  // Orthogonal reflections do not interact.
  CHECK(variety("A1xA1", "1,2").basis_change().m == std::vector<IVec>{{1, 0}, {0, 1}});
}

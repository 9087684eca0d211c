#pragma once

// Small helpers shared by the unit tests.

#include "okbody/okbody.hpp"

#include <random>
#include <set>

namespace testing {

using namespace okbody;

inline BottSamelson variety(const std::string& type, const std::string& word) {
  return BottSamelson(CartanDatum::parse(type), WeylWord::parse(word));
}

inline Q q(long num, long den = 1) {
  Q r{Z(num), Z(den)};
  r.canonicalize();
  return r;
}

inline QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline ZVec zv(std::initializer_list<long> xs) {
  ZVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Q random_q(std::mt19937_64& rng, long num = 9, long den = 5) {
  std::uniform_int_distribution<long> a(-num, num), b(1, den);
  return q(a(rng), b(rng));
}

/// Every integer vector with entries in [lo, hi].
inline std::vector<IVec> box(size_t n, long long lo, long long hi) {
  std::vector<IVec> out;
  IVec v(n, lo);
  while (true) {
    out.push_back(v);
    size_t j = 0;
    while (j < n && v[j] == hi) v[j++] = lo;
    if (j == n) break;
    ++v[j];
  }
  return out;
}

}  // namespace testing

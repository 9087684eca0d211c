#include "okbody/picard.hpp"

#include "cache.hpp"
#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"
#include "okbody/sections.hpp"

#include <functional>

namespace okbody {

namespace {

void check_length(const BottSamelson& bs, const DivisorClass& d) {
  require(d.coords.size() == bs.n(), ErrorCode::InvalidInput,
          "class " + d.to_string() + " has length " + std::to_string(d.coords.size()) + ", word has " +
              std::to_string(bs.n()));
}

IVec apply_int(const std::vector<IVec>& m, const IVec& x) {
  IVec out(m.size(), 0);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  return out;
}

}  // namespace

const BasisChange& BottSamelson::basis_change() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->basis_change) cache_->basis_change = compute_basis_change(*this, probe_radius_);
  return *cache_->basis_change;
}

BasisChange compute_basis_change(const BottSamelson& bs, int probe_radius) {
  const size_t n = bs.n();
  BasisChange out;
  out.m.assign(n, IVec(n, 0));
  for (size_t j = 0; j < n; ++j) {
    const IVec col = boundary_section(bs, j).multidegree.coords;
    for (size_t k = 0; k < n; ++k) out.m[k][j] = col[k];
    require(col[j] == 1, ErrorCode::VerificationFailure,
            "boundary class " + std::to_string(j + 1) + " has diagonal entry " + std::to_string(col[j]));
  }
  QMat mq(n, QVec(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) mq[r][c] = static_cast<long>(out.m[r][c]);
  auto inv = inverse(mq);
  require(inv.has_value(), ErrorCode::VerificationFailure, "basis change is singular");
  out.inverse = *inv;

  // Dimension probes over the box |m_i| <= r, restricted to classes with nef image.
  IVec e(n, -probe_radius);
  while (probe_radius >= 0) {
    const IVec can = apply_int(out.m, e);
    bool nef = true;
    for (auto x : can) nef = nef && x >= 0;
    if (nef) {
      const long long expect = bs_character(bs.cartan(), bs.word(), can).dimension();
      const long long got = section_dimension(bs, DivisorClass::canonical(can));
      require(expect == got, ErrorCode::VerificationFailure,
              "dimension probe failed at " + DivisorClass::effective(e).to_string() + ": character " +
                  std::to_string(expect) + " vs gluing " + std::to_string(got));
    }
    size_t j = 0;
    while (j < n) {
      if (e[j] < probe_radius) {
        ++e[j];
        break;
      }
      e[j] = -probe_radius;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

DivisorClass to_canonical(const BottSamelson& bs, const DivisorClass& d) {
  check_length(bs, d);
  if (d.basis == Basis::Canonical) return d;
  return DivisorClass::canonical(apply_int(bs.basis_change().m, d.coords));
}

DivisorClass to_effective(const BottSamelson& bs, const DivisorClass& d) {
  check_length(bs, d);
  if (d.basis == Basis::Effective) return d;
  QVec x(d.coords.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<long>(d.coords[i]);
  const QVec y = okbody::apply(bs.basis_change().inverse, x);
  IVec out(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    require(y[i].get_den() == 1, ErrorCode::Internal, "basis change inverse is not integral");
    out[i] = to_ll(y[i].get_num());
  }
  return DivisorClass::effective(out);
}

bool is_effective(const BottSamelson& bs, const DivisorClass& d) {
  for (auto x : to_effective(bs, d).coords)
    if (x < 0) return false;
  return true;
}

bool is_nef(const BottSamelson& bs, const DivisorClass& d) {
  for (auto x : to_canonical(bs, d).coords)
    if (x < 0) return false;
  return true;
}

std::vector<long long> hilbert_values(const BottSamelson& bs, const DivisorClass& d, long long kmax) {
  require(is_nef(bs, d), ErrorCode::NotNef, "class " + d.to_string() + " is not nef");
  const IVec can = to_canonical(bs, d).coords;
  std::vector<long long> out;
  for (long long k = 0; k <= kmax; ++k) {
    IVec m = can;
    for (auto& x : m) x *= k;
    out.push_back(bs_character(bs.cartan(), bs.word(), m).dimension());
  }
  return out;
}

Q volume(const BottSamelson& bs, const DivisorClass& d) {
  const size_t n = bs.n();
  // The n-th forward difference of a degree-n polynomial at 0 is n! times its leading coefficient.
  std::vector<Z> diff;
  for (auto v : hilbert_values(bs, d, static_cast<long long>(n) + 1)) diff.emplace_back(static_cast<long>(v));
  for (size_t level = 0; level < n; ++level)
    for (size_t i = 0; i + 1 < diff.size() - level; ++i) diff[i] = diff[i + 1] - diff[i];
  // diff[0], diff[1] now hold the n-th differences at k = 0 and k = 1.
  require(diff[0] == diff[1], ErrorCode::VerificationFailure,
          "k -> dim H^0(kD) is not a polynomial of degree n on the oversampled range");
  return Q(diff[0]);
}

DivisorClass pullback_from_flag_variety(const BottSamelson& bs, const Weight& lambda) {
  const CartanDatum& c = bs.cartan();
  const size_t rank = static_cast<size_t>(c.rank());
  require(lambda.size() == rank, ErrorCode::InvalidInput, "weight has the wrong rank");
  for (auto x : lambda) require(x >= 0, ErrorCode::InvalidInput, "weight is not dominant");
  const size_t n = bs.n();
  const Character target = demazure_character(c, bs.word(), lambda);
  std::vector<std::vector<size_t>> slots(rank);
  for (size_t k = 0; k < n; ++k) slots[bs.word().index(k)].push_back(k);
  for (size_t i = 0; i < rank; ++i)
    require(lambda[i] == 0 || !slots[i].empty(), ErrorCode::NoMatch,
            "weight has support on a simple reflection missing from the word");
  std::vector<IVec> matches;
  IVec m(n, 0);
  // Distribute lambda_i over the positions carrying letter i, recursively.
  std::function<void(size_t, size_t, long long)> place = [&](size_t i, size_t slot, long long left) {
    if (i == rank) {
      if (bs_character(c, bs.word(), m) == target) matches.push_back(m);
      return;
    }
    if (slots[i].empty()) return place(i + 1, 0, i + 1 < rank ? lambda[i + 1] : 0);
    const size_t pos = slots[i][slot];
    if (slot + 1 == slots[i].size()) {
      m[pos] = left;
      place(i + 1, 0, i + 1 < rank ? lambda[i + 1] : 0);
      m[pos] = 0;
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      m[pos] = v;
      place(i, slot + 1, left - v);
    }
    m[pos] = 0;
  };
  place(0, 0, lambda.empty() ? 0 : lambda[0]);
  require(!matches.empty(), ErrorCode::NoMatch, "no class has the Demazure character of the weight");
  require(matches.size() == 1, ErrorCode::Ambiguous, "several classes share the Demazure character of the weight");
  return DivisorClass::canonical(matches[0]);
}

}  // namespace okbody

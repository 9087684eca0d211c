#include "okbody/univariate.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <sstream>

namespace okbody {

UniPoly::UniPoly(const Q& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::x() {
  UniPoly p;
  p.c_ = {Q(0), Q(1)};
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Q(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  require(!b.is_zero(), ErrorCode::Internal, "polynomial division by zero");
  q = UniPoly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.assign(static_cast<size_t>(a.degree() - b.degree() + 1), Q(0));
  const Q inv = 1 / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const size_t shift = static_cast<size_t>(r.degree() - b.degree());
    const Q factor = r.leading() * inv;
    q.c_[shift] = factor;
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] -= factor * b.c_[i];
    r.trim();
  }
  q.trim();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Q inv = 1 / a.leading();
  for (auto& c : a.c_) c *= inv;
  return a;
}

Q UniPoly::evaluate(const Q& at) const {
  Q acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  require(!den_.is_zero(), ErrorCode::Internal, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(Q(1));
    return;
  }
  if (den_.degree() > 0) {
    const UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      UniPoly q, r;
      UniPoly::divmod(num_, g, q, r);
      num_ = q;
      UniPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  const Q lead = den_.leading();
  if (lead != 1) {
    const UniPoly inv(1 / lead);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

int RatFunc::valuation() const {
  require(!is_zero(), ErrorCode::Internal, "valuation of zero rational function");
  return num_.valuation() - den_.valuation();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  require(!b.is_zero(), ErrorCode::Internal, "rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RatFunc::to_string() const {
  auto show = [](const UniPoly& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i) os << ",";
      os << p.coeffs()[i].get_str();
    }
    os << ")";
    return os.str();
  };
  return show(num_) + "/" + show(den_);
}

Laurent Laurent::expand(const RatFunc& f, size_t precision) {
  Laurent out;
  if (f.is_zero()) return out;
  const int vn = f.num().valuation();
  const int vd = f.den().valuation();
  out.val_ = vn - vd;
  // Power series division of x^{-vn} num by x^{-vd} den.
  const QVec& n = f.num().coeffs();
  const QVec& d = f.den().coeffs();
  auto ncoef = [&](size_t i) { return i + static_cast<size_t>(vn) < n.size() ? n[i + static_cast<size_t>(vn)] : Q(0); };
  auto dcoef = [&](size_t i) { return i + static_cast<size_t>(vd) < d.size() ? d[i + static_cast<size_t>(vd)] : Q(0); };
  const size_t len = precision + 1;
  const Q inv = 1 / dcoef(0);
  out.unit_.assign(len, Q(0));
  for (size_t i = 0; i < len; ++i) {
    Q acc = ncoef(i);
    for (size_t j = 1; j <= i; ++j) {
      const Q dj = dcoef(j);
      if (dj != 0) acc -= dj * out.unit_[i - j];
    }
    out.unit_[i] = acc * inv;
  }
  return out;
}

Q Laurent::coeff(int e) const {
  const int idx = e - val_;
  if (idx < 0) return 0;
  require(static_cast<size_t>(idx) < unit_.size(), ErrorCode::Internal, "Laurent coefficient beyond precision");
  return unit_[static_cast<size_t>(idx)];
}

Laurent Laurent::truncated(size_t precision) const {
  Laurent out = *this;
  if (out.unit_.size() > precision) out.unit_.resize(precision);
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  if (a.is_zero() || b.is_zero()) return out;
  const size_t len = std::min(a.unit_.size(), b.unit_.size());
  out.val_ = a.val_ + b.val_;
  out.unit_.assign(len, Q(0));
  for (size_t i = 0; i < len; ++i) {
    if (a.unit_[i] == 0) continue;
    for (size_t j = 0; i + j < len; ++j) out.unit_[i + j] += a.unit_[i] * b.unit_[j];
  }
  return out;
}

Laurent Laurent::pow(long long e, size_t precision) const {
  require(!is_zero() || e > 0, ErrorCode::Internal, "nonpositive power of zero series");
  Laurent base = truncated(precision);
  if (e < 0) {
    // Invert the unit part by the usual recurrence.
    Laurent inv;
    inv.val_ = -base.val_;
    const size_t len = base.unit_.size();
    inv.unit_.assign(len, Q(0));
    const Q c0 = 1 / base.unit_[0];
    for (size_t i = 0; i < len; ++i) {
      Q acc = i == 0 ? Q(1) : Q(0);
      for (size_t j = 1; j <= i; ++j) acc -= base.unit_[j] * inv.unit_[i - j];
      inv.unit_[i] = acc * c0;
    }
    base = inv;
    e = -e;
  }
  Laurent result;
  result.val_ = 0;
  result.unit_.assign(base.unit_.size(), Q(0));
  if (!result.unit_.empty()) result.unit_[0] = 1;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace okbody

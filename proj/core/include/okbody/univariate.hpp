#pragma once

// Univariate polynomials, rational functions and truncated Laurent series in one
// variable x over Q. Used for chart transitions, where every coordinate but one
// is specialised to a rational number.

#include "okbody/rational.hpp"

#include <string>

namespace okbody {

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Q& c);  // NOLINT: constants convert implicitly
  static UniPoly x();

  const QVec& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Q& leading() const { return c_.back(); }
  Q coeff(size_t i) const { return i < c_.size() ? c_[i] : Q(0); }
  /// Order of vanishing at x = 0; -1 for the zero polynomial.
  int valuation() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q b + r with deg r < deg b.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  static UniPoly gcd(UniPoly a, UniPoly b);

  Q evaluate(const Q& at) const;

 private:
  void trim();
  QVec c_;
};

class RatFunc {
 public:
  RatFunc() : num_(Q(0)), den_(Q(1)) {}
  RatFunc(const Q& c) : num_(c), den_(Q(1)) {}  // NOLINT
  RatFunc(const UniPoly& num, const UniPoly& den);
  static RatFunc x() { return RatFunc(UniPoly::x(), UniPoly(Q(1))); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Order at x = 0 (negative for a pole). Requires nonzero.
  int valuation() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  UniPoly num_, den_;
};

/// x^val * (c_0 + c_1 x + ... + c_{p-1} x^{p-1} + O(x^p)) with c_0 != 0, or zero.
class Laurent {
 public:
  Laurent() = default;
  /// Expansion of f at x = 0 with `precision` coefficients after the leading one.
  static Laurent expand(const RatFunc& f, size_t precision);

  bool is_zero() const { return unit_.empty(); }
  int valuation() const { return val_; }
  size_t precision() const { return unit_.size(); }
  const QVec& unit() const { return unit_; }

  /// Coefficient of x^e, valid when val <= e < val + precision.
  Q coeff(int e) const;

  Laurent truncated(size_t precision) const;
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent pow(long long e, size_t precision) const;  // negative e allowed

 private:
  int val_ = 0;
  QVec unit_;
};

}  // namespace okbody

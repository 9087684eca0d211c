#pragma once

// Sparse multivariate polynomials over Q in a fixed number of variables.
// Terms are keyed by exponent vectors compared lexicographically, so the first
// term of the map is the lex-minimal monomial (t_1 weighted heaviest).

#include "okbody/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace okbody {

using Exponent = std::vector<int>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(size_t nvars) : nvars_(nvars) {}
  Poly(size_t nvars, const Q& constant);

  static Poly variable(size_t nvars, size_t j);
  static Poly monomial(const Exponent& a, const Q& coeff = 1);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Exponent, Q>& terms() const { return terms_; }

  /// Lex-minimal exponent; requires a nonzero polynomial.
  const Exponent& lead() const;
  const Q& lead_coeff() const;
  Q coeff(const Exponent& a) const;

  void add_term(const Exponent& a, const Q& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Q& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Largest exponent of variable j (0 for the zero polynomial).
  int degree_in(size_t j) const;

  Q evaluate(const QVec& point) const;

  /// Evaluates with values in any commutative ring S constructible from Q.
  template <class S>
  S evaluate_in(const std::vector<S>& point, const S& one) const {
    S total = one * Q(0);
    for (const auto& [a, c] : terms_) {
      S term = one * c;
      for (size_t j = 0; j < a.size(); ++j)
        for (int e = 0; e < a[j]; ++e) term = term * point[j];
      total = total + term;
    }
    return total;
  }

  /// Sets variable j to zero and drops it, giving a polynomial in nvars-1 variables.
  Poly restrict_to_zero(size_t j) const;

  /// Makes the lex-minimal coefficient 1.
  Poly monic() const;

  std::string to_string() const;

 private:
  size_t nvars_ = 0;
  std::map<Exponent, Q> terms_;
};

}  // namespace okbody

#include "okbody/polynomial.hpp"

#include "okbody/errors.hpp"

#include <sstream>

namespace okbody {

Poly::Poly(size_t nvars, const Q& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Exponent(nvars, 0), constant);
}

Poly Poly::variable(size_t nvars, size_t j) {
  Exponent a(nvars, 0);
  a[j] = 1;
  return monomial(a);
}

Poly Poly::monomial(const Exponent& a, const Q& coeff) {
  Poly p(a.size());
  p.add_term(a, coeff);
  return p;
}

const Exponent& Poly::lead() const {
  require(!terms_.empty(), ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Q& Poly::lead_coeff() const {
  require(!terms_.empty(), ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

Q Poly::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Q(0) : it->second;
}

void Poly::add_term(const Exponent& a, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  return out;
}

int Poly::degree_in(size_t j) const {
  int d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, a[j]);
  return d;
}

Q Poly::evaluate(const QVec& point) const {
  Q total = 0;
  for (const auto& [a, c] : terms_) {
    Q term = c;
    for (size_t j = 0; j < a.size(); ++j)
      for (int e = 0; e < a[j]; ++e) term *= point[j];
    total += term;
  }
  return total;
}

Poly Poly::restrict_to_zero(size_t j) const {
  Poly out(nvars_ - 1);
  for (const auto& [a, c] : terms_) {
    if (a[j] != 0) continue;
    Exponent b;
    b.reserve(nvars_ - 1);
    for (size_t i = 0; i < nvars_; ++i)
      if (i != j) b.push_back(a[i]);
    out.add_term(b, c);
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead_coeff());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    Q coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    } else if (coeff < 0) {
      os << "-";
      coeff = -coeff;
    }
    first = false;
    bool constant = true;
    for (int e : a) constant = constant && e == 0;
    if (coeff != 1 || constant) os << coeff.get_str();
    bool need_star = coeff != 1;
    for (size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      if (need_star) os << "*";
      os << "t" << (j + 1);
      if (a[j] > 1) os << "^" << a[j];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace okbody

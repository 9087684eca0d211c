#include "okbody/rational.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <cctype>

namespace okbody {

std::string to_string(const Q& q) { return q.get_str(); }
std::string to_string(const Z& z) { return z.get_str(); }

Q parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) fail(ErrorCode::InvalidInput, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    size_t start = part[0] == '-' ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-') fail(ErrorCode::InvalidInput, "bad rational literal '" + s + "'");
  Q q{Z(num), Z(den)};
  if (q.get_den() == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Z common_denominator(const QVec& v) {
  Z l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

ZVec primitive(const ZVec& v) {
  Z g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  ZVec out = v;
  if (g == 0 || g == 1) return out;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

ZVec primitive(const QVec& v) {
  const Z l = common_denominator(v);
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Q scaled = v[i] * l;
    z[i] = scaled.get_num();
  }
  return primitive(z);
}

QVec to_q(const ZVec& v) { return QVec(v.begin(), v.end()); }

QVec to_q(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

ZVec to_z(const IVec& v) {
  ZVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

long long to_ll(const Z& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::Internal, "integer overflow converting " + z.get_str());
  return z.get_si();
}

IVec to_ll(const ZVec& v) {
  IVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_ll(x));
  return out;
}

Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Z dot(const ZVec& a, const ZVec& b) {
  Z s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Q factorial(unsigned n) {
  Z f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Q(f);
}

Z floor(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Z ceil(const Q& q) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace okbody

#include "okbody/variety.hpp"

#include "cache.hpp"
#include "okbody/errors.hpp"

#include <sstream>

namespace okbody {

DivisorClass DivisorClass::parse(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorCode::InvalidInput, "divisor class needs an eff: or can: prefix");
  const std::string tag = text.substr(0, colon);
  DivisorClass d;
  if (tag == "eff") d.basis = Basis::Effective;
  else if (tag == "can") d.basis = Basis::Canonical;
  else fail(ErrorCode::InvalidInput, "unknown divisor basis '" + tag + "'");
  std::stringstream ss(text.substr(colon + 1));
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      d.coords.push_back(std::stoll(part, &used));
      require(used == part.size(), ErrorCode::InvalidInput, "bad divisor coordinate '" + part + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidInput, "bad divisor coordinate '" + part + "'");
    }
  }
  require(!d.coords.empty(), ErrorCode::InvalidInput, "divisor class has no coordinates");
  return d;
}

std::string DivisorClass::to_string() const {
  std::string s = basis == Basis::Effective ? "eff:" : "can:";
  for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
  return s;
}

bool DivisorClass::is_zero() const {
  for (auto x : coords)
    if (x != 0) return false;
  return true;
}

DivisorClass DivisorClass::scaled(long long k) const {
  DivisorClass d = *this;
  for (auto& x : d.coords) x *= k;
  return d;
}

BottSamelson::BottSamelson(CartanDatum c, WeylWord w)
    : BottSamelson(c, std::move(w), GroupModel(c)) {}

BottSamelson::BottSamelson(CartanDatum c, WeylWord w, GroupModel g)
    : cartan_(std::move(c)), word_(std::move(w)), group_(std::make_shared<const GroupModel>(std::move(g))),
      cache_(std::make_shared<Cache>()) {
  require(word_.size() >= 1, ErrorCode::InvalidInput, "word must be nonempty");
  reduced_ = is_reduced(cartan_, word_);
}

Weight BottSamelson::class_weight(const IVec& canonical) const {
  require(canonical.size() == n(), ErrorCode::InvalidInput, "class length differs from word length");
  Weight w(cartan_.rank(), 0);
  for (size_t k = 0; k < n(); ++k) w[word_.index(k)] += canonical[k];
  return w;
}

std::vector<int> BottSamelson::root_shift(const Exponent& a) const {
  std::vector<int> s(cartan_.rank(), 0);
  for (size_t j = 0; j < n(); ++j) s[word_.index(j)] += a[j];
  return s;
}

Weight BottSamelson::monomial_weight(const IVec& canonical, const Exponent& a) const {
  Weight w = class_weight(canonical);
  const Weight shift = cartan_.root_to_weight(root_shift(a));
  for (size_t i = 0; i < w.size(); ++i) w[i] -= shift[i];
  return w;
}

ChartTransition BottSamelson::transition(size_t chart, const QVec& specialization) const {
  require(chart < n(), ErrorCode::Internal, "chart index out of range");
  const GroupModel& g = *group_;
  ChartTransition out;
  out.chart = chart;
  GroupElem<RatFunc> b = g.identity<RatFunc>();
  for (size_t j = 0; j < n(); ++j) {
    const int i = word_.index(j);
    if (j < chart) {
      out.t.emplace_back(specialization[j]);
      out.c.emplace_back(Q(1));
      continue;
    }
    GroupElem<RatFunc> factor = j == chart
                                    ? g.exp_e<RatFunc>(i, RatFunc::x()) * g.lift<RatFunc>(g.sdot(i))
                                    : g.exp_f<RatFunc>(i, RatFunc(specialization[j]));
    const GroupElem<RatFunc> h = b * factor;
    // h = exp(t f_i) b' with b' in B: read c and t off h v_{omega_i}.
    const FundamentalRep& rep = g.rep(i);
    const size_t hi = rep.highest();
    const Mat<RatFunc>& hm = h.rep[i];
    const RatFunc c = hm[hi][hi];
    require(!c.is_zero(), ErrorCode::Internal, "chart point left the big cell");
    size_t r = rep.dim();
    for (size_t u = 0; u < rep.dim(); ++u)
      if (rep.f(i)[u][hi] != 0) r = u;
    require(r < rep.dim(), ErrorCode::Internal, "f_i kills the highest vector of V_omega_i");
    const RatFunc t = hm[r][hi] / (c * RatFunc(rep.f(i)[r][hi]));
    for (size_t u = 0; u < rep.dim(); ++u) {
      RatFunc expect = u == hi ? c : RatFunc(Q(0));
      expect += c * t * RatFunc(rep.f(i)[u][hi]);
      require(hm[u][hi] == expect, ErrorCode::Internal, "chart factor is not in the big cell form");
    }
    b = g.exp_f<RatFunc>(i, -t) * h;
    out.t.push_back(t);
    out.c.push_back(c);
  }
  return out;
}

PwPoint big_cell_point(const BottSamelson& bs, const QVec& t) {
  PwPoint p;
  for (size_t j = 0; j < bs.n(); ++j) p.push_back(bs.group().exp_f<Q>(bs.word().index(j), t[j]));
  return p;
}

BorelElement borel_element(const GroupModel& gm, const QVec& torus, const std::vector<std::pair<int, Q>>& unipotent) {
  QVec inv_torus;
  for (const auto& c : torus) {
    require(c != 0, ErrorCode::InvalidInput, "torus coordinate must be nonzero");
    inv_torus.push_back(1 / c);
  }
  BorelElement out{gm.torus(torus), gm.torus(inv_torus)};
  for (const auto& [j, u] : unipotent) {
    out.g = out.g * gm.exp_e<Q>(j, u);
    out.inverse = gm.exp_e<Q>(j, -u) * out.inverse;
  }
  return out;
}

PwPoint right_action(const PwPoint& p, const std::vector<BorelElement>& b) {
  require(p.size() == b.size(), ErrorCode::InvalidInput, "one Borel element per factor is needed");
  PwPoint out;
  for (size_t k = 0; k < p.size(); ++k) {
    GroupElem<Q> g = p[k] * b[k].g;
    if (k > 0) g = b[k - 1].inverse * g;
    out.push_back(std::move(g));
  }
  return out;
}

Q borel_character(const BottSamelson& bs, size_t k, const GroupElem<Q>& b) {
  const int i = bs.word().index(k);
  const size_t hi = bs.group().rep(i).highest();
  return b.rep[i][hi][hi];
}

}  // namespace okbody

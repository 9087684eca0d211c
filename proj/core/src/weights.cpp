#include "okbody/weights.hpp"

#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"
#include "okbody/picard.hpp"
#include "okbody/sections.hpp"

#include <set>

namespace okbody {

std::vector<long long> project_weight(const TorusProjection& proj, const Weight& w) {
  if (proj.empty()) return w;
  std::vector<long long> out(proj.size(), 0);
  for (size_t r = 0; r < proj.size(); ++r) {
    require(proj[r].size() == w.size(), ErrorCode::InvalidInput, "torus projection has the wrong width");
    for (size_t i = 0; i < w.size(); ++i) out[r] += proj[r][i] * w[i];
  }
  return out;
}

WeightedSemigroup weighted_semigroup(const BottSamelson& bs, const DivisorClass& d, long long max_level,
                                     const TorusProjection& proj) {
  require(max_level >= 1, ErrorCode::InvalidInput, "max level must be at least 1");
  require(is_effective(bs, d), ErrorCode::InvalidInput, "class " + d.to_string() + " is not effective");
  WeightedSemigroup ws;
  ws.n = bs.n();
  ws.weight_dim = proj.empty() ? static_cast<size_t>(bs.cartan().rank()) : proj.size();
  for (long long k = 1; k <= max_level; ++k) {
    const SectionBasis b = adapted_basis(section_basis(bs, d.scaled(k)));
    std::map<ValuationVector, std::vector<long long>> seen;
    for (const auto& s : b.members) {
      const ValuationVector nu = valuation(s);
      const auto mu = project_weight(proj, bs.monomial_weight(b.canonical, nu));
      require(mu == project_weight(proj, s.weight), ErrorCode::VerificationFailure,
              "section weight differs from the weight of its leading monomial");
      auto [it, fresh] = seen.emplace(nu, mu);
      require(fresh || it->second == mu, ErrorCode::VerificationFailure, "one valuation carries two weights");
      if (fresh) ws.points.push_back({nu, k, mu});
    }
  }
  return ws;
}

AffineMap weight_projection(const WeightedSemigroup& ws) {
  require(!ws.points.empty(), ErrorCode::InvalidInput, "empty weighted semigroup");
  const size_t n = ws.n;
  QMat rows;
  for (const auto& p : ws.points) {
    QVec row;
    for (auto v : p.nu) row.emplace_back(v);
    row.emplace_back(static_cast<long>(p.level));
    rows.push_back(std::move(row));
  }
  AffineMap q;
  q.a.assign(ws.weight_dim, QVec(n, Q(0)));
  q.b.assign(ws.weight_dim, Q(0));
  for (size_t i = 0; i < ws.weight_dim; ++i) {
    QVec rhs;
    for (const auto& p : ws.points) rhs.emplace_back(static_cast<long>(p.mu[i]));
    const auto sol = solve(rows, rhs, n + 1);
    require(sol.has_value(), ErrorCode::NotAffine, "weights are not an affine function of (nu, k)");
    for (size_t j = 0; j < n; ++j) q.a[i][j] = (*sol)[j];
    q.b[i] = (*sol)[n];
  }
  return q;
}

long long slice_lattice_count(const RationalPolytope& body, const AffineMap& q, const QVec& mu, long long k) {
  const RationalPolytope s = body.slice(q, mu);
  if (s.empty()) return 0;
  return static_cast<long long>(s.lattice_points(k).size());
}

MultiplicityReport multiplicity_asymptotics(const BottSamelson& bs, const DivisorClass& d, const QVec& mu,
                                            long long max_level, const TorusProjection& proj) {
  const WeightedSemigroup ws = weighted_semigroup(bs, d, max_level, proj);
  require(mu.size() == ws.weight_dim, ErrorCode::InvalidInput, "weight has the wrong length");
  MultiplicityReport rep;
  rep.q = weight_projection(ws);
  std::vector<QVec> pts;
  for (const auto& p : ws.points) {
    QVec x;
    for (auto v : p.nu) x.push_back(Q(Z(v), Z(static_cast<long>(p.level))));
    for (auto& v : x) v.canonicalize();
    pts.push_back(std::move(x));
  }
  rep.body = RationalPolytope::hull(pts);
  rep.weight_polytope = rep.body.image(rep.q);
  require(rep.weight_polytope.contains(mu), ErrorCode::NotInterior, "weight lies outside the weight polytope");
  rep.on_boundary = !rep.weight_polytope.strictly_inside(mu);
  rep.d = rep.body.dimension();
  rep.r = rep.weight_polytope.dimension();
  rep.slice = rep.body.slice(rep.q, mu);
  rep.slice_volume = rep.slice.lattice_volume();
  const bool nef = is_nef(bs, d);
  const IVec can = to_canonical(bs, d).coords;
  const int e = rep.d - rep.r;
  for (long long k = 1; k <= max_level; ++k) {
    std::vector<long long> target;
    bool integral = true;
    for (const auto& x : mu) {
      const Q y = x * Q(static_cast<long>(k));
      integral = integral && y.get_den() == 1;
      if (integral) target.push_back(to_ll(y.get_num()));
    }
    if (!integral) continue;
    MultiplicityRow row;
    row.level = k;
    for (const auto& p : ws.points)
      if (p.level == k && p.mu == target) ++row.sections;
    if (nef) {
      IVec m = can;
      for (auto& x : m) x *= k;
      row.character = 0;
      const Character ch = bs_character(bs.cartan(), bs.word(), m);
      for (const auto& [w, mult] : ch.terms())
        if (project_weight(proj, w) == target) row.character += mult;
    }
    row.lattice = slice_lattice_count(rep.body, rep.q, mu, k);
    Z denom = 1;
    for (int i = 0; i < e; ++i) denom *= static_cast<long>(k);
    row.ratio = Q(Z(static_cast<long>(row.sections)), denom);
    row.ratio.canonicalize();
    row.error = abs(row.ratio - rep.slice_volume);
    rep.rows.push_back(row);
  }
  require(!rep.rows.empty(), ErrorCode::NonIntegralAll, "no level up to the max makes k mu integral");
  return rep;
}

}  // namespace okbody

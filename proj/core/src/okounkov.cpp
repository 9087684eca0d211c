#include "okbody/okounkov.hpp"

#include "okbody/errors.hpp"
#include "okbody/picard.hpp"
#include "okbody/sections.hpp"

#include <algorithm>
#include <set>

namespace okbody {

namespace {

std::vector<ValuationVector> level_valuations(const BottSamelson& bs, const DivisorClass& d) {
  return valuation_set(section_basis(bs, d));
}

QVec scaled_point(const ValuationVector& nu, long long k) {
  QVec p(nu.size());
  for (size_t i = 0; i < nu.size(); ++i) p[i] = Q(Z(nu[i]), Z(static_cast<long>(k)));
  for (auto& x : p) x.canonicalize();
  return p;
}

std::vector<QVec> body_points(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  std::vector<QVec> pts;
  for (long long k = 1; k <= max_level; ++k)
    for (const auto& nu : level_valuations(bs, d.scaled(k))) pts.push_back(scaled_point(nu, k));
  return pts;
}

ZVec primitive_int(const QVec& v) { return primitive(v); }

long long cross(const ZVec& a, const ZVec& b) { return to_ll(a[0] * b[1] - a[1] * b[0]); }

}  // namespace

std::vector<GradedValuationPoint> semigroup(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  require(max_level >= 1, ErrorCode::InvalidInput, "max level must be at least 1");
  require(is_effective(bs, d), ErrorCode::InvalidInput, "class " + d.to_string() + " is not effective");
  std::vector<GradedValuationPoint> out;
  for (long long k = 1; k <= max_level; ++k)
    for (auto& nu : level_valuations(bs, d.scaled(k))) out.push_back({std::move(nu), k, d});
  return out;
}

OkounkovBody body(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  require(max_level >= 1, ErrorCode::InvalidInput, "max level must be at least 1");
  require(is_effective(bs, d), ErrorCode::InvalidInput, "class " + d.to_string() + " is not effective");
  std::vector<QVec> pts = body_points(bs, d, max_level);
  require(!pts.empty(), ErrorCode::InvalidInput, "class " + d.to_string() + " has no sections up to the max level");
  return {RationalPolytope::hull(pts), d, max_level};
}

GlobalConeApprox global_cone(const BottSamelson& bs, long long max_level, long long box) {
  require(max_level >= 1, ErrorCode::InvalidInput, "max level must be at least 1");
  require(box >= 0, ErrorCode::InvalidInput, "class box must be nonnegative");
  const size_t n = bs.n();
  std::map<IVec, std::vector<ValuationVector>> memo;
  auto generators = [&](long long kmax, long long b) {
    std::set<ZVec> gens;
    IVec e(n, 0);
    while (true) {
      if (!std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; }))
        for (long long k = 1; k <= kmax; ++k) {
          IVec ke = e;
          for (auto& x : ke) x *= k;
          auto it = memo.find(ke);
          if (it == memo.end()) it = memo.emplace(ke, level_valuations(bs, DivisorClass::effective(ke))).first;
          for (const auto& nu : it->second) {
            ZVec g;
            for (auto v : nu) g.emplace_back(v);
            for (auto v : ke) g.emplace_back(static_cast<long>(v));
            gens.insert(g);
          }
        }
      size_t j = 0;
      while (j < n) {
        if (e[j] < b) {
          ++e[j];
          break;
        }
        e[j] = 0;
        ++j;
      }
      if (j == n) break;
    }
    return std::vector<ZVec>(gens.begin(), gens.end());
  };
  GlobalConeApprox out;
  out.max_level = max_level;
  out.box = box;
  const auto small = generators(max_level, box);
  out.points = small.size();
  out.cone = RationalCone::from_generators(small, 2 * n);
  const RationalCone larger = RationalCone::from_generators(generators(max_level + 1, box + 1), 2 * n);
  out.saturated = larger == out.cone;
  return out;
}

SurfaceRecipe indok_generators_surface(const BottSamelson& bs) {
  require(bs.n() == 2, ErrorCode::InvalidInput, "the surface recipe needs a word of length 2");
  const BasisChange& bc = bs.basis_change();
  std::vector<ZVec> rays{{Z(1), Z(0)}, {Z(0), Z(1)}};
  std::vector<ZVec> nef_rays;
  for (size_t c = 0; c < 2; ++c) {
    const ZVec r = primitive_int({bc.inverse[0][c], bc.inverse[1][c]});
    nef_rays.push_back(r);
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  }
  // Order counterclockwise; all rays lie in the closed first quadrant.
  std::sort(rays.begin(), rays.end(), [](const ZVec& a, const ZVec& b) { return cross(a, b) > 0; });
  SurfaceRecipe out;
  std::set<size_t> fixed_divisors;
  for (size_t r = 0; r + 1 < rays.size(); ++r) {
    Chamber ch;
    ch.from = rays[r];
    ch.to = rays[r + 1];
    ch.probe = DivisorClass::effective({to_ll(rays[r][0] + rays[r + 1][0]), to_ll(rays[r][1] + rays[r + 1][1])});
    try {
      ch.fixed = fixed_part_peel(bs, ch.probe, 1).fixed;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Unstable || e.code() == ErrorCode::BoxTooSmall)
        fail(ErrorCode::ChamberResolutionFailure, "peeling failed in chamber of " + ch.probe.to_string());
      throw;
    }
    for (size_t j = 0; j < 2; ++j)
      if (ch.fixed.coords[j] > 0) fixed_divisors.insert(j);
    out.chambers.push_back(ch);
  }
  std::set<ZVec> gens;
  // The first flag member is the boundary divisor cut out by t_1.
  {
    const ValuationVector nu = valuation(boundary_section(bs, 0));
    gens.insert({Z(nu[0]), Z(nu[1]), Z(1), Z(0)});
  }
  for (size_t j : fixed_divisors) {
    const ValuationVector nu = valuation(boundary_section(bs, j));
    gens.insert({Z(nu[0]), Z(nu[1]), Z(j == 0 ? 1 : 0), Z(j == 1 ? 1 : 0)});
  }
  // Lifts of the body of the restriction to the curve Y_1 along each nef ray.
  for (const auto& r : nef_rays) {
    const IVec eff{to_ll(r[0]), to_ll(r[1])};
    const IVec can = to_canonical(bs, DivisorClass::effective(eff)).coords;
    gens.insert({Z(0), Z(0), r[0], r[1]});
    gens.insert({Z(0), Z(static_cast<long>(can[1])), r[0], r[1]});
  }
  out.generators.assign(gens.begin(), gens.end());
  out.cone = RationalCone::from_generators(out.generators, 4);
  return out;
}

VolumeReport volume_check(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  require(max_level >= 1, ErrorCode::InvalidInput, "max level must be at least 1");
  VolumeReport rep;
  const IVec can = to_canonical(bs, d).coords;
  std::vector<QVec> pts, previous;
  for (long long k = 1; k <= max_level; ++k) {
    const auto nus = level_valuations(bs, d.scaled(k));
    const std::set<ValuationVector> distinct(nus.begin(), nus.end());
    IVec m = can;
    for (auto& x : m) x *= k;
    LevelCount lc{k, static_cast<long long>(distinct.size()),
                  bs_character(bs.cartan(), bs.word(), m).dimension()};
    rep.counts_match = rep.counts_match && lc.valuations == lc.dimension;
    rep.levels.push_back(lc);
    if (k == max_level) previous = pts;
    for (const auto& nu : nus) pts.push_back(scaled_point(nu, k));
  }
  const RationalPolytope hull = RationalPolytope::hull(pts);
  rep.hull_volume = hull.volume();
  if (!previous.empty()) {
    const RationalPolytope prev = RationalPolytope::hull(previous);
    rep.previous_hull_volume = prev.volume();
    rep.stable = prev == hull;
  }
  rep.expected = volume(bs, d) / factorial(static_cast<unsigned>(bs.n()));
  rep.gap = rep.expected - rep.hull_volume;
  return rep;
}

long long saturation_level(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  const Q expected = volume(bs, d) / factorial(static_cast<unsigned>(bs.n()));
  std::optional<RationalPolytope> prev;
  for (long long k = 1; k <= max_level; ++k) {
    const RationalPolytope cur = body(bs, d, k).polytope;
    if (prev && *prev == cur && cur.volume() == expected) return k;
    prev = cur;
  }
  return -1;
}

RestrictionReport restriction_check(const BottSamelson& bs, const DivisorClass& d, long long max_level) {
  require(bs.n() >= 2, ErrorCode::InvalidInput, "restriction needs a word of length at least 2");
  require(is_nef(bs, d), ErrorCode::NotNef, "class " + d.to_string() + " is not nef");
  const IVec can = to_canonical(bs, d).coords;
  RestrictionReport rep;
  rep.restricted = DivisorClass::canonical(IVec(can.begin() + 1, can.end()));
  std::vector<QVec> tails;
  for (long long k = 1; k <= max_level; ++k)
    for (const auto& nu : level_valuations(bs, d.scaled(k)))
      if (nu[0] == 0) tails.push_back(scaled_point(ValuationVector(nu.begin() + 1, nu.end()), k));
  rep.tail_body = RationalPolytope::hull(tails);
  BottSamelson truncated(bs.cartan(), bs.word().tail(1), bs.group());
  truncated.glue_options() = bs.glue_options();
  rep.intrinsic_body = body(truncated, rep.restricted, max_level).polytope;
  rep.contained = rep.intrinsic_body.contains(rep.tail_body);
  rep.equal = rep.tail_body == rep.intrinsic_body;
  return rep;
}

}  // namespace okbody

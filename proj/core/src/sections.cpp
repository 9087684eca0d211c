#include "okbody/sections.hpp"

#include "cache.hpp"
#include "poly_echelon.hpp"
#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"
#include "okbody/picard.hpp"

#include <algorithm>
#include <random>

namespace okbody {

namespace {

IVec canonical_coords(const BottSamelson& bs, const DivisorClass& m) {
  require(m.coords.size() == bs.n(), ErrorCode::InvalidInput, "class length differs from word length");
  return to_canonical(bs, m).coords;
}

std::shared_ptr<const std::vector<SectionPoly>> cells(const BottSamelson& bs, size_t k) {
  auto& cache = bs.cache();
  {
    std::lock_guard<std::recursive_mutex> lock(cache.mu);
    auto it = cache.cells.find(k);
    if (it != cache.cells.end()) return it->second;
  }
  const size_t n = bs.n();
  const int ik = bs.word().index(k);
  const FundamentalRep& rep = bs.group().rep(ik);
  std::vector<Poly> v(rep.dim(), Poly(n));
  v[rep.highest()] = Poly(n, Q(1));
  for (size_t j = k + 1; j-- > 0;) {
    const QMat& f = rep.f(bs.word().index(j));
    const Poly tj = Poly::variable(n, j);
    std::vector<Poly> result = v, power = v;
    Poly tpow(n, Q(1));
    Q fact = 1;
    for (unsigned e = 1;; ++e) {
      std::vector<Poly> next(rep.dim(), Poly(n));
      bool nonzero = false;
      for (size_t r = 0; r < rep.dim(); ++r)
        for (size_t c = 0; c < rep.dim(); ++c)
          if (f[r][c] != 0 && !power[c].is_zero()) {
            next[r] += power[c] * f[r][c];
            nonzero = true;
          }
      if (!nonzero) break;
      fact *= e;
      tpow = tpow * tj;
      for (size_t r = 0; r < rep.dim(); ++r)
        if (!next[r].is_zero()) result[r] += next[r] * tpow * (1 / fact);
      power = std::move(next);
    }
    v = std::move(result);
  }
  auto out = std::make_shared<std::vector<SectionPoly>>();
  IVec unit(n, 0);
  unit[k] = 1;
  for (size_t xi = 0; xi < rep.dim(); ++xi)
    out->push_back(SectionPoly{v[xi], DivisorClass::canonical(unit), rep.weights()[xi]});
  std::lock_guard<std::recursive_mutex> lock(cache.mu);
  return cache.cells.emplace(k, out).first->second;
}

void sort_members(std::vector<SectionPoly>& members) {
  std::sort(members.begin(), members.end(), [](const SectionPoly& a, const SectionPoly& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.poly.lead() < b.poly.lead();
  });
}

std::shared_ptr<const NefEntry> nef_entry(const BottSamelson& bs, const IVec& m) {
  auto& cache = bs.cache();
  {
    std::lock_guard<std::recursive_mutex> lock(cache.mu);
    auto it = cache.nef.find(m);
    if (it != cache.nef.end()) return it->second;
  }
  const size_t n = bs.n();
  auto entry = std::make_shared<NefEntry>();
  entry->basis.word = bs.word();
  entry->basis.canonical = m;
  size_t step = n;
  for (size_t k = n; k-- > 0;)
    if (m[k] > 0) {
      step = k;
      break;
    }
  if (step == n) {
    entry->basis.members.push_back(
        SectionPoly{Poly(n, Q(1)), DivisorClass::canonical(m), Weight(bs.cartan().rank(), 0)});
    entry->prov.push_back({});
  } else {
    IVec parent = m;
    parent[step] -= 1;
    const auto par = nef_entry(bs, parent);
    const auto cell = cells(bs, step);
    entry->step = step;
    entry->parent = parent;
    std::map<Weight, std::vector<std::pair<size_t, size_t>>> groups;
    for (size_t p = 0; p < par->basis.members.size(); ++p)
      for (size_t xi = 0; xi < cell->size(); ++xi) {
        if ((*cell)[xi].poly.is_zero()) continue;
        Weight w = par->basis.members[p].weight;
        for (size_t i = 0; i < w.size(); ++i) w[i] += (*cell)[xi].weight[i];
        groups[w].emplace_back(p, xi);
      }
    const Character ch = bs_character(bs.cartan(), bs.word(), m);
    std::vector<std::pair<SectionPoly, Prov>> members;
    for (const auto& [mu, need] : ch.terms()) {
      require(need > 0, ErrorCode::Internal, "negative multiplicity in a nef character");
      PolyEchelon ech;
      auto it = groups.find(mu);
      if (it != groups.end())
        for (const auto& [p, xi] : it->second) {
          Poly prod = par->basis.members[p].poly * (*cell)[xi].poly;
          ech.insert(std::move(prod), Prov{{{p, xi}, Q(1)}});
          if (static_cast<long long>(ech.rank()) == need) break;
        }
      if (static_cast<long long>(ech.rank()) < need)
        fail(ErrorCode::SpanDeficiency, "products of cell polynomials miss part of weight space of class " +
                                            DivisorClass::canonical(m).to_string());
      for (const auto& [lead, row] : ech.rows())
        members.emplace_back(SectionPoly{row.poly, DivisorClass::canonical(m), mu}, row.prov);
    }
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      if (a.first.weight != b.first.weight) return a.first.weight < b.first.weight;
      return a.first.poly.lead() < b.first.poly.lead();
    });
    for (auto& [sec, prov] : members) {
      entry->basis.members.push_back(std::move(sec));
      std::vector<std::tuple<size_t, size_t, Q>> terms;
      for (const auto& [key, coef] : prov) terms.emplace_back(key.first, key.second, coef);
      entry->prov.push_back(std::move(terms));
    }
  }
  std::lock_guard<std::recursive_mutex> lock(cache.mu);
  return cache.nef.emplace(m, entry).first->second;
}

// Deterministic nonzero rational with small numerator and denominator.
Q random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 19), den(1, 11), sign(0, 1);
  Q q(Z(num(rng)), Z(den(rng)));
  q.canonicalize();
  return sign(rng) ? -q : q;
}

QVec specialization(const BottSamelson& bs, size_t chart, size_t point) {
  std::mt19937_64 rng(bs.glue_options().seed + 7919 * chart + 104729 * point);
  QVec s(bs.n());
  for (auto& x : s) x = random_rational(rng);
  return s;
}

struct GlueSolution {
  std::vector<SectionPoly> members;
};

GlueSolution glue_solve(const BottSamelson& bs, const IVec& m, const std::vector<int>& box) {
  const size_t n = bs.n();
  std::map<std::vector<int>, std::vector<Exponent>> groups;
  {
    Exponent a(n, 0);
    while (true) {
      groups[bs.root_shift(a)].push_back(a);
      size_t j = 0;
      while (j < n) {
        if (a[j] < box[j]) {
          ++a[j];
          break;
        }
        a[j] = 0;
        ++j;
      }
      if (j == n) break;
    }
  }
  std::map<std::vector<int>, QMat> rows;  // constraint rows per group
  auto add_point = [&](size_t point) {
    for (size_t k = 0; k < n; ++k) {
      ChartTransition tr;
      size_t attempt = 0;
      while (true) {
        try {
          tr = bs.transition(k, specialization(bs, k, point + 1000 * attempt));
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Internal || ++attempt > 5) throw;
        }
      }
      std::vector<int> vt(n), vc(n);
      long long cocycle_val = 0;
      for (size_t j = 0; j < n; ++j) {
        vt[j] = tr.t[j].is_zero() ? 0 : tr.t[j].valuation();
        vc[j] = tr.c[j].valuation();
        cocycle_val += m[j] * vc[j];
      }
      // Largest principal-part length over the box.
      long long worst = cocycle_val;
      for (size_t j = 0; j < n; ++j)
        if (!tr.t[j].is_zero() && vt[j] < 0) worst += static_cast<long long>(vt[j]) * box[j];
      if (worst >= 0) continue;
      const size_t prec = static_cast<size_t>(-worst);
      Laurent cocycle = Laurent::expand(RatFunc(Q(1)), prec);
      for (size_t j = 0; j < n; ++j)
        if (m[j] != 0) cocycle = cocycle * Laurent::expand(tr.c[j], prec).pow(m[j], prec + 1);
      std::vector<std::vector<Laurent>> tpow(n);
      for (size_t j = 0; j < n; ++j) {
        tpow[j].push_back(Laurent::expand(RatFunc(Q(1)), prec));
        if (tr.t[j].is_zero()) {
          for (int e = 1; e <= box[j]; ++e) tpow[j].push_back(Laurent());
          continue;
        }
        const Laurent base = Laurent::expand(tr.t[j], prec);
        for (int e = 1; e <= box[j]; ++e) tpow[j].push_back(tpow[j].back() * base);
      }
      for (const auto& [shift, monos] : groups) {
        std::map<int, QVec> by_power;
        for (size_t mi = 0; mi < monos.size(); ++mi) {
          const Exponent& a = monos[mi];
          long long v = cocycle_val;
          bool zero = false;
          for (size_t j = 0; j < n; ++j) {
            if (a[j] == 0) continue;
            if (tr.t[j].is_zero()) zero = true;
            else v += static_cast<long long>(vt[j]) * a[j];
          }
          if (zero || v >= 0) continue;
          const size_t need = static_cast<size_t>(-v);
          Laurent term = cocycle.truncated(need);
          for (size_t j = 0; j < n; ++j)
            if (a[j] > 0) term = term * tpow[j][a[j]].truncated(need);
          for (long long e = v; e < 0; ++e) {
            const Q c = term.coeff(static_cast<int>(e));
            if (c == 0) continue;
            auto& row = by_power[static_cast<int>(e)];
            if (row.empty()) row.assign(monos.size(), Q(0));
            row[mi] = c;
          }
        }
        auto& target = rows[shift];
        for (auto& [e, row] : by_power) target.push_back(std::move(row));
      }
    }
  };
  auto total_dim = [&]() {
    size_t d = 0;
    for (const auto& [shift, monos] : groups) {
      auto it = rows.find(shift);
      d += it == rows.end() ? monos.size() : monos.size() - rank(it->second, monos.size());
    }
    return d;
  };
  // Keep adding generic specialisation points until the solution space stops shrinking.
  add_point(0);
  size_t dim = total_dim();
  const bool one_point = n == 1;
  size_t point = 1;
  while (!one_point) {
    if (static_cast<int>(point) >= bs.glue_options().max_points)
      fail(ErrorCode::Unstable, "gluing conditions did not stabilise over specialisation points");
    add_point(point++);
    const size_t next = total_dim();
    if (next == dim) break;
    dim = next;
    // Compact rows so repeated rank computations stay small.
    for (auto& [shift, r] : rows) {
      Rref red = rref(r, groups[shift].size());
      r = std::move(red.rows);
    }
  }
  GlueSolution sol;
  for (const auto& [shift, monos] : groups) {
    QMat basis;
    auto it = rows.find(shift);
    if (it == rows.end()) {
      basis = identity(monos.size());
    } else {
      basis = nullspace(it->second, monos.size());
    }
    if (basis.empty()) continue;
    PolyEchelon ech;
    for (const auto& vec : basis) {
      Poly p(n);
      for (size_t mi = 0; mi < monos.size(); ++mi) p.add_term(monos[mi], vec[mi]);
      ech.insert(std::move(p));
    }
    const Weight w = bs.monomial_weight(m, monos[0]);
    for (const auto& [lead, row] : ech.rows())
      sol.members.push_back(SectionPoly{row.poly, DivisorClass::canonical(m), w});
  }
  sort_members(sol.members);
  return sol;
}

std::vector<int> initial_box(const BottSamelson& bs, const IVec& m) {
  const size_t n = bs.n();
  long long shift = 0;
  for (auto x : m) shift = std::max(shift, -x);
  std::vector<int> box(n, 0);
  for (size_t j = 0; j < n; ++j) {
    long long b = 0;
    for (size_t k = j; k < n; ++k)
      b += (m[k] + shift) * bs.group().rep(bs.word().index(k)).nilpotency(bs.word().index(j));
    box[j] = static_cast<int>(b) + bs.glue_options().extra_box;
  }
  return box;
}

std::shared_ptr<const SectionBasis> glue_canonical(const BottSamelson& bs, const IVec& m) {
  auto& cache = bs.cache();
  {
    std::lock_guard<std::recursive_mutex> lock(cache.mu);
    auto it = cache.glue.find(m);
    if (it != cache.glue.end()) return it->second;
  }
  const GlueOptions& opt = bs.glue_options();
  std::vector<int> box = initial_box(bs, m);
  GlueSolution sol;
  while (true) {
    for (int b : box)
      if (b > opt.box_cap) fail(ErrorCode::Unstable, "degree box exceeded its cap");
    sol = glue_solve(bs, m, box);
    if (!opt.recheck) break;
    std::vector<int> bigger = box;
    for (auto& b : bigger) b += 2;
    const GlueSolution check = glue_solve(bs, m, bigger);
    if (check.members.size() == sol.members.size()) break;
    for (auto& b : box) b *= 2;  // BoxTooSmall: retry with a doubled box
  }
  auto out = std::make_shared<SectionBasis>();
  out->word = bs.word();
  out->canonical = m;
  out->members = std::move(sol.members);
  std::lock_guard<std::recursive_mutex> lock(cache.mu);
  return cache.glue.emplace(m, out).first->second;
}

}  // namespace

SectionPoly cell_polynomial(const BottSamelson& bs, size_t k, size_t xi) {
  require(k < bs.n(), ErrorCode::InvalidInput, "cell index out of range");
  const auto c = cells(bs, k);
  require(xi < c->size(), ErrorCode::InvalidInput, "covector index out of range");
  return (*c)[xi];
}

SectionBasis section_basis_nef(const BottSamelson& bs, const DivisorClass& m) {
  const IVec can = canonical_coords(bs, m);
  for (auto x : can) require(x >= 0, ErrorCode::NotNef, "nef model needs a nef class, got " + m.to_string());
  return nef_entry(bs, can)->basis;
}

SectionBasis section_basis_glue(const BottSamelson& bs, const DivisorClass& m) {
  return *glue_canonical(bs, canonical_coords(bs, m));
}

SectionBasis section_basis(const BottSamelson& bs, const DivisorClass& m) {
  const IVec can = canonical_coords(bs, m);
  if (std::all_of(can.begin(), can.end(), [](long long x) { return x >= 0; })) {
    try {
      return nef_entry(bs, can)->basis;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SpanDeficiency) throw;
    }
  }
  return *glue_canonical(bs, can);
}

long long section_dimension(const BottSamelson& bs, const DivisorClass& m) {
  const IVec can = canonical_coords(bs, m);
  return static_cast<long long>(glue_canonical(bs, can)->members.size());
}

IVec divisor_class_of(const BottSamelson& bs, const Poly& p) {
  require(!p.is_zero(), ErrorCode::InvalidInput, "class of the zero polynomial");
  const size_t n = bs.n();
  QMat c(n, QVec(n, Q(0)));
  QVec rhs(n, Q(0));
  for (size_t l = 0; l < n; ++l) {
    // Generic orders are the minima over a few specialisation points.
    std::vector<long long> ordc(n, 0);
    long long ordp = 0;
    for (size_t point = 0; point < 3; ++point) {
      const ChartTransition tr = bs.transition(l, specialization(bs, l, 500 + point));
      const RatFunc val = p.evaluate_in<RatFunc>(tr.t, RatFunc(Q(1)));
      const long long vp = val.is_zero() ? 1 << 20 : val.valuation();
      ordp = point == 0 ? vp : std::min(ordp, vp);
      for (size_t k = 0; k < n; ++k) {
        const long long vk = tr.c[k].valuation();
        ordc[k] = point == 0 ? vk : std::min(ordc[k], vk);
      }
    }
    require(ordp < (1 << 20), ErrorCode::Internal, "polynomial vanishes identically on a chart");
    for (size_t k = 0; k < n; ++k) c[l][k] = static_cast<long>(ordc[k]);
    rhs[l] = static_cast<long>(-ordp);
  }
  auto sol = solve(c, rhs, n);
  require(sol.has_value(), ErrorCode::Internal, "boundary orders are inconsistent");
  IVec out(n);
  for (size_t k = 0; k < n; ++k) {
    require((*sol)[k].get_den() == 1, ErrorCode::Internal, "boundary class is not integral");
    out[k] = to_ll((*sol)[k].get_num());
  }
  return out;
}

SectionPoly boundary_section(const BottSamelson& bs, size_t j) {
  require(j < bs.n(), ErrorCode::InvalidInput, "boundary index out of range");
  auto& cache = bs.cache();
  IVec cls;
  {
    std::lock_guard<std::recursive_mutex> lock(cache.mu);
    auto it = cache.boundary.find(j);
    if (it != cache.boundary.end()) cls = it->second;
  }
  const Poly t = Poly::variable(bs.n(), j);
  if (cls.empty()) {
    cls = divisor_class_of(bs, t);
    std::lock_guard<std::recursive_mutex> lock(cache.mu);
    cache.boundary.emplace(j, cls);
  }
  Exponent a(bs.n(), 0);
  a[j] = 1;
  return SectionPoly{t, DivisorClass::canonical(cls), bs.monomial_weight(cls, a)};
}

PeelResult fixed_part_peel(const BottSamelson& bs, const DivisorClass& d, long long k) {
  const DivisorClass e = to_effective(bs, d).scaled(k);
  require(is_effective(bs, e), ErrorCode::InvalidInput, "peeling needs an effective class");
  const long long d0 = section_dimension(bs, e);
  PeelResult out;
  out.fixed = DivisorClass::effective(IVec(bs.n(), 0));
  bool changed = true;
  while (changed && d0 > 0) {
    changed = false;
    for (size_t j = 0; j < bs.n(); ++j) {
      DivisorClass trial = e;
      for (size_t i = 0; i < bs.n(); ++i) trial.coords[i] -= out.fixed.coords[i] + (i == j ? 1 : 0);
      if (trial.coords[j] < 0) continue;
      if (section_dimension(bs, trial) == d0) {
        out.fixed.coords[j] += 1;
        changed = true;
      }
    }
  }
  out.movable_dim = d0;
  DivisorClass rest = e;
  for (size_t i = 0; i < bs.n(); ++i) rest.coords[i] -= out.fixed.coords[i];
  if (d0 > 0) {
    const SectionBasis b = section_basis_glue(bs, rest);
    for (size_t j = 0; j < bs.n(); ++j) {
      bool common = true;
      for (const auto& s : b.members)
        for (const auto& [a, c] : s.poly.terms()) common = common && a[j] > 0;
      out.residual_common_factor = out.residual_common_factor || common;
    }
  }
  return out;
}

QVec evaluate_nef_basis(const BottSamelson& bs, const IVec& canonical, const PwPoint& p) {
  const auto entry = nef_entry(bs, canonical);
  if (entry->basis.members.size() == 1 && entry->prov[0].empty()) return {Q(1)};
  const QVec parent = evaluate_nef_basis(bs, entry->parent, p);
  const size_t k = entry->step;
  const int ik = bs.word().index(k);
  const FundamentalRep& rep = bs.group().rep(ik);
  Mat<Q> prod = p[0].rep[ik];
  for (size_t j = 1; j <= k; ++j) prod = mat_mul(prod, p[j].rep[ik]);
  QVec out;
  for (const auto& terms : entry->prov) {
    Q v = 0;
    for (const auto& [pi, xi, coef] : terms) v += coef * parent[pi] * prod[xi][rep.highest()];
    out.push_back(v);
  }
  return out;
}

Q evaluate_nef_member(const BottSamelson& bs, const IVec& canonical, size_t index, const PwPoint& p) {
  const QVec all = evaluate_nef_basis(bs, canonical, p);
  require(index < all.size(), ErrorCode::InvalidInput, "basis index out of range");
  return all[index];
}

Q section_value(const BottSamelson& bs, const SectionPoly& s, const PwPoint& p) {
  const IVec can = canonical_coords(bs, s.multidegree);
  const auto entry = nef_entry(bs, can);
  const auto& members = entry->basis.members;
  std::map<Exponent, size_t> column;
  for (const auto& m : members)
    for (const auto& [a, c] : m.poly.terms()) column.emplace(a, 0);
  for (const auto& [a, c] : s.poly.terms())
    require(column.count(a), ErrorCode::InvalidInput, "polynomial is not a section of class " + s.multidegree.to_string());
  size_t idx = 0;
  for (auto& [a, c] : column) c = idx++;
  // Solve sum_i x_i member_i = s column by column (rows are monomials).
  QMat sys(column.size(), QVec(members.size(), Q(0)));
  QVec rhs(column.size(), Q(0));
  for (size_t i = 0; i < members.size(); ++i)
    for (const auto& [a, c] : members[i].poly.terms()) sys[column[a]][i] = c;
  for (const auto& [a, c] : s.poly.terms()) rhs[column[a]] = c;
  const auto x = solve(sys, rhs, members.size());
  require(x.has_value(), ErrorCode::InvalidInput, "polynomial is not a section of class " + s.multidegree.to_string());
  const QVec values = evaluate_nef_basis(bs, can, p);
  Q out = 0;
  for (size_t i = 0; i < members.size(); ++i) out += (*x)[i] * values[i];
  return out;
}

Character basis_character(const SectionBasis& b) {
  Character ch;
  for (const auto& s : b.members) ch.add(s.weight, 1);
  return ch;
}

size_t joint_rank(const SectionBasis& a, const SectionBasis& b) {
  PolyEchelon ech;
  for (const auto& s : a.members) ech.insert(s.poly);
  for (const auto& s : b.members) ech.insert(s.poly);
  return ech.rank();
}

}  // namespace okbody

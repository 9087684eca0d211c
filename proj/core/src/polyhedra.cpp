#include "okbody/polyhedra.hpp"

#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace okbody {

namespace {

class Bits {
 public:
  explicit Bits(size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(size_t i) { w_[i / 64] |= uint64_t{1} << (i % 64); }
  bool test(size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  size_t count() const {
    size_t c = 0;
    for (auto x : w_) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  bool superset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<uint64_t> w_;
};

QVec zq(const ZVec& v) { return to_q(v); }

QMat zq(const std::vector<ZVec>& m) {
  QMat out;
  out.reserve(m.size());
  for (const auto& r : m) out.push_back(zq(r));
  return out;
}

// Extreme rays of {x : A x >= 0} where A has full column rank r.
std::vector<ZVec> double_description(const std::vector<ZVec>& a, size_t r) {
  const size_t m = a.size();
  const auto init = independent_rows(zq(a), r);
  require(init.size() == r, ErrorCode::Internal, "double description needs full column rank");
  QMat square;
  for (size_t i : init) square.push_back(zq(a[i]));
  auto inv = inverse(square);
  require(inv.has_value(), ErrorCode::Internal, "singular initial simplex");

  struct Ray {
    ZVec v;
    Bits tight;
  };
  std::vector<Ray> rays;
  for (size_t c = 0; c < r; ++c) {
    QVec col(r);
    for (size_t i = 0; i < r; ++i) col[i] = (*inv)[i][c];
    Ray ray{primitive(col), Bits(m)};
    for (size_t i = 0; i < r; ++i)
      if (i != c) ray.tight.set(init[i]);
    rays.push_back(std::move(ray));
  }
  std::vector<bool> done(m, false);
  for (size_t i : init) done[i] = true;

  for (size_t row = 0; row < m; ++row) {
    if (done[row]) continue;
    done[row] = true;
    std::vector<Z> val(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a[row], rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      else if (val[k] < 0) neg.push_back(k);
    }
    std::vector<Ray> next;
    for (size_t p : pos)
      for (size_t n : neg) {
        Bits common = rays[p].tight & rays[n].tight;
        if (r >= 2 && common.count() < r - 2) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (rays[k].tight.superset_of(common)) adjacent = false;
        }
        if (!adjacent) continue;
        ZVec v(r);
        for (size_t i = 0; i < r; ++i) v[i] = val[p] * rays[n].v[i] - val[n] * rays[p].v[i];
        common.set(row);
        next.push_back(Ray{primitive(v), common});
      }
    for (size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      if (val[k] == 0) rays[k].tight.set(row);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }
  std::set<ZVec> unique;
  for (auto& ray : rays) unique.insert(ray.v);
  return std::vector<ZVec>(unique.begin(), unique.end());
}

// Rref-canonical primitive basis of the row space of m.
std::vector<ZVec> canonical_rows(const QMat& m, size_t ncols) {
  std::vector<ZVec> out;
  for (const auto& row : rref(m, ncols).rows) out.push_back(primitive(row));
  return out;
}

ZVec scale_row(const QVec& row) { return primitive(row); }

}  // namespace

ConeVRep cone_h_to_v(const std::vector<ZVec>& inequalities, const std::vector<ZVec>& equations, size_t dim) {
  // Parametrise the equation kernel by an integer basis.
  std::vector<ZVec> kernel;
  if (equations.empty()) {
    for (size_t i = 0; i < dim; ++i) {
      ZVec e(dim, Z(0));
      e[i] = 1;
      kernel.push_back(e);
    }
  } else {
    kernel = integer_kernel(equations, dim);
  }
  const size_t p = kernel.size();
  auto lift = [&](const QVec& z) {
    QVec x(dim, Q(0));
    for (size_t j = 0; j < p; ++j)
      if (z[j] != 0)
        for (size_t i = 0; i < dim; ++i) x[i] += z[j] * kernel[j][i];
    return x;
  };
  std::vector<ZVec> ap;
  for (const auto& a : inequalities) {
    ZVec row(p);
    for (size_t j = 0; j < p; ++j) row[j] = dot(a, kernel[j]);
    ap.push_back(std::move(row));
  }
  ConeVRep out;
  const QMat apq = zq(ap);
  QMat lin_z = nullspace(apq, p);
  QMat lin_x;
  for (const auto& z : lin_z) lin_x.push_back(lift(z));
  out.lineality = canonical_rows(lin_x, dim);

  const auto basis_idx = independent_rows(apq, p);
  const size_t r = basis_idx.size();
  if (r == 0) return out;
  // z = sum_l w_l B_l with B the chosen independent rows; A'' = A' B^T.
  std::vector<ZVec> app;
  for (const auto& row : ap) {
    ZVec w(r);
    for (size_t l = 0; l < r; ++l) w[l] = dot(row, ap[basis_idx[l]]);
    app.push_back(std::move(w));
  }
  std::set<ZVec> rays;
  for (const auto& w : double_description(app, r)) {
    QVec z(p, Q(0));
    for (size_t l = 0; l < r; ++l)
      for (size_t j = 0; j < p; ++j) z[j] += Q(w[l]) * Q(ap[basis_idx[l]][j]);
    rays.insert(primitive(lift(z)));
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

ConeHRep cone_v_to_h(const std::vector<ZVec>& generators, size_t dim) {
  ConeHRep out;
  std::vector<ZVec> gens;
  for (const auto& g : generators) {
    require(g.size() == dim, ErrorCode::InvalidInput, "generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](const Z& x) { return x != 0; })) gens.push_back(g);
  }
  const QMat gq = zq(gens);
  out.equations = canonical_rows(nullspace(gq, dim), dim);
  if (gens.empty()) return out;
  const ConeVRep dual = cone_h_to_v(gens, {}, dim);
  // Facet normals are defined modulo the equations; reduce against the rref basis.
  const Rref eq = rref(zq(out.equations), dim);
  std::set<ZVec> facets;
  for (const auto& y : dual.rays) {
    QVec v = zq(y);
    for (size_t i = 0; i < eq.rows.size(); ++i) {
      const Q c = v[eq.pivots[i]];
      if (c == 0) continue;
      for (size_t j = 0; j < dim; ++j) v[j] -= c * eq.rows[i][j];
    }
    if (std::any_of(v.begin(), v.end(), [](const Q& x) { return x != 0; })) facets.insert(primitive(v));
  }
  out.facets.assign(facets.begin(), facets.end());
  return out;
}

RationalCone RationalCone::from_generators(const std::vector<ZVec>& generators, size_t dim) {
  RationalCone c;
  c.dim_ = dim;
  c.h_ = cone_v_to_h(generators, dim);
  const ConeVRep v = cone_h_to_v(c.h_.facets, c.h_.equations, dim);
  c.rays_ = v.rays;
  c.lineality_ = v.lineality;
  return c;
}

bool RationalCone::contains(const QVec& x) const {
  for (const auto& a : h_.facets)
    if (dot(zq(a), x) < 0) return false;
  for (const auto& a : h_.equations)
    if (dot(zq(a), x) != 0) return false;
  return true;
}

QVec AffineMap::operator()(const QVec& x) const {
  QVec y = apply(a, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += b[i];
  return y;
}

RationalPolytope RationalPolytope::hull(const std::vector<QVec>& points) {
  require(!points.empty(), ErrorCode::InvalidInput, "hull of an empty point set");
  RationalPolytope p;
  p.dim_ = points[0].size();
  std::vector<ZVec> lifted;
  for (const auto& x : points) {
    require(x.size() == p.dim_, ErrorCode::InvalidInput, "points of mixed dimension");
    QVec h(p.dim_ + 1);
    h[0] = 1;
    for (size_t i = 0; i < p.dim_; ++i) h[i + 1] = x[i];
    lifted.push_back(primitive(h));
  }
  const RationalCone cone = RationalCone::from_generators(lifted, p.dim_ + 1);
  require(cone.pointed(), ErrorCode::Internal, "homogenised cone is not pointed");
  for (const auto& ray : cone.rays()) {
    QVec v(p.dim_);
    for (size_t i = 0; i < p.dim_; ++i) v[i] = Q(ray[i + 1]) / Q(ray[0]);
    p.vertices_.push_back(std::move(v));
  }
  std::sort(p.vertices_.begin(), p.vertices_.end());
  p.ineq_ = cone.hrep().facets;
  p.eq_ = cone.hrep().equations;
  p.affine_dim_ = static_cast<int>(p.dim_) - static_cast<int>(p.eq_.size());
  return p;
}

RationalPolytope RationalPolytope::from_h(const std::vector<QVec>& ineq, const std::vector<QVec>& eq, size_t dim) {
  std::vector<ZVec> a, e;
  for (const auto& row : ineq) {
    require(row.size() == dim + 1, ErrorCode::InvalidInput, "inequality has wrong length");
    a.push_back(scale_row(row));
  }
  for (const auto& row : eq) {
    require(row.size() == dim + 1, ErrorCode::InvalidInput, "equation has wrong length");
    e.push_back(scale_row(row));
  }
  ZVec s(dim + 1, Z(0));
  s[0] = 1;
  a.push_back(s);
  const ConeVRep v = cone_h_to_v(a, e, dim + 1);
  require(v.lineality.empty(), ErrorCode::InvalidInput, "polyhedron is unbounded");
  std::vector<QVec> pts;
  for (const auto& ray : v.rays) {
    require(ray[0] > 0, ErrorCode::InvalidInput, "polyhedron is unbounded");
    QVec x(dim);
    for (size_t i = 0; i < dim; ++i) x[i] = Q(ray[i + 1]) / Q(ray[0]);
    pts.push_back(std::move(x));
  }
  if (pts.empty()) {
    RationalPolytope empty;
    empty.dim_ = dim;
    return empty;
  }
  return hull(pts);
}

bool RationalPolytope::contains(const QVec& x) const {
  if (empty()) return false;
  for (const auto& a : ineq_) {
    Q s = Q(a[0]);
    for (size_t i = 0; i < dim_; ++i) s += Q(a[i + 1]) * x[i];
    if (s < 0) return false;
  }
  for (const auto& a : eq_) {
    Q s = Q(a[0]);
    for (size_t i = 0; i < dim_; ++i) s += Q(a[i + 1]) * x[i];
    if (s != 0) return false;
  }
  return true;
}

bool RationalPolytope::contains(const RationalPolytope& other) const {
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  return true;
}

bool RationalPolytope::strictly_inside(const QVec& x) const {
  if (!contains(x)) return false;
  for (const auto& a : ineq_) {
    Q s = Q(a[0]);
    for (size_t i = 0; i < dim_; ++i) s += Q(a[i + 1]) * x[i];
    if (s == 0) return false;
  }
  return true;
}

Q simplex_volume(const std::vector<QVec>& simplex) {
  const size_t d = simplex.size() - 1;
  QMat m(d, QVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = simplex[i + 1][j] - simplex[0][j];
  Q det = determinant(m);
  if (det < 0) det = -det;
  return det / factorial(static_cast<unsigned>(d));
}

Q RationalPolytope::volume() const {
  if (empty() || affine_dim_ < static_cast<int>(dim_)) return 0;
  if (dim_ == 0) return 1;
  const size_t m = vertices_.size();
  std::vector<std::vector<size_t>> tight;
  for (const auto& a : ineq_) {
    std::vector<size_t> t;
    for (size_t v = 0; v < m; ++v) {
      Q s = Q(a[0]);
      for (size_t i = 0; i < dim_; ++i) s += Q(a[i + 1]) * vertices_[v][i];
      if (s == 0) t.push_back(v);
    }
    tight.push_back(std::move(t));
  }
  std::map<std::vector<size_t>, int> dim_memo;
  auto affine_dim = [&](const std::vector<size_t>& s) {
    auto it = dim_memo.find(s);
    if (it != dim_memo.end()) return it->second;
    QMat diffs;
    for (size_t k = 1; k < s.size(); ++k) {
      QVec d(dim_);
      for (size_t i = 0; i < dim_; ++i) d[i] = vertices_[s[k]][i] - vertices_[s[0]][i];
      diffs.push_back(std::move(d));
    }
    const int r = static_cast<int>(rank(diffs, dim_));
    dim_memo.emplace(s, r);
    return r;
  };
  // Pulling triangulation: cone the first vertex over the facets that avoid it.
  std::function<void(const std::vector<size_t>&, int, std::vector<size_t>&, Q&)> pull =
      [&](const std::vector<size_t>& face, int k, std::vector<size_t>& prefix, Q& total) {
        if (static_cast<int>(face.size()) == k + 1) {
          std::vector<QVec> simplex;
          for (size_t v : prefix) simplex.push_back(vertices_[v]);
          for (size_t v : face) simplex.push_back(vertices_[v]);
          total += simplex_volume(simplex);
          return;
        }
        const size_t apex = face[0];
        std::set<std::vector<size_t>> subfaces;
        for (const auto& t : tight) {
          std::vector<size_t> sub;
          std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
          if (sub.size() == face.size() || sub.empty() || sub[0] == apex) continue;
          if (affine_dim(sub) == k - 1) subfaces.insert(sub);
        }
        prefix.push_back(apex);
        for (const auto& sub : subfaces) pull(sub, k - 1, prefix, total);
        prefix.pop_back();
      };
  std::vector<size_t> all(m);
  for (size_t v = 0; v < m; ++v) all[v] = v;
  std::vector<size_t> prefix;
  Q total = 0;
  pull(all, static_cast<int>(dim_), prefix, total);
  return total;
}

Q RationalPolytope::lattice_volume() const {
  if (empty()) return 0;
  if (affine_dim_ == 0) return 1;
  std::vector<ZVec> lin;
  for (const auto& row : eq_) lin.emplace_back(row.begin() + 1, row.end());
  std::vector<ZVec> basis;
  if (lin.empty()) {
    for (size_t i = 0; i < dim_; ++i) {
      ZVec e(dim_, Z(0));
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = integer_kernel(lin, dim_);
  }
  const size_t p = basis.size();
  QMat k(dim_, QVec(p));
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < p; ++j) k[i][j] = basis[j][i];
  std::vector<QVec> coords;
  for (const auto& v : vertices_) {
    QVec d(dim_);
    for (size_t i = 0; i < dim_; ++i) d[i] = v[i] - vertices_[0][i];
    auto z = solve(k, d, p);
    require(z.has_value(), ErrorCode::Internal, "vertex outside its own affine hull");
    coords.push_back(*z);
  }
  return hull(coords).volume();
}

RationalPolytope RationalPolytope::slice(const AffineMap& q, const QVec& target) const {
  if (empty()) return *this;
  std::vector<QVec> ineq, eq;
  for (const auto& a : ineq_) ineq.push_back(zq(a));
  for (const auto& a : eq_) eq.push_back(zq(a));
  for (size_t r = 0; r < q.a.size(); ++r) {
    QVec row(dim_ + 1);
    row[0] = q.b[r] - target[r];
    for (size_t i = 0; i < dim_; ++i) row[i + 1] = q.a[r][i];
    eq.push_back(std::move(row));
  }
  return from_h(ineq, eq, dim_);
}

RationalPolytope RationalPolytope::image(const AffineMap& q) const {
  require(!empty(), ErrorCode::InvalidInput, "image of an empty polytope");
  std::vector<QVec> pts;
  for (const auto& v : vertices_) pts.push_back(q(v));
  return hull(pts);
}

RationalPolytope RationalPolytope::scaled(const Q& factor) const {
  if (empty()) return *this;
  std::vector<QVec> pts = vertices_;
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return hull(pts);
}

RationalPolytope RationalPolytope::minkowski_sum(const RationalPolytope& other) const {
  require(!empty() && !other.empty(), ErrorCode::InvalidInput, "Minkowski sum with an empty polytope");
  std::vector<QVec> pts;
  for (const auto& a : vertices_)
    for (const auto& b : other.vertices_) {
      QVec s(dim_);
      for (size_t i = 0; i < dim_; ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  return hull(pts);
}

std::vector<QVec> RationalPolytope::lattice_points(long long k) const {
  require(k >= 1, ErrorCode::InvalidInput, "lattice denominator must be positive");
  std::vector<QVec> out;
  if (empty()) return out;
  const Q kq(Z(static_cast<long>(k)));
  std::vector<Z> lo(dim_), hi(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    Q mn = vertices_[0][i], mx = vertices_[0][i];
    for (const auto& v : vertices_) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn * kq);
    hi[i] = floor(mx * kq);
    if (lo[i] > hi[i]) return out;
  }
  std::vector<Z> z = lo;
  while (true) {
    QVec x(dim_);
    for (size_t i = 0; i < dim_; ++i) x[i] = Q(z[i]) / kq;
    if (contains(x)) out.push_back(std::move(x));
    size_t i = 0;
    while (i < dim_) {
      if (z[i] < hi[i]) {
        z[i] += 1;
        break;
      }
      z[i] = lo[i];
      ++i;
    }
    if (i == dim_) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RationalPolytope::to_json() const {
  nlohmann::ordered_json j;
  j["dimension"] = dim_;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const auto& v : vertices_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : v) row.push_back({x.get_num().get_str(), x.get_den().get_str()});
    verts.push_back(row);
  }
  j["vertices"] = verts;
  auto rows = [](const std::vector<ZVec>& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : m) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& x : r) row.push_back(x.get_str());
      out.push_back(row);
    }
    return out;
  };
  j["inequalities"] = rows(ineq_);
  j["equations"] = rows(eq_);
  return j.dump(2);
}

RationalPolytope RationalPolytope::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("polytope JSON: ") + ex.what());
  }
  std::vector<QVec> pts;
  std::vector<ZVec> ineq, eq;
  size_t dim = 0;
  try {
    dim = j.at("dimension").get<size_t>();
    for (const auto& row : j.at("vertices")) {
      QVec v;
      for (const auto& x : row)
        v.push_back(parse_rational(x.at(0).get<std::string>() + "/" + x.at(1).get<std::string>()));
      pts.push_back(std::move(v));
    }
    auto read_rows = [](const nlohmann::json& m) {
      std::vector<ZVec> out;
      for (const auto& row : m) {
        ZVec r;
        for (const auto& x : row) r.emplace_back(parse_rational(x.get<std::string>()).get_num());
        out.push_back(std::move(r));
      }
      return out;
    };
    if (j.contains("inequalities")) ineq = read_rows(j.at("inequalities"));
    if (j.contains("equations")) eq = read_rows(j.at("equations"));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("polytope JSON: ") + ex.what());
  }
  if (pts.empty()) {
    RationalPolytope p;
    p.dim_ = dim;
    return p;
  }
  RationalPolytope p = hull(pts);
  require(p.dim_ == dim, ErrorCode::InvalidInput, "polytope dimension field disagrees with vertices");
  require(p.vertices_.size() == pts.size(), ErrorCode::VerificationFailure, "stored vertices are redundant");
  if (j.contains("inequalities"))
    require(ineq == p.ineq_ && eq == p.eq_, ErrorCode::VerificationFailure,
            "stored H-representation disagrees with the vertices");
  return p;
}

}  // namespace okbody

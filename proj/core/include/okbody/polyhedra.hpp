#pragma once

// Exact rational cones and polytopes. Duality is computed with the double
// description method over big integers; volumes come from a pulling
// triangulation and determinants.

#include "okbody/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okbody {

/// Minimal V-description of the H-cone {x : A x >= 0, E x = 0}.
struct ConeVRep {
  std::vector<ZVec> rays;       // extreme rays of the pointed part, primitive and sorted
  std::vector<ZVec> lineality;  // basis of the lineality space (empty iff pointed)
};

/// Minimal H-description of cone(generators): rows a with a.x >= 0, plus equations.
struct ConeHRep {
  std::vector<ZVec> facets;
  std::vector<ZVec> equations;  // rref-canonical basis of the orthogonal complement of the span
};

ConeVRep cone_h_to_v(const std::vector<ZVec>& inequalities, const std::vector<ZVec>& equations, size_t dim);
ConeHRep cone_v_to_h(const std::vector<ZVec>& generators, size_t dim);

class RationalCone {
 public:
  RationalCone() = default;
  static RationalCone from_generators(const std::vector<ZVec>& generators, size_t dim);

  size_t ambient_dim() const { return dim_; }
  /// Extreme rays in canonical lexicographic order (primitive integer vectors).
  const std::vector<ZVec>& rays() const { return rays_; }
  bool pointed() const { return lineality_.empty(); }
  const std::vector<ZVec>& lineality() const { return lineality_; }
  const ConeHRep& hrep() const { return h_; }
  bool contains(const QVec& x) const;
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }

 private:
  size_t dim_ = 0;
  std::vector<ZVec> rays_;
  std::vector<ZVec> lineality_;
  ConeHRep h_;
};

/// Affine map x -> A x + b from R^n to R^r.
struct AffineMap {
  QMat a;
  QVec b;
  QVec operator()(const QVec& x) const;
};

class RationalPolytope {
 public:
  RationalPolytope() = default;
  /// Convex hull of a finite point set. Throws InvalidInput on empty input.
  static RationalPolytope hull(const std::vector<QVec>& points);
  /// Bounded polyhedron {x : a_0 + a.x >= 0 for rows of ineq, a_0 + a.x = 0 for rows of eq}.
  /// Rows have length dim+1. May be empty.
  static RationalPolytope from_h(const std::vector<QVec>& ineq, const std::vector<QVec>& eq, size_t dim);

  size_t ambient_dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }
  /// Affine dimension; -1 for the empty polytope.
  int dimension() const { return affine_dim_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  /// Rows (a_0, a) meaning a_0 + a.x >= 0, primitive integers, sorted.
  const std::vector<ZVec>& inequalities() const { return ineq_; }
  /// Rows (a_0, a) meaning a_0 + a.x = 0, rref-canonical and primitive.
  const std::vector<ZVec>& equations() const { return eq_; }

  bool contains(const QVec& x) const;
  bool contains(const RationalPolytope& other) const;
  bool strictly_inside(const QVec& x) const;  // relative interior

  /// Euclidean volume in R^n (0 unless full dimensional).
  Q volume() const;
  /// Volume inside the affine hull, normalised by the integer lattice of its
  /// direction space; a point has volume 1, the empty polytope 0.
  Q lattice_volume() const;

  RationalPolytope slice(const AffineMap& q, const QVec& target) const;
  RationalPolytope image(const AffineMap& q) const;
  RationalPolytope scaled(const Q& factor) const;
  /// Minkowski sum by vertex sums.
  RationalPolytope minkowski_sum(const RationalPolytope& other) const;
  /// All points of P in (1/k) Z^n.
  std::vector<QVec> lattice_points(long long k) const;

  std::string to_json() const;
  /// Parses the JSON schema; revalidates that both representations agree.
  static RationalPolytope from_json(const std::string& text);

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  void compute_h();

  size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<QVec> vertices_;
  std::vector<ZVec> ineq_;
  std::vector<ZVec> eq_;
};

/// Simplex volume |det(v_1 - v_0, ..., v_d - v_0)| / d!.
Q simplex_volume(const std::vector<QVec>& simplex);

}  // namespace okbody

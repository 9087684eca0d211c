#pragma once

// Torus weights on the valuation semigroup, the affine projection of the body
// onto the weight polytope, and asymptotic weight multiplicities.

#include "okbody/okounkov.hpp"

namespace okbody {

/// Integer matrix applied to weights (rows = sub-torus characters); empty means the full torus.
using TorusProjection = std::vector<IVec>;

struct WeightedPoint {
  ValuationVector nu;
  long long level = 0;
  std::vector<long long> mu;
};

struct WeightedSemigroup {
  std::vector<WeightedPoint> points;
  size_t n = 0;        // valuation length
  size_t weight_dim = 0;
};

std::vector<long long> project_weight(const TorusProjection& proj, const Weight& w);

/// Levels 1..K with the torus weight of the adapted basis member realising each nu.
/// Throws VerificationFailure if one (nu, k) carries two weights.
WeightedSemigroup weighted_semigroup(const BottSamelson& bs, const DivisorClass& d, long long max_level,
                                     const TorusProjection& proj = {});

/// The affine q with mu = k q(nu / k), i.e. mu = A nu + k b. Throws NotAffine.
AffineMap weight_projection(const WeightedSemigroup& ws);

/// #(q^{-1}(mu) cap body cap (1/k) Z^n).
long long slice_lattice_count(const RationalPolytope& body, const AffineMap& q, const QVec& mu, long long k);

struct MultiplicityRow {
  long long level = 0;
  long long sections = 0;   // semigroup members of weight k mu
  long long character = -1; // multiplicity of k mu from the character (nef classes)
  long long lattice = 0;    // slice_lattice_count at level k
  Q ratio;                  // sections / k^(d - r)
  Q error;                  // |ratio - slice volume|
};

struct MultiplicityReport {
  RationalPolytope body;
  RationalPolytope weight_polytope;
  RationalPolytope slice;
  AffineMap q;
  int d = 0;  // body dimension
  int r = 0;  // weight polytope dimension
  Q slice_volume;
  bool on_boundary = false;  // mu lies in the polytope but not its relative interior
  std::vector<MultiplicityRow> rows;
};

/// Throws NotInterior if mu is outside the weight polytope, NonIntegralAll if no k <= K clears its denominators.
MultiplicityReport multiplicity_asymptotics(const BottSamelson& bs, const DivisorClass& d, const QVec& mu,
                                            long long max_level, const TorusProjection& proj = {});

}  // namespace okbody

#pragma once

// Valuation semigroups, Okounkov bodies and empirical global cones.

#include "okbody/polyhedra.hpp"
#include "okbody/valuation.hpp"
#include "okbody/variety.hpp"

namespace okbody {

struct GradedValuationPoint {
  ValuationVector nu;
  long long level = 0;
  DivisorClass cls;
};

/// Levels 1..K of the valuation semigroup of an effective class.
std::vector<GradedValuationPoint> semigroup(const BottSamelson& bs, const DivisorClass& d, long long max_level);

struct OkounkovBody {
  RationalPolytope polytope;
  DivisorClass cls;
  long long level = 0;
};

/// Convex hull of nu / k over levels k <= K.
OkounkovBody body(const BottSamelson& bs, const DivisorClass& d, long long max_level);

/// Cone in R^n x R^n (valuation part, effective class part).
struct GlobalConeApprox {
  RationalCone cone;
  bool saturated = false;
  long long max_level = 0;
  long long box = 0;
  size_t points = 0;
};

/// Cone over (nu(s), [kD]) for effective D in [0, box]^n and k <= K; saturated
/// iff (K + 1, box + 1) yields the same extreme rays.
GlobalConeApprox global_cone(const BottSamelson& bs, long long max_level, long long box);

struct Chamber {
  ZVec from, to;           // bounding rays, effective coordinates
  DivisorClass probe;      // interior class that was peeled
  DivisorClass fixed;      // its fixed boundary part
};

struct SurfaceRecipe {
  std::vector<Chamber> chambers;
  std::vector<ZVec> generators;
  RationalCone cone;
};

/// Generator recipe for words of length two from the chamber decomposition of
/// the effective cone by the nef cone. Throws ChamberResolutionFailure.
SurfaceRecipe indok_generators_surface(const BottSamelson& bs);

struct LevelCount {
  long long level = 0;
  long long valuations = 0;  // distinct nu at this level
  long long dimension = 0;   // character dimension
};

struct VolumeReport {
  std::vector<LevelCount> levels;
  bool counts_match = true;
  Q hull_volume;
  Q previous_hull_volume;  // at K - 1
  bool stable = false;     // body(K - 1) == body(K)
  Q expected;              // volume(D) / n!
  Q gap;                   // expected - hull_volume
};

VolumeReport volume_check(const BottSamelson& bs, const DivisorClass& d, long long max_level);

/// Smallest K <= max_level with body(K - 1) == body(K) and hull volume volume(D)/n!, or -1.
long long saturation_level(const BottSamelson& bs, const DivisorClass& d, long long max_level);

struct RestrictionReport {
  RationalPolytope tail_body;       // tails of nu with nu_1 = 0
  RationalPolytope intrinsic_body;  // truncated word, restricted class
  DivisorClass restricted;
  bool contained = false;
  bool equal = false;
};

RestrictionReport restriction_check(const BottSamelson& bs, const DivisorClass& d, long long max_level);

}  // namespace okbody

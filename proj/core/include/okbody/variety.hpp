#pragma once

// A Bott-Samelson variety Z_w: root datum, word, group model, and the caches
// shared by the section, Picard and Okounkov computations.

#include "okbody/polynomial.hpp"
#include "okbody/rational.hpp"
#include "okbody/representation.hpp"
#include "okbody/rootsys.hpp"
#include "okbody/univariate.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

enum class Basis { Effective, Canonical };

struct DivisorClass {
  IVec coords;
  Basis basis = Basis::Canonical;

  static DivisorClass effective(IVec c) { return {std::move(c), Basis::Effective}; }
  static DivisorClass canonical(IVec c) { return {std::move(c), Basis::Canonical}; }
  /// Parses "eff:1,0,2" or "can:1,1".
  static DivisorClass parse(const std::string& text);
  std::string to_string() const;
  bool is_zero() const;
  DivisorClass scaled(long long k) const;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
};

/// Effective-to-canonical change of basis: canonical = m * effective.
struct BasisChange {
  std::vector<IVec> m;
  QMat inverse;
};

struct GlueOptions {
  int box_cap = 64;
  int extra_box = 2;        // slack added to the a-priori degree bound
  bool recheck = true;      // re-solve with a larger box to confirm stability
  int max_points = 8;       // specialisation points per chart before giving up
  unsigned long seed = 20240611;
};

struct SectionPoly {
  Poly poly;
  DivisorClass multidegree;  // canonical coordinates
  Weight weight;
};

struct SectionBasis {
  WeylWord word;
  IVec canonical;
  std::vector<SectionPoly> members;
};

/// Transition data for the chart where factor k is exp(x e) sdot: big-cell
/// coordinates t_j and cocycle factors c_j as functions of x = x_k.
struct ChartTransition {
  size_t chart = 0;
  std::vector<RatFunc> t;
  std::vector<RatFunc> c;
};

class BottSamelson {
 public:
  BottSamelson(CartanDatum c, WeylWord w);
  BottSamelson(CartanDatum c, WeylWord w, GroupModel g);

  const CartanDatum& cartan() const { return cartan_; }
  const WeylWord& word() const { return word_; }
  size_t n() const { return word_.size(); }
  const GroupModel& group() const { return *group_; }
  bool reduced() const { return reduced_; }

  GlueOptions& glue_options() { return glue_; }
  const GlueOptions& glue_options() const { return glue_; }
  int probe_radius() const { return probe_radius_; }
  void set_probe_radius(int r) { probe_radius_ = r; }

  /// sum_k m_k omega_{i_k}.
  Weight class_weight(const IVec& canonical) const;
  /// sum_j a_j alpha_{i_j} in root coordinates.
  std::vector<int> root_shift(const Exponent& a) const;
  /// Torus weight of the monomial t^a inside sections of canonical class m.
  Weight monomial_weight(const IVec& canonical, const Exponent& a) const;

  /// Lazily computed and verified basis change (see picard).
  const BasisChange& basis_change() const;

  ChartTransition transition(size_t chart, const QVec& specialization) const;

  /// Shared memo tables; entries are immutable once inserted.
  struct Cache;
  Cache& cache() const { return *cache_; }

 private:
  CartanDatum cartan_;
  WeylWord word_;
  std::shared_ptr<const GroupModel> group_;
  bool reduced_ = false;
  GlueOptions glue_;
  int probe_radius_ = 3;
  std::shared_ptr<Cache> cache_;
};

/// Group elements (g_1, ..., g_n) representing a point of P_w.
using PwPoint = std::vector<GroupElem<Q>>;

/// Big-cell point (exp(t_1 f_{i_1}), ..., exp(t_n f_{i_n})).
PwPoint big_cell_point(const BottSamelson& bs, const QVec& t);

/// An element of B with its inverse: torus(c) exp(u_1 e_{j_1}) exp(u_2 e_{j_2}) ...
struct BorelElement {
  GroupElem<Q> g, inverse;
};
BorelElement borel_element(const GroupModel& gm, const QVec& torus, const std::vector<std::pair<int, Q>>& unipotent);

/// (p_1 b_1, b_1^{-1} p_2 b_2, ..., b_{n-1}^{-1} p_n b_n).
PwPoint right_action(const PwPoint& p, const std::vector<BorelElement>& b);

/// omega_{i_k}(b) for the k-th factor (0-based).
Q borel_character(const BottSamelson& bs, size_t k, const GroupElem<Q>& b);

}  // namespace okbody

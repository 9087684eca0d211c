#pragma once

// Fundamental representations with exact Chevalley generators, and group
// elements realised by their action on all fundamental representations at once
// (a faithful model for the simply connected group).

#include "okbody/rational.hpp"
#include "okbody/rootsys.hpp"

#include <string>
#include <vector>

namespace okbody {

template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
Mat<S> mat_identity(size_t n) {
  Mat<S> m(n, std::vector<S>(n, S(Q(0))));
  for (size_t i = 0; i < n; ++i) m[i][i] = S(Q(1));
  return m;
}

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<S> c(n, std::vector<S>(m, S(Q(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == S(Q(0))) continue;
      for (size_t j = 0; j < m; ++j)
        if (!(b[l][j] == S(Q(0)))) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    }
  return c;
}

/// exp(s X) for a nilpotent rational matrix X and a scalar s in S.
template <class S>
Mat<S> nilpotent_exp(const QMat& x, const S& s) {
  const size_t n = x.size();
  Mat<S> out = mat_identity<S>(n);
  QMat power = x;
  S spow = s;
  Q fact = 1;
  for (unsigned k = 1; k <= n; ++k) {
    fact *= k;
    bool zero = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (power[i][j] == 0) continue;
        zero = false;
        out[i][j] = out[i][j] + spow * S(power[i][j] / fact);
      }
    if (zero) break;
    QMat next(n, QVec(n, Q(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (power[i][l] == 0) continue;
        for (size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * x[l][j];
      }
    power = std::move(next);
    spow = spow * s;
  }
  return out;
}

class FundamentalRep {
 public:
  /// Builds V_{omega_i} (0-based i) level by level from its highest-weight vector.
  static FundamentalRep build(const CartanDatum& c, int i);
  /// Loads a representation file: {"highest": h, "weights": [[..]..], "f": [[[row,col,"q"]..]..]}.
  /// The raising operators are reconstructed from the lowering ones.
  static FundamentalRep from_json(const CartanDatum& c, const std::string& text);
  std::string to_json() const;

  int fundamental_index() const { return index_; }
  size_t dim() const { return weights_.size(); }
  size_t highest() const { return highest_; }
  const std::vector<Weight>& weights() const { return weights_; }
  const QMat& f(int j) const { return f_[j]; }
  const QMat& e(int j) const { return e_[j]; }
  /// Largest N with f_j^N != 0.
  int nilpotency(int j) const { return nil_[j]; }

  /// Checks weight shifts and the commutation relations [e_i, f_j] = delta_ij h_i.
  void validate(const CartanDatum& c) const;

 private:
  void finish();

  int index_ = 0;
  size_t highest_ = 0;
  std::vector<Weight> weights_;
  std::vector<QMat> f_, e_;
  std::vector<int> nil_;
};

/// Group element acting on each fundamental representation.
template <class S>
struct GroupElem {
  std::vector<Mat<S>> rep;

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b) {
    GroupElem c;
    c.rep.reserve(a.rep.size());
    for (size_t i = 0; i < a.rep.size(); ++i) c.rep.push_back(mat_mul(a.rep[i], b.rep[i]));
    return c;
  }
};

class GroupModel {
 public:
  GroupModel() = default;
  explicit GroupModel(const CartanDatum& c);
  GroupModel(const CartanDatum& c, std::vector<FundamentalRep> reps);

  int rank() const { return static_cast<int>(reps_.size()); }
  const FundamentalRep& rep(int i) const { return reps_[i]; }

  template <class S>
  GroupElem<S> identity() const {
    GroupElem<S> g;
    for (const auto& r : reps_) g.rep.push_back(mat_identity<S>(r.dim()));
    return g;
  }
  template <class S>
  GroupElem<S> exp_f(int j, const S& t) const {
    GroupElem<S> g;
    for (const auto& r : reps_) g.rep.push_back(nilpotent_exp<S>(r.f(j), t));
    return g;
  }
  template <class S>
  GroupElem<S> exp_e(int j, const S& t) const {
    GroupElem<S> g;
    for (const auto& r : reps_) g.rep.push_back(nilpotent_exp<S>(r.e(j), t));
    return g;
  }
  /// Torus element acting on a weight-mu vector by prod_i c_i^{mu_i}.
  GroupElem<Q> torus(const QVec& c) const;
  /// Representative exp(-e_j) exp(f_j) exp(-e_j) of the simple reflection s_j.
  GroupElem<Q> sdot(int j) const;

  template <class S>
  GroupElem<S> lift(const GroupElem<Q>& g) const {
    GroupElem<S> out;
    for (const auto& m : g.rep) {
      Mat<S> s(m.size(), std::vector<S>(m.empty() ? 0 : m[0].size()));
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) s[i][j] = S(m[i][j]);
      out.rep.push_back(std::move(s));
    }
    return out;
  }

 private:
  std::vector<FundamentalRep> reps_;
};

}  // namespace okbody

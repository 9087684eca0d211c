#include "okbody/representation.hpp"

#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"

#include <json.hpp>

#include <map>

namespace okbody {

namespace {

using Sparse = std::map<size_t, Q>;

void axpy(Sparse& y, const Q& a, const Sparse& x) {
  for (const auto& [i, v] : x) {
    Q& slot = y[i];
    slot += a * v;
    if (slot == 0) y.erase(i);
  }
}

Weight minus_root(const CartanDatum& c, const Weight& w, int j) {
  Weight out = w;
  const Weight a = c.simple_root(j);
  for (size_t k = 0; k < out.size(); ++k) out[k] -= a[k];
  return out;
}

}  // namespace

FundamentalRep FundamentalRep::build(const CartanDatum& c, int i) {
  require(i >= 0 && i < c.rank(), ErrorCode::InvalidInput, "fundamental index out of range");
  const int r = c.rank();
  FundamentalRep rep;
  rep.index_ = i;
  rep.highest_ = 0;
  rep.weights_.push_back(c.fundamental_weight(i));

  // Per basis vector: images under e_i and f_j, as sparse vectors.
  std::vector<std::vector<Sparse>> eimg{std::vector<Sparse>(r)};
  std::vector<std::vector<Sparse>> fimg;
  std::vector<size_t> level{0};
  size_t start = 0, end = 1;

  while (start < end) {
    // Candidates f_j b for b in the current level, grouped by weight.
    struct Candidate {
      size_t b;
      int j;
      std::vector<Sparse> e;  // e_i(f_j b) for every i
    };
    std::map<Weight, std::vector<Candidate>> groups;
    for (size_t b = start; b < end; ++b) {
      fimg.emplace_back(r);
      for (int j = 0; j < r; ++j) {
        Candidate cand{b, j, std::vector<Sparse>(r)};
        bool nonzero = false;
        for (int k = 0; k < r; ++k) {
          // e_k f_j b = f_j e_k b + delta_kj <wt b, alpha_k^vee> b
          Sparse v;
          for (const auto& [u, coef] : eimg[b][k]) axpy(v, coef, fimg[u][j]);
          if (k == j && rep.weights_[b][k] != 0) axpy(v, Q(static_cast<long>(rep.weights_[b][k])), Sparse{{b, Q(1)}});
          nonzero = nonzero || !v.empty();
          cand.e[k] = std::move(v);
        }
        if (nonzero) groups[minus_root(c, rep.weights_[b], j)].push_back(std::move(cand));
      }
    }
    const size_t next_start = end;
    for (auto& [wt, cands] : groups) {
      // Flatten E-images over (k, index) to pick a basis and express the rest.
      std::map<std::pair<int, size_t>, size_t> col;
      for (const auto& cand : cands)
        for (int k = 0; k < r; ++k)
          for (const auto& [u, v] : cand.e[k]) col.emplace(std::make_pair(k, u), 0);
      size_t ncols = 0;
      for (auto& [key, idx] : col) idx = ncols++;
      QMat rows;
      for (const auto& cand : cands) {
        QVec row(ncols, Q(0));
        for (int k = 0; k < r; ++k)
          for (const auto& [u, v] : cand.e[k]) row[col.at({k, u})] = v;
        rows.push_back(std::move(row));
      }
      const auto chosen = independent_rows(rows, ncols);
      std::vector<size_t> new_index;
      for (size_t s : chosen) {
        new_index.push_back(rep.weights_.size());
        rep.weights_.push_back(wt);
        eimg.push_back(cands[s].e);
        level.push_back(level[cands[s].b] + 1);
      }
      // Express every candidate in the chosen vectors: solve sum x_s E_s = E_cand.
      QMat basis_t(ncols, QVec(chosen.size()));
      for (size_t s = 0; s < chosen.size(); ++s)
        for (size_t q = 0; q < ncols; ++q) basis_t[q][s] = rows[chosen[s]][q];
      for (size_t ci = 0; ci < cands.size(); ++ci) {
        auto x = solve(basis_t, rows[ci], chosen.size());
        require(x.has_value(), ErrorCode::Internal, "representation construction lost a vector");
        Sparse img;
        for (size_t s = 0; s < chosen.size(); ++s)
          if ((*x)[s] != 0) img[new_index[s]] = (*x)[s];
        fimg[cands[ci].b][cands[ci].j] = std::move(img);
      }
    }
    start = next_start;
    end = rep.weights_.size();
  }

  const size_t n = rep.weights_.size();
  rep.f_.assign(r, QMat(n, QVec(n, Q(0))));
  rep.e_.assign(r, QMat(n, QVec(n, Q(0))));
  for (size_t b = 0; b < n; ++b)
    for (int j = 0; j < r; ++j) {
      for (const auto& [u, v] : fimg[b][j]) rep.f_[j][u][b] = v;
      for (const auto& [u, v] : eimg[b][j]) rep.e_[j][u][b] = v;
    }
  rep.finish();
  return rep;
}

void FundamentalRep::finish() {
  nil_.assign(f_.size(), 0);
  for (size_t j = 0; j < f_.size(); ++j) {
    QMat p = f_[j];
    int k = 0;
    auto nonzero = [](const QMat& m) {
      for (const auto& row : m)
        for (const auto& x : row)
          if (x != 0) return true;
      return false;
    };
    while (nonzero(p)) {
      ++k;
      p = multiply(p, f_[j], weights_.size());
    }
    nil_[j] = k;
  }
}

void FundamentalRep::validate(const CartanDatum& c) const {
  const size_t n = dim();
  const int r = c.rank();
  require(f_.size() == static_cast<size_t>(r) && e_.size() == static_cast<size_t>(r), ErrorCode::InvalidInput,
          "representation needs one operator per simple root");
  for (int j = 0; j < r; ++j) {
    const Weight a = c.simple_root(j);
    for (size_t u = 0; u < n; ++u)
      for (size_t b = 0; b < n; ++b) {
        if (f_[j][u][b] != 0) {
          for (int k = 0; k < r; ++k)
            require(weights_[u][k] == weights_[b][k] - a[k], ErrorCode::InvalidInput, "f does not lower by a root");
        }
        if (e_[j][u][b] != 0) {
          for (int k = 0; k < r; ++k)
            require(weights_[u][k] == weights_[b][k] + a[k], ErrorCode::InvalidInput, "e does not raise by a root");
        }
      }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const QMat ef = multiply(e_[i], f_[j], n);
      const QMat fe = multiply(f_[j], e_[i], n);
      for (size_t u = 0; u < n; ++u)
        for (size_t b = 0; b < n; ++b) {
          Q expect = (i == j && u == b) ? Q(static_cast<long>(weights_[b][i])) : Q(0);
          require(ef[u][b] - fe[u][b] == expect, ErrorCode::InvalidInput, "commutation relation [e,f]=h fails");
        }
    }
  for (int j = 0; j < r; ++j)
    for (size_t u = 0; u < n; ++u) require(e_[j][u][highest_] == 0, ErrorCode::InvalidInput, "highest vector not killed by e");
}

FundamentalRep FundamentalRep::from_json(const CartanDatum& c, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("representation file: ") + ex.what());
  }
  const int r = c.rank();
  FundamentalRep rep;
  try {
    rep.highest_ = j.at("highest").get<size_t>();
    for (const auto& w : j.at("weights")) rep.weights_.push_back(w.get<Weight>());
    const size_t n = rep.weights_.size();
    require(rep.highest_ < n, ErrorCode::InvalidInput, "highest index out of range");
    require(j.at("f").size() == static_cast<size_t>(r), ErrorCode::InvalidInput, "need one f matrix per simple root");
    rep.f_.assign(r, QMat(n, QVec(n, Q(0))));
    for (int k = 0; k < r; ++k)
      for (const auto& entry : j.at("f")[k]) {
        const size_t row = entry.at(0).get<size_t>(), colm = entry.at(1).get<size_t>();
        require(row < n && colm < n, ErrorCode::InvalidInput, "f entry out of range");
        rep.f_[k][row][colm] = parse_rational(entry.at(2).get<std::string>());
      }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("representation file: ") + ex.what());
  }
  const size_t n = rep.weights_.size();
  for (auto& w : rep.weights_) require(static_cast<int>(w.size()) == r, ErrorCode::InvalidInput, "weight length");
  const Weight& hw = rep.weights_[rep.highest_];
  int fund = -1;
  for (int k = 0; k < r; ++k) {
    if (hw[k] == 1 && fund < 0) fund = k;
    else require(hw[k] == 0, ErrorCode::InvalidInput, "highest weight is not fundamental");
  }
  require(fund >= 0, ErrorCode::InvalidInput, "highest weight is not fundamental");
  rep.index_ = fund;

  // Depth of each vector below the highest weight, then e by induction on depth.
  std::vector<long long> depth(n);
  for (size_t b = 0; b < n; ++b) {
    Weight diff(r);
    for (int k = 0; k < r; ++k) diff[k] = hw[k] - rep.weights_[b][k];
    Q total = 0;
    for (const auto& x : weight_to_root_coords(c, diff)) total += x;
    require(total.get_den() == 1 && total >= 0, ErrorCode::InvalidInput, "weight not below the highest weight");
    depth[b] = to_ll(total.get_num());
  }
  std::vector<size_t> order(n);
  for (size_t b = 0; b < n; ++b) order[b] = b;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return depth[a] < depth[b]; });
  rep.e_.assign(r, QMat(n, QVec(n, Q(0))));
  for (size_t u : order) {
    if (depth[u] == 0) {
      require(u == rep.highest_, ErrorCode::InvalidInput, "several vectors of highest weight");
      continue;
    }
    // u = sum_{j,b} x_{jb} f_j b over the previous depth.
    std::vector<std::pair<int, size_t>> gens;
    for (size_t b = 0; b < n; ++b)
      if (depth[b] == depth[u] - 1)
        for (int k = 0; k < r; ++k) gens.emplace_back(k, b);
    QMat a(n, QVec(gens.size(), Q(0)));
    for (size_t g = 0; g < gens.size(); ++g)
      for (size_t row = 0; row < n; ++row) a[row][g] = rep.f_[gens[g].first][row][gens[g].second];
    QVec target(n, Q(0));
    target[u] = 1;
    auto x = solve(a, target, gens.size());
    require(x.has_value(), ErrorCode::InvalidInput, "representation is not generated by its highest vector");
    for (int i = 0; i < r; ++i) {
      QVec col(n, Q(0));
      for (size_t g = 0; g < gens.size(); ++g) {
        if ((*x)[g] == 0) continue;
        const auto [jj, b] = gens[g];
        // f_j e_i b + delta_ij wt(b)_i b
        for (size_t w = 0; w < n; ++w) {
          if (rep.e_[i][w][b] == 0) continue;
          for (size_t row = 0; row < n; ++row) col[row] += (*x)[g] * rep.f_[jj][row][w] * rep.e_[i][w][b];
        }
        if (i == jj) col[b] += (*x)[g] * static_cast<long>(rep.weights_[b][i]);
      }
      for (size_t row = 0; row < n; ++row) rep.e_[i][row][u] = col[row];
    }
  }
  rep.finish();
  rep.validate(c);
  return rep;
}

std::string FundamentalRep::to_json() const {
  nlohmann::json j;
  j["highest"] = highest_;
  j["weights"] = weights_;
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& m : f_) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t u = 0; u < m.size(); ++u)
      for (size_t b = 0; b < m.size(); ++b)
        if (m[u][b] != 0) entries.push_back({u, b, m[u][b].get_str()});
    fs.push_back(entries);
  }
  j["f"] = fs;
  return j.dump();
}

GroupModel::GroupModel(const CartanDatum& c) {
  for (int i = 0; i < c.rank(); ++i) reps_.push_back(FundamentalRep::build(c, i));
}

GroupModel::GroupModel(const CartanDatum& c, std::vector<FundamentalRep> reps) : reps_(std::move(reps)) {
  require(reps_.size() == static_cast<size_t>(c.rank()), ErrorCode::InvalidInput, "need one representation per node");
  for (int i = 0; i < c.rank(); ++i) {
    require(reps_[i].fundamental_index() == i, ErrorCode::InvalidInput, "representations out of order");
    reps_[i].validate(c);
  }
}

GroupElem<Q> GroupModel::torus(const QVec& c) const {
  GroupElem<Q> g;
  for (const auto& r : reps_) {
    Mat<Q> m = mat_identity<Q>(r.dim());
    for (size_t b = 0; b < r.dim(); ++b) {
      Q v = 1;
      for (size_t i = 0; i < c.size(); ++i) {
        const long long e = r.weights()[b][i];
        Q p = 1;
        for (long long k = 0; k < (e < 0 ? -e : e); ++k) p *= c[i];
        v *= e < 0 ? 1 / p : p;
      }
      m[b][b] = v;
    }
    g.rep.push_back(std::move(m));
  }
  return g;
}

GroupElem<Q> GroupModel::sdot(int j) const {
  return exp_e<Q>(j, Q(-1)) * exp_f<Q>(j, Q(1)) * exp_e<Q>(j, Q(-1));
}

}  // namespace okbody

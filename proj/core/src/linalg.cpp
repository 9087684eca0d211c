#include "okbody/linalg.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <utility>

namespace okbody {

Rref rref(QMat m, size_t ncols) {
  Rref out;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Q inv = 1 / m[row][col];
    for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Q factor = m[r][col];
      for (size_t j = col; j < ncols; ++j) m[r][j] -= factor * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

size_t rank(const QMat& m, size_t ncols) { return rref(m, ncols).pivots.size(); }

QMat nullspace(const QMat& m, size_t ncols) {
  const Rref r = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMat basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Q(0));
    v[free] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b, size_t ncols) {
  QMat aug = m;
  for (size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(ncols);
    aug[i].push_back(b[i]);
  }
  const Rref r = rref(aug, ncols + 1);
  QVec x(ncols, Q(0));
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == ncols) return std::nullopt;
    x[r.pivots[i]] = r.rows[i][ncols];
  }
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  const size_t n = m.size();
  QMat aug(n, QVec(2 * n, Q(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const Rref r = rref(aug, 2 * n);
  if (r.pivots.size() < n || r.pivots[n - 1] >= n) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = r.rows[i][n + j];
  return inv;
}

Q determinant(QMat m) {
  const size_t n = m.size();
  Q det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Q factor = m[r][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

QMat transpose(const QMat& m, size_t ncols) {
  QMat t(ncols, QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

QMat multiply(const QMat& a, const QMat& b, size_t bcols) {
  QMat c(a.size(), QVec(bcols, Q(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < bcols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QVec apply(const QMat& m, const QVec& x) {
  QVec y(m.size(), Q(0));
  for (size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

QMat identity(size_t n) {
  QMat m(n, QVec(n, Q(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<ZVec> integer_kernel(const std::vector<ZVec>& c, size_t n) {
  // Column operations on c, mirrored on u = identity, bring c to column echelon
  // form; the columns of u matching zero columns of c span the kernel lattice.
  std::vector<ZVec> a = c;
  std::vector<ZVec> u(n, ZVec(n, Z(0)));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_op = [&](size_t dst, size_t src, const Z& factor) {  // col dst -= factor * col src
    for (auto& row : a) row[dst] -= factor * row[src];
    for (auto& row : u) row[dst] -= factor * row[src];
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  size_t lead = 0;
  for (size_t r = 0; r < a.size() && lead < n; ++r) {
    // Euclid across columns lead..n-1 in row r until at most one is nonzero.
    while (true) {
      size_t best = n;
      for (size_t j = lead; j < n; ++j)
        if (a[r][j] != 0 && (best == n || abs(a[r][j]) < abs(a[r][best]))) best = j;
      if (best == n) break;
      bool others = false;
      for (size_t j = lead; j < n; ++j) {
        if (j == best || a[r][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][best].get_mpz_t());
        col_op(j, best, q);
        if (a[r][j] != 0) others = true;
      }
      if (!others) {
        col_swap(lead, best);
        ++lead;
        break;
      }
    }
  }
  std::vector<ZVec> kernel;
  for (size_t j = lead; j < n; ++j) {
    ZVec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = u[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<size_t> independent_rows(const QMat& m, size_t ncols) {
  EchelonBasis basis(ncols);
  std::vector<size_t> picked;
  for (size_t i = 0; i < m.size(); ++i)
    if (basis.insert(m[i])) picked.push_back(i);
  return picked;
}

void EchelonBasis::reduce(QVec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const Q factor = v[p];
    for (size_t j = p; j < ncols_; ++j) v[j] -= factor * rows_[i][j];
  }
}

bool EchelonBasis::insert(QVec v) {
  require(v.size() == ncols_, ErrorCode::Internal, "echelon row has wrong length");
  reduce(v);
  size_t p = 0;
  while (p < ncols_ && v[p] == 0) ++p;
  if (p == ncols_) return false;
  const Q inv = 1 / v[p];
  for (size_t j = p; j < ncols_; ++j) v[j] *= inv;
  // Keep rows fully reduced at existing pivots so reduce() stays a single pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Q factor = row[p];
    for (size_t j = p; j < ncols_; ++j) row[j] -= factor * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(QVec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

}  // namespace okbody

#pragma once

// Dense exact linear algebra over Q and Z. Matrices are row-major vectors of
// rows; dimensions in this engine stay small (tens to a few hundred).

#include "okbody/rational.hpp"

#include <optional>
#include <vector>

namespace okbody {

struct Rref {
  QMat rows;                    // nonzero rows only, pivot entries normalised to 1
  std::vector<size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form of a (rows x ncols) matrix.
Rref rref(QMat m, size_t ncols);

size_t rank(const QMat& m, size_t ncols);

/// Basis of {x : m x = 0}, one vector per free column, in RREF-canonical form.
QMat nullspace(const QMat& m, size_t ncols);

/// Some solution of m x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<QVec> solve(const QMat& m, const QVec& b, size_t ncols);

std::optional<QMat> inverse(const QMat& m);

Q determinant(QMat m);

QMat transpose(const QMat& m, size_t ncols);
QMat multiply(const QMat& a, const QMat& b, size_t bcols);
QVec apply(const QMat& m, const QVec& x);
QMat identity(size_t n);

/// Lattice basis of {x in Z^n : c x = 0} via unimodular column reduction.
std::vector<ZVec> integer_kernel(const std::vector<ZVec>& c, size_t n);

/// Indices of a maximal linearly independent subset of the rows, chosen greedily.
std::vector<size_t> independent_rows(const QMat& m, size_t ncols);

/// Incrementally maintained echelon basis used for span membership and rank.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t ncols) : ncols_(ncols) {}

  /// Reduces v against the basis; returns true (and stores it) if independent.
  bool insert(QVec v);
  bool contains(QVec v) const;
  size_t rank() const { return rows_.size(); }

 private:
  void reduce(QVec& v) const;

  size_t ncols_;
  QMat rows_;
  std::vector<size_t> pivots_;
};

}  // namespace okbody

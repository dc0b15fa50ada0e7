#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "tenfold/scalar.hpp"

// Eigen scalar registration. Both ground-field types are plain commutative
// fields as far as the dense kernels are concerned; conjugation is always
// explicit in this codebase, so GaussianRational is registered with
// IsComplex = 0 and Eigen never conjugates behind our back.
namespace Eigen {

template <>
struct NumTraits<tenfold::Rational> : GenericNumTraits<tenfold::Rational> {
  typedef tenfold::Rational Real;
  typedef tenfold::Rational NonInteger;
  typedef tenfold::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
};

template <>
struct NumTraits<tenfold::GaussianRational> : GenericNumTraits<tenfold::GaussianRational> {
  typedef tenfold::GaussianRational Real;
  typedef tenfold::GaussianRational NonInteger;
  typedef tenfold::GaussianRational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 80,
    MulCost = 160
  };
};

}  // namespace Eigen

namespace tenfold {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
bool isZeroVector(const VectorX<Scalar>& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (!isZero(v[k])) return false;
  return true;
}

template <typename Scalar>
bool equalMatrices(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index c = 0; c < a.cols(); ++c)
    for (Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

template <typename Scalar>
bool equalVectors(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Index k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

/// Index of the first nonzero entry, or -1 for the zero vector.
template <typename Scalar>
Index leadingIndex(const VectorX<Scalar>& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (!isZero(v[k])) return k;
  return -1;
}

/// Scales so the first nonzero coordinate becomes 1; the zero vector is
/// returned unchanged. Used to make witnesses and span bases reproducible.
template <typename Scalar>
VectorX<Scalar> normalizeLeading(VectorX<Scalar> v) {
  Index lead = leadingIndex(v);
  if (lead < 0) return v;
  Scalar inv = Scalar(1) / v[lead];
  for (Index k = lead; k < v.size(); ++k) v[k] = v[k] * inv;
  return v;
}

/// In-place reduced row echelon form by exact Gauss-Jordan elimination with
/// first-nonzero pivoting (deterministic, no magnitude comparisons needed over
/// an exact field). Returns the rank; pivot columns go to `pivotCols`.
template <typename Scalar>
Index rowReduce(MatrixX<Scalar>& m, std::vector<Index>* pivotCols = nullptr) {
  const Index rows = m.rows(), cols = m.cols();
  if (pivotCols) pivotCols->clear();
  Index rank = 0;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index pivot = -1;
    for (Index r = rank; r < rows; ++r) {
      if (!isZero(m(r, c))) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Scalar inv = Scalar(1) / m(rank, c);
    for (Index cc = c; cc < cols; ++cc) m(rank, cc) = m(rank, cc) * inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == rank || isZero(m(r, c))) continue;
      Scalar f = m(r, c);
      for (Index cc = c; cc < cols; ++cc) m(r, cc) = m(r, cc) - f * m(rank, cc);
    }
    if (pivotCols) pivotCols->push_back(c);
    ++rank;
  }
  return rank;
}

template <typename Scalar>
Index rank(MatrixX<Scalar> m) {
  return rowReduce(m);
}

/// Canonical nullspace basis: one column per free variable, in ascending free
/// column order, with a 1 in the free slot and the pivot rows filled from the
/// reduced echelon form.
template <typename Scalar>
MatrixX<Scalar> nullspaceBasis(MatrixX<Scalar> m) {
  const Index cols = m.cols();
  std::vector<Index> pivots;
  rowReduce(m, &pivots);
  std::vector<bool> isPivot(cols, false);
  for (Index c : pivots) isPivot[c] = true;
  MatrixX<Scalar> basis(cols, cols - static_cast<Index>(pivots.size()));
  basis.setZero();
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = -m(r, f);
    basis(f, out) = Scalar(1);
    ++out;
  }
  return basis;
}

/// Exact solution set of A x = b.
template <typename Scalar>
struct LinearSolution {
  bool consistent = false;      // empty solution set is a valid answer, not a failure
  VectorX<Scalar> particular;   // valid when consistent
  MatrixX<Scalar> nullspace;    // canonical basis, columns
};

template <typename Scalar>
LinearSolution<Scalar> solveLinear(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  const Index rows = a.rows(), cols = a.cols();
  MatrixX<Scalar> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<Index> pivots;
  rowReduce(aug, &pivots);

  LinearSolution<Scalar> sol;
  if (!pivots.empty() && pivots.back() == cols) return sol;  // 0 = 1 row: inconsistent
  sol.consistent = true;
  sol.particular = VectorX<Scalar>::Zero(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, cols);

  std::vector<bool> isPivot(cols, false);
  for (Index c : pivots) isPivot[c] = true;
  sol.nullspace = MatrixX<Scalar>(cols, cols - static_cast<Index>(pivots.size()));
  sol.nullspace.setZero();
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.nullspace(pivots[r], out) = -aug(r, f);
    sol.nullspace(f, out) = Scalar(1);
    ++out;
  }
  return sol;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> tryInverse(const MatrixX<Scalar>& a) {
  const Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  if (rowReduce(aug) < n) return std::nullopt;
  return MatrixX<Scalar>(aug.rightCols(n));
}

template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  const Index n = m.rows();
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index pivot = -1;
    for (Index r = c; r < n; ++r)
      if (!isZero(m(r, c))) { pivot = r; break; }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    Scalar inv = Scalar(1) / m(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (isZero(m(r, c))) continue;
      Scalar f = m(r, c) * inv;
      for (Index cc = c; cc < n; ++cc) m(r, cc) = m(r, cc) - f * m(c, cc);
    }
  }
  return det;
}

/// Incrementally maintained reduced row echelon basis of a growing span.
/// Insertion order independent canonical form; rows are kept pivot-sorted.
template <typename Scalar>
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambientDim) : cols_(ambientDim) {}

  /// Reduces `v` against the current basis; inserts the remainder when nonzero.
  /// Returns true when the span grew.
  bool insert(VectorX<Scalar> v) {
    reduce(v);
    Index lead = leadingIndex(v);
    if (lead < 0) return false;
    Scalar inv = Scalar(1) / v[lead];
    for (Index k = lead; k < cols_; ++k) v[k] = v[k] * inv;
    // eliminate the new pivot from existing rows to stay fully reduced
    for (auto& row : rows_) {
      if (isZero(row[lead])) continue;
      Scalar f = row[lead];
      for (Index k = lead; k < cols_; ++k) row[k] = row[k] - f * v[k];
    }
    auto pos = rows_.begin();
    auto pivPos = pivots_.begin();
    while (pivPos != pivots_.end() && *pivPos < lead) { ++pivPos; ++pos; }
    rows_.insert(pos, std::move(v));
    pivots_.insert(pivPos, lead);
    return true;
  }

  bool contains(VectorX<Scalar> v) const {
    reduce(v);
    return leadingIndex(v) < 0;
  }

  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index ambientDim() const { return cols_; }
  const std::vector<VectorX<Scalar>>& rows() const { return rows_; }

 private:
  void reduce(VectorX<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Scalar f = v[pivots_[r]];
      if (isZero(f)) continue;
      const VectorX<Scalar>& row = rows_[r];
      for (Index k = pivots_[r]; k < cols_; ++k) v[k] = v[k] - f * row[k];
    }
  }

  Index cols_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Index> pivots_;
};

/// Congruence diagonalization of a symmetric matrix over a field of
/// characteristic zero: returns P with P^T B P diagonal, plus the diagonal.
/// Used to extract isotropic/negative vectors from indefinite forms.
template <typename Scalar>
struct CongruenceDiagonal {
  MatrixX<Scalar> transform;  // columns = diagonalizing basis
  VectorX<Scalar> diagonal;
};

template <typename Scalar>
CongruenceDiagonal<Scalar> congruentDiagonalize(MatrixX<Scalar> b) {
  const Index n = b.rows();
  MatrixX<Scalar> p = MatrixX<Scalar>::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    if (isZero(b(k, k))) {
      // bring a nonzero onto the diagonal: prefer a later diagonal entry,
      // else fold in a row with b(k,j) != 0 (char != 2 trick)
      Index swapWith = -1;
      for (Index j = k + 1; j < n; ++j)
        if (!isZero(b(j, j))) { swapWith = j; break; }
      if (swapWith >= 0) {
        b.row(k).swap(b.row(swapWith));
        b.col(k).swap(b.col(swapWith));
        p.col(k).swap(p.col(swapWith));
      } else {
        Index j = -1;
        for (Index jj = k + 1; jj < n; ++jj)
          if (!isZero(b(k, jj))) { j = jj; break; }
        if (j < 0) continue;  // row is zero: diagonal entry stays 0
        b.row(k) += b.row(j);
        b.col(k) += b.col(j);
        p.col(k) += p.col(j);
      }
    }
    if (isZero(b(k, k))) continue;
    Scalar inv = Scalar(1) / b(k, k);
    for (Index j = k + 1; j < n; ++j) {
      if (isZero(b(k, j))) continue;
      Scalar f = b(k, j) * inv;
      b.row(j) -= f * b.row(k);
      b.col(j) -= f * b.col(k);
      p.col(j) -= f * p.col(k);
    }
  }
  CongruenceDiagonal<Scalar> out;
  out.transform = std::move(p);
  out.diagonal = b.diagonal();
  return out;
}

}  // namespace tenfold

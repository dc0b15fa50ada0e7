#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tenfold/linalg.hpp"

namespace tenfold {

enum class FieldTag : std::uint8_t { Real, Complex };  // Q models R, Q(i) models C

template <typename Scalar>
struct FieldOf;
template <>
struct FieldOf<Rational> {
  static constexpr FieldTag value = FieldTag::Real;
};
template <>
struct FieldOf<GaussianRational> {
  static constexpr FieldTag value = FieldTag::Complex;
};

enum class ParityTag : std::uint8_t { Even, Odd, Mixed };

/// Finite-dimensional associative superalgebra presented by dense structure
/// constants over an exact field. Construction validates the three axioms
/// (grading, associativity, unit law) exhaustively over basis tuples unless
/// the caller explicitly opts out for internally generated tables; validate()
/// re-checks at any time. Instances are immutable and cheap to copy (shared
/// storage); all operations are pure, so concurrent reads are safe.
template <typename ScalarT>
class SuperAlgebra {
 public:
  using Scalar = ScalarT;
  using Vec = VectorX<Scalar>;
  using Mat = MatrixX<Scalar>;

  SuperAlgebra() = default;

  /// table[i][j] = coordinates of b_i * b_j.
  static SuperAlgebra fromTable(std::vector<std::uint8_t> parity,
                                const std::vector<std::vector<Vec>>& table, Vec unit,
                                bool validateNow = true) {
    const Index n = static_cast<Index>(parity.size());
    std::vector<Mat> lmul(n);
    for (Index i = 0; i < n; ++i) {
      lmul[i] = Mat(n, n);
      for (Index j = 0; j < n; ++j) lmul[i].col(j) = table[i][j];
    }
    return fromLeftMul(std::move(parity), std::move(lmul), std::move(unit), validateNow);
  }

  /// leftMul[i] = matrix of left multiplication by b_i (column j = b_i * b_j).
  static SuperAlgebra fromLeftMul(std::vector<std::uint8_t> parity, std::vector<Mat> leftMul,
                                  Vec unit, bool validateNow = true) {
    auto impl = std::make_shared<Impl>();
    impl->dim = static_cast<Index>(parity.size());
    impl->parity = std::move(parity);
    impl->lmul = std::move(leftMul);
    impl->unit = std::move(unit);
    if (impl->dim <= 0) throw Error("superalgebra must have positive dimension");
    if (impl->unit.size() != impl->dim ||
        static_cast<Index>(impl->lmul.size()) != impl->dim)
      throw Error("inconsistent table dimensions");
    for (const Mat& m : impl->lmul)
      if (m.rows() != impl->dim || m.cols() != impl->dim)
        throw Error("inconsistent table dimensions");
    for (Index i = 0; i < impl->dim; ++i) {
      if (impl->parity[i] == 0)
        impl->evenIdx.push_back(i);
      else if (impl->parity[i] == 1)
        impl->oddIdx.push_back(i);
      else
        throw Error("parity vector entries must be 0 or 1");
    }
    SuperAlgebra a;
    a.impl_ = std::move(impl);
    if (validateNow) a.validate();
    return a;
  }

  FieldTag field() const { return FieldOf<Scalar>::value; }
  Index dim() const { return impl_->dim; }
  std::uint8_t parity(Index i) const { return impl_->parity[i]; }
  const std::vector<std::uint8_t>& parities() const { return impl_->parity; }
  const Vec& unit() const { return impl_->unit; }
  const Mat& basisLeftMul(Index i) const { return impl_->lmul[i]; }
  Vec basisProduct(Index i, Index j) const { return impl_->lmul[i].col(j); }
  const std::vector<Index>& evenIndices() const { return impl_->evenIdx; }
  const std::vector<Index>& oddIndices() const { return impl_->oddIdx; }
  Index evenDim() const { return static_cast<Index>(impl_->evenIdx.size()); }
  Index oddDim() const { return static_cast<Index>(impl_->oddIdx.size()); }
  bool valid() const { return impl_ != nullptr; }

  /// Exhaustive axiom check over basis tuples: grading and unit law are
  /// O(dim^2..3) scalar tests; associativity walks only the nonzero structure
  /// constants, so monomial-style tables (Clifford, matrix units, tensors of
  /// such) validate in O(dim^3) small-term work rather than O(dim^5).
  void validate() const {
    const Index n = dim();
    // sparse view: nz[i][j] = nonzero (k, c) of b_i b_j
    std::vector<std::vector<std::vector<std::pair<Index, Scalar>>>> nz(n);
    for (Index i = 0; i < n; ++i) {
      nz[i].resize(n);
      for (Index j = 0; j < n; ++j) {
        const Mat& li = impl_->lmul[i];
        for (Index k = 0; k < n; ++k)
          if (!isZero(li(k, j))) nz[i][j].emplace_back(k, li(k, j));
      }
    }

    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        std::uint8_t want = impl_->parity[i] ^ impl_->parity[j];
        for (const auto& [k, c] : nz[i][j])
          if (impl_->parity[k] != want) throw GradingViolation(i, j, k);
      }

    checkUnit();

    // (b_i b_j) b_k == b_i (b_j b_k), accumulated sparsely into scratch vectors
    Vec lhs = Vec::Zero(n), rhs = Vec::Zero(n);
    std::vector<Index> touchedL, touchedR;
    touchedL.reserve(n);
    touchedR.reserve(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const auto& vij = nz[i][j];
        for (Index k = 0; k < n; ++k) {
          for (const auto& [m, c] : vij)
            for (const auto& [t, d] : nz[m][k]) {
              if (isZero(lhs[t])) touchedL.push_back(t);
              lhs[t] += c * d;
            }
          for (const auto& [m, c] : nz[j][k])
            for (const auto& [t, d] : nz[i][m]) {
              if (isZero(rhs[t])) touchedR.push_back(t);
              rhs[t] += c * d;
            }
          bool ok = true;
          for (Index t : touchedL)
            if (lhs[t] != rhs[t]) { ok = false; break; }
          if (ok)
            for (Index t : touchedR)
              if (rhs[t] != lhs[t]) { ok = false; break; }
          for (Index t : touchedL) lhs[t] = Scalar(0);
          for (Index t : touchedR) rhs[t] = Scalar(0);
          touchedL.clear();
          touchedR.clear();
          if (!ok) throw NonAssociative(i, j, k);
        }
      }
  }

  Vec mul(const Vec& a, const Vec& b) const {
    const Index n = dim();
    Vec res = Vec::Zero(n);
    for (Index i = 0; i < n; ++i) {
      if (isZero(a[i])) continue;
      res.noalias() += a[i] * (impl_->lmul[i] * b);
    }
    return res;
  }

  /// Matrix of x |-> a * x in the basis coordinates.
  Mat leftMul(const Vec& a) const {
    const Index n = dim();
    Mat m = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      if (isZero(a[i])) continue;
      m += a[i] * impl_->lmul[i];
    }
    return m;
  }

  /// Two-sided inverse via the exact linear system L_a x = unit; both product
  /// checks run before anything is returned.
  std::optional<Vec> tryInvert(const Vec& a) const {
    if (isZeroVector<Scalar>(a)) return std::nullopt;
    LinearSolution<Scalar> sol = solveLinear<Scalar>(leftMul(a), impl_->unit);
    if (!sol.consistent) return std::nullopt;
    const Vec& x = sol.particular;
    if (!equalVectors<Scalar>(mul(a, x), impl_->unit)) return std::nullopt;
    if (!equalVectors<Scalar>(mul(x, a), impl_->unit)) return std::nullopt;
    return x;
  }

  Vec invert(const Vec& a) const {
    auto inv = tryInvert(a);
    if (!inv) throw NotInvertible();
    return *inv;
  }

  ParityTag parityOf(const Vec& a) const {
    bool even = false, odd = false;
    for (Index k = 0; k < dim(); ++k) {
      if (isZero(a[k])) continue;
      (impl_->parity[k] == 0 ? even : odd) = true;
    }
    if (even && odd) return ParityTag::Mixed;
    if (odd) return ParityTag::Odd;
    return ParityTag::Even;  // zero counts as even
  }

  /// Tests a == c * unit and reports c.
  bool isUnitMultiple(const Vec& a, Scalar* coeff = nullptr) const {
    Index lead = leadingIndex(impl_->unit);
    Scalar c = a[lead] / impl_->unit[lead];
    if (!equalVectors<Scalar>(a, Vec(c * impl_->unit))) return false;
    if (coeff) *coeff = c;
    return true;
  }

  bool sharesStorage(const SuperAlgebra& o) const { return impl_ == o.impl_; }

  /// Structural equality of the presentations (same parity, unit, table).
  bool sameTable(const SuperAlgebra& o) const {
    if (impl_ == o.impl_) return true;
    if (dim() != o.dim() || impl_->parity != o.impl_->parity) return false;
    if (!equalVectors<Scalar>(impl_->unit, o.impl_->unit)) return false;
    for (Index i = 0; i < dim(); ++i)
      if (!equalMatrices<Scalar>(impl_->lmul[i], o.impl_->lmul[i])) return false;
    return true;
  }

 private:
  struct Impl {
    Index dim = 0;
    std::vector<std::uint8_t> parity;
    std::vector<Mat> lmul;
    Vec unit;
    std::vector<Index> evenIdx, oddIdx;
  };

  void checkUnit() const {
    const Index n = dim();
    if (isZeroVector<Scalar>(impl_->unit)) throw BadUnit("unit is zero");
    for (Index k = 0; k < n; ++k)
      if (!isZero(impl_->unit[k]) && impl_->parity[k] != 0)
        throw BadUnit("unit has an odd component");
    if (!equalMatrices<Scalar>(leftMul(impl_->unit), Mat::Identity(n, n)))
      throw BadUnit("unit * x != x");
    for (Index j = 0; j < n; ++j) {
      Vec rj = impl_->lmul[j] * impl_->unit;  // b_j * unit
      for (Index k = 0; k < n; ++k)
        if (rj[k] != ((k == j) ? Scalar(1) : Scalar(0))) throw BadUnit("x * unit != x");
    }
  }

  std::shared_ptr<const Impl> impl_;
};

using RealSuperAlgebra = SuperAlgebra<Rational>;
using ComplexSuperAlgebra = SuperAlgebra<GaussianRational>;

/// Graded (Koszul) tensor product: basis (i,j) -> i*dimB + j, parities add
/// mod 2, and (a (x) b)(a' (x) b') = (-1)^{|b||a'|} (a a') (x) (b b').
/// The sign is the unique convention making Cl(p,q) (x) Cl(p',q')
/// isomorphic to Cl(p+p', q+q').
template <typename Scalar>
SuperAlgebra<Scalar> gradedTensor(const SuperAlgebra<Scalar>& a, const SuperAlgebra<Scalar>& b,
                                  bool validateNow = true) {
  if (a.field() != b.field()) throw FieldMismatch();
  const Index da = a.dim(), db = b.dim(), n = da * db;
  std::vector<std::uint8_t> parity(n);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) parity[i * db + j] = a.parity(i) ^ b.parity(j);

  std::vector<MatrixX<Scalar>> lmul(n);
  for (Index i = 0; i < da; ++i) {
    const auto& la = a.basisLeftMul(i);
    for (Index j = 0; j < db; ++j) {
      const auto& lb = b.basisLeftMul(j);
      MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
      for (Index k = 0; k < da; ++k) {
        bool negate = (b.parity(j) == 1) && (a.parity(k) == 1);
        for (Index l = 0; l < db; ++l) {
          // column (k,l): coords of (b_i (x) c_j)(b_k (x) c_l)
          for (Index mm = 0; mm < da; ++mm) {
            const Scalar& ca = la(mm, k);
            if (isZero(ca)) continue;
            for (Index nn = 0; nn < db; ++nn) {
              const Scalar& cb = lb(nn, l);
              if (isZero(cb)) continue;
              Scalar v = ca * cb;
              m(mm * db + nn, k * db + l) = negate ? Scalar(-v) : v;
            }
          }
        }
      }
      lmul[i * db + j] = std::move(m);
    }
  }

  VectorX<Scalar> unit = VectorX<Scalar>::Zero(n);
  for (Index i = 0; i < da; ++i) {
    if (isZero(a.unit()[i])) continue;
    for (Index j = 0; j < db; ++j) {
      if (isZero(b.unit()[j])) continue;
      unit[i * db + j] = a.unit()[i] * b.unit()[j];
    }
  }
  return SuperAlgebra<Scalar>::fromLeftMul(std::move(parity), std::move(lmul), std::move(unit),
                                           validateNow);
}

/// Pure tensor a (x) b as a coordinate vector of the tensor algebra.
template <typename Scalar>
VectorX<Scalar> tensorVector(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  VectorX<Scalar> v = VectorX<Scalar>::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (isZero(a[i])) continue;
    for (Index j = 0; j < b.size(); ++j) {
      if (isZero(b[j])) continue;
      v[i * b.size() + j] = a[i] * b[j];
    }
  }
  return v;
}

/// The even part as a standalone (purely even) algebra together with the map
/// from its basis positions back to ambient indices.
template <typename Scalar>
std::pair<SuperAlgebra<Scalar>, std::vector<Index>> evenSubalgebra(
    const SuperAlgebra<Scalar>& a) {
  const std::vector<Index>& idx = a.evenIndices();
  const Index m = static_cast<Index>(idx.size());
  std::vector<MatrixX<Scalar>> lmul(m);
  for (Index i = 0; i < m; ++i) {
    lmul[i] = MatrixX<Scalar>(m, m);
    for (Index j = 0; j < m; ++j) {
      VectorX<Scalar> prod = a.basisProduct(idx[i], idx[j]);
      for (Index k = 0; k < m; ++k) lmul[i](k, j) = prod[idx[k]];
    }
  }
  VectorX<Scalar> unit(m);
  for (Index k = 0; k < m; ++k) unit[k] = a.unit()[idx[k]];
  // grading of the ambient algebra guarantees the axioms; skip revalidation
  return {SuperAlgebra<Scalar>::fromLeftMul(std::vector<std::uint8_t>(m, 0), std::move(lmul),
                                            std::move(unit), false),
          idx};
}

/// Change of basis: column i of `p` holds the new basis vector b'_i in old
/// coordinates. `p` must be invertible and grading-preserving (block form
/// over the parity split); the returned algebra has the same parity vector.
template <typename Scalar>
SuperAlgebra<Scalar> conjugateBasis(const SuperAlgebra<Scalar>& a, const MatrixX<Scalar>& p,
                                    bool validateNow = true) {
  const Index n = a.dim();
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (a.parity(r) != a.parity(c) && !isZero(p(r, c)))
        throw Error("change of basis does not preserve the grading");
  auto pinv = tryInverse<Scalar>(p);
  if (!pinv) throw NotInvertible("change of basis matrix is singular");
  std::vector<MatrixX<Scalar>> lmul(n);
  for (Index i = 0; i < n; ++i) lmul[i] = MatrixX<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) {
    MatrixX<Scalar> li = *pinv * a.leftMul(p.col(i)) * p;
    lmul[i] = std::move(li);
  }
  VectorX<Scalar> unit = *pinv * a.unit();
  return SuperAlgebra<Scalar>::fromLeftMul(std::vector<std::uint8_t>(a.parities()),
                                           std::move(lmul), std::move(unit), validateNow);
}

/// Convenience value wrapper pairing coordinates with their algebra.
template <typename ScalarT>
class Element {
 public:
  using Scalar = ScalarT;
  using Vec = VectorX<Scalar>;

  Element(SuperAlgebra<Scalar> algebra, Vec coords)
      : alg_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != alg_.dim()) throw Error("coordinate vector has wrong length");
  }

  static Element basis(const SuperAlgebra<Scalar>& a, Index i) {
    Vec v = Vec::Zero(a.dim());
    v[i] = Scalar(1);
    return Element(a, std::move(v));
  }
  static Element unit(const SuperAlgebra<Scalar>& a) { return Element(a, a.unit()); }
  static Element zero(const SuperAlgebra<Scalar>& a) {
    return Element(a, Vec::Zero(a.dim()));
  }

  const SuperAlgebra<Scalar>& algebra() const { return alg_; }
  const Vec& coords() const { return coords_; }
  ParityTag parityTag() const { return alg_.parityOf(coords_); }
  bool isZero() const { return isZeroVector<Scalar>(coords_); }

  Element operator*(const Element& o) const {
    requireSame(o);
    return Element(alg_, alg_.mul(coords_, o.coords_));
  }
  Element operator+(const Element& o) const {
    requireSame(o);
    return Element(alg_, coords_ + o.coords_);
  }
  Element operator-(const Element& o) const {
    requireSame(o);
    return Element(alg_, coords_ - o.coords_);
  }
  Element operator-() const { return Element(alg_, Vec(-coords_)); }
  friend Element operator*(const Scalar& c, const Element& e) {
    return Element(e.alg_, Vec(c * e.coords_));
  }
  bool operator==(const Element& o) const {
    requireSame(o);
    return equalVectors<Scalar>(coords_, o.coords_);
  }

  Element inverse() const { return Element(alg_, alg_.invert(coords_)); }

 private:
  void requireSame(const Element& o) const {
    if (!alg_.sharesStorage(o.alg_) && !alg_.sameTable(o.alg_)) throw AlgebraMismatch();
  }

  SuperAlgebra<Scalar> alg_;
  Vec coords_;
};

template <typename Scalar>
MatrixX<Scalar> leftMulOperator(const Element<Scalar>& e) {
  return e.algebra().leftMul(e.coords());
}

}  // namespace tenfold

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "tenfold/divclass.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// A finite matrix group with the full element list materialized. Elements
/// are exact matrices; the order of `elements` is the deterministic
/// breadth-first discovery order starting from the identity.
template <typename Scalar>
struct GroupRep {
  Index degree = 0;
  std::vector<MatrixX<Scalar>> generators;
  std::vector<MatrixX<Scalar>> elements;
  std::size_t order() const { return elements.size(); }
};

template <typename Scalar>
std::string matrixKey(const MatrixX<Scalar>& m) {
  std::string key;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      key += m(r, c).str();
      key += ',';
    }
  return key;
}

/// Breadth-first closure of the generated group under multiplication.
/// Throws NotInvertible for a singular generator and ClosureExceeded when
/// the element count passes `cap` (the operational finiteness check).
template <typename Scalar>
GroupRep<Scalar> groupClosure(std::vector<MatrixX<Scalar>> generators,
                              std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw Error("group closure needs at least one generator");
  const Index n = generators.front().rows();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].rows() != n || generators[g].cols() != n)
      throw Error("generators must be square matrices of equal degree");
    if (rank<Scalar>(generators[g]) < n)
      throw NotInvertible("generator " + std::to_string(g) + " is singular");
  }

  GroupRep<Scalar> rep;
  rep.degree = n;
  rep.generators = std::move(generators);
  std::unordered_map<std::string, std::size_t> seen;
  rep.elements.push_back(MatrixX<Scalar>::Identity(n, n));
  seen.emplace(matrixKey(rep.elements[0]), 0);
  for (std::size_t head = 0; head < rep.elements.size(); ++head) {
    for (const auto& g : rep.generators) {
      MatrixX<Scalar> next = rep.elements[head] * g;
      std::string key = matrixKey(next);
      if (seen.count(key)) continue;
      if (rep.elements.size() >= cap) throw ClosureExceeded(cap);
      seen.emplace(std::move(key), rep.elements.size());
      rep.elements.push_back(std::move(next));
    }
  }
  return rep;
}

template <typename Scalar>
struct CommutantResult {
  std::vector<MatrixX<Scalar>> basis;  // canonical nullspace order
  Index dimension = 0;
};

/// The algebra End(rho) = {T : T rho(g) = rho(g) T for all g}, computed as
/// the exact nullspace of the commutation system stacked over the generators
/// (commuting with the generators implies commuting with every element).
template <typename Scalar>
CommutantResult<Scalar> commutant(const GroupRep<Scalar>& rep) {
  const Index n = rep.degree;
  const Index unknowns = n * n;  // T_(r,c) at index r*n + c
  const Index gcount = static_cast<Index>(rep.generators.size());
  MatrixX<Scalar> sys = MatrixX<Scalar>::Zero(gcount * unknowns, unknowns);
  for (Index g = 0; g < gcount; ++g) {
    const MatrixX<Scalar>& rho = rep.generators[g];
    // equation (a,b): sum_c T(a,c) rho(c,b) - rho(a,c) T(c,b) = 0
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Index row = g * unknowns + a * n + b;
        for (Index c = 0; c < n; ++c) {
          sys(row, a * n + c) += rho(c, b);
          sys(row, c * n + b) -= rho(a, c);
        }
      }
  }
  MatrixX<Scalar> null = nullspaceBasis<Scalar>(sys);

  CommutantResult<Scalar> out;
  out.dimension = null.cols();
  for (Index k = 0; k < null.cols(); ++k) {
    MatrixX<Scalar> t(n, n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) t(a, b) = null(a * n + b, k);
    for (const auto& g : rep.generators)
      if (!equalMatrices<Scalar>(t * g, g * t))
        throw InternalContradiction("commutant basis fails to commute with a generator");
    out.basis.push_back(std::move(t));
  }
  return out;
}

/// The commutant as an abstract purely even algebra in its computed basis:
/// structure constants from expanding pairwise products over the basis, unit
/// from the coordinates of the identity matrix. Throws InternalContradiction
/// if the span is not closed or misses the identity (impossible for an exact
/// commutant).
template <typename Scalar>
std::pair<SuperAlgebra<Scalar>, VectorX<Scalar>> commutantAlgebra(
    const CommutantResult<Scalar>& comm, Index degree) {
  const Index d = comm.dimension;
  const Index n2 = degree * degree;
  MatrixX<Scalar> stacked(n2, d);
  for (Index k = 0; k < d; ++k)
    for (Index a = 0; a < degree; ++a)
      for (Index b = 0; b < degree; ++b) stacked(a * degree + b, k) = comm.basis[k](a, b);

  auto coordsOf = [&](const MatrixX<Scalar>& m) {
    VectorX<Scalar> v(n2);
    for (Index a = 0; a < degree; ++a)
      for (Index b = 0; b < degree; ++b) v[a * degree + b] = m(a, b);
    auto sol = solveLinear<Scalar>(stacked, v);
    if (!sol.consistent)
      throw InternalContradiction("commutant is not closed under multiplication");
    return sol.particular;
  };

  std::vector<MatrixX<Scalar>> lmul(d, MatrixX<Scalar>(d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      lmul[i].col(j) = coordsOf(comm.basis[i] * comm.basis[j]);
  VectorX<Scalar> unit = coordsOf(MatrixX<Scalar>::Identity(degree, degree));

  auto algebra = SuperAlgebra<Scalar>::fromLeftMul(std::vector<std::uint8_t>(d, 0),
                                                   std::move(lmul), unit, true);
  return {std::move(algebra), std::move(unit)};
}

enum class SchurType : std::uint8_t { R, C, H, Reducible };

inline const char* toString(SchurType t) {
  switch (t) {
    case SchurType::R: return "R";
    case SchurType::C: return "C";
    case SchurType::H: return "H";
    case SchurType::Reducible: return "reducible";
  }
  return "?";
}

struct SchurAnalysis {
  SchurType type = SchurType::Reducible;
  CommutantResult<Rational> comm;
  EvenDivisionResult division;
};

/// The threefold way for a real representation: the division type of
/// End(rho), or Reducible when the commutant has zero divisors (for finite
/// groups the commutant of a reducible representation always contains a
/// nontrivial projection).
inline SchurAnalysis schurType(const GroupRep<Rational>& rep) {
  SchurAnalysis out;
  out.comm = commutant(rep);
  auto [algebra, unitCoords] = commutantAlgebra(out.comm, rep.degree);
  out.division = recognizeEvenDivision(algebra);
  if (auto* t = std::get_if<EvenPartType>(&out.division)) {
    switch (t->label) {
      case EvenLabel::R: out.type = SchurType::R; break;
      case EvenLabel::C: out.type = SchurType::C; break;
      case EvenLabel::H: out.type = SchurType::H; break;
    }
  } else {
    out.type = SchurType::Reducible;
  }
  return out;
}

/// Frobenius-Schur indicator (1/|G|) sum chi(g^2) of an irreducible complex
/// representation; +1 real type, 0 complex type, -1 quaternionic type.
/// Irreducibility precondition is checked via the commutant (dimension 1 over
/// Q(i) is equivalent to absolute irreducibility: the commutant is the
/// solution space of a linear system, so its dimension is stable under field
/// extension). Squares are located in the closed element list by exact
/// lookup, which re-checks closure as a side effect.
inline int fsIndicator(const GroupRep<GaussianRational>& rep) {
  CommutantResult<GaussianRational> comm = commutant(rep);
  if (comm.dimension != 1) throw NotIrreducible(comm.dimension);

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < rep.elements.size(); ++k)
    index.emplace(matrixKey(rep.elements[k]), k);

  GaussianRational sum(0);
  for (const auto& g : rep.elements) {
    MatrixX<GaussianRational> g2 = g * g;
    if (!index.count(matrixKey(g2)))
      throw InternalContradiction("element list is not closed under squaring");
    sum += g2.trace();
  }
  GaussianRational fs = sum / GaussianRational(Rational(static_cast<long long>(rep.order())));
  if (!fs.isReal() || (fs.re() != Rational(0) && fs.re() != Rational(1) && fs.re() != Rational(-1)))
    throw InternalContradiction("Frobenius-Schur indicator " + fs.str() +
                                " outside {-1, 0, +1}");
  if (fs.re() == Rational(1)) return 1;
  if (fs.re() == Rational(-1)) return -1;
  return 0;
}

}  // namespace tenfold

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenfold {

using Index = std::ptrdiff_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual/JSON input (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Structure-constant table sends b_i * b_j outside the parity forced by the grading.
class GradingViolation : public Error {
 public:
  GradingViolation(Index i, Index j, Index k)
      : Error("grading violation: product of basis " + std::to_string(i) + " and " +
              std::to_string(j) + " has a component on basis " + std::to_string(k) +
              " of the wrong parity"),
        i(i), j(j), k(k) {}
  Index i, j, k;
};

/// (b_i b_j) b_k != b_i (b_j b_k) for the witnessing triple.
class NonAssociative : public Error {
 public:
  NonAssociative(Index i, Index j, Index k)
      : Error("non-associative table: (b" + std::to_string(i) + " b" + std::to_string(j) +
              ") b" + std::to_string(k) + " != b" + std::to_string(i) + " (b" +
              std::to_string(j) + " b" + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  Index i, j, k;
};

class BadUnit : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  AlgebraMismatch() : Error("elements belong to different algebras") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different ground fields") {}
};

class NotInvertible : public Error {
 public:
  explicit NotInvertible(const std::string& what = "element is not invertible") : Error(what) {}
};

class SignatureTooLarge : public Error {
 public:
  explicit SignatureTooLarge(int p, int q, int cap)
      : Error("Clifford signature (" + std::to_string(p) + "," + std::to_string(q) +
              ") exceeds the cap p+q <= " + std::to_string(cap)) {}
};

class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

class ClosureExceeded : public Error {
 public:
  explicit ClosureExceeded(std::size_t cap)
      : Error("group closure exceeded the cap of " + std::to_string(cap) + " elements"),
        cap(cap) {}
  std::size_t cap;
};

class NotIrreducible : public Error {
 public:
  explicit NotIrreducible(Index commutantDim)
      : Error("representation is not irreducible: commutant has dimension " +
              std::to_string(commutantDim)),
        commutantDim(commutantDim) {}
  Index commutantDim;
};

/// A state the classification proof rules out. Indicates an invalid input
/// (precondition violation) or an implementation bug, never a valid refusal.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

/// Refusal of the super-division decision procedure. Carries, when one exists
/// over the rationals, a concrete nonzero non-invertible homogeneous element
/// (coordinates in the ambient algebra, leading coefficient normalized to 1).
class NotSuperDivision : public Error {
 public:
  NotSuperDivision(const std::string& what, std::vector<std::string> witnessCoords,
                   std::string witnessParity, std::string relation)
      : Error(what),
        witnessCoords(std::move(witnessCoords)),
        witnessParity(std::move(witnessParity)),
        relation(std::move(relation)) {}

  /// Serialized scalar coordinates ("p/q"); empty when no rational witness exists.
  std::vector<std::string> witnessCoords;
  std::string witnessParity;  // "even" | "odd" | ""
  std::string relation;       // violated identity when no element witness exists
};

/// A generator image fails its required square or anticommutation relation.
class RelationFailure : public Error {
 public:
  RelationFailure(const std::string& what, Index a, Index b) : Error(what), a(a), b(b) {}
  Index a, b;
};

/// Generator images do not generate the full target algebra.
class SpanDeficient : public Error {
 public:
  SpanDeficient(Index achieved, Index required)
      : Error("generator images span dimension " + std::to_string(achieved) +
              " instead of " + std::to_string(required)),
        achieved(achieved), required(required) {}
  Index achieved, required;
};

}  // namespace tenfold

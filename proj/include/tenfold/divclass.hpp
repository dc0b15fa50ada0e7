#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tenfold/superalgebra.hpp"

namespace tenfold {

// The ten real super division algebras, by the invariant data that
// distinguishes them: the even part (R, C or H by Frobenius), whether an odd
// part exists, how a chosen odd element interacts with the even part, and the
// sign of its square. Square *signs* rather than normalized squares: over the
// rationals e can only be rescaled by rational factors, which multiply e^2 by
// positive squares, so sign(e^2) is exactly the rescaling-invariant datum and
// determines the class over the reals.
enum class EvenLabel : std::uint8_t { R, C, H };
enum class ESign : std::uint8_t { Plus, Minus, Irrelevant, NA };
enum class Commutation : std::uint8_t { Commutes, Anticommutes, NA };

enum class TenLabel : std::uint8_t {
  R, C, H, RPlus, RMinus, CComm, CAntiPlus, CAntiMinus, HPlus, HMinus
};

inline constexpr std::array<TenLabel, 10> kAllTenLabels = {
    TenLabel::R,     TenLabel::C,         TenLabel::H,          TenLabel::RPlus,
    TenLabel::RMinus, TenLabel::CComm,    TenLabel::CAntiPlus,  TenLabel::CAntiMinus,
    TenLabel::HPlus, TenLabel::HMinus};

const char* toString(TenLabel label);
const char* toString(EvenLabel label);
const char* toString(ESign s);
const char* toString(Commutation c);
std::optional<TenLabel> tenLabelFromString(const std::string& s);

struct TenfoldClass {
  EvenLabel even = EvenLabel::R;
  bool hasOdd = false;
  ESign eSquareSign = ESign::NA;
  Commutation commutation = Commutation::NA;

  TenLabel label() const;
  bool operator==(const TenfoldClass& o) const = default;
};

TenfoldClass classOf(TenLabel label);

/// Distinctness certificate: (dim A_0, has_odd, commutation, sign e^2).
struct InvariantTuple {
  Index evenDim = 0;
  bool hasOdd = false;
  Commutation commutation = Commutation::NA;
  ESign eSquareSign = ESign::NA;

  bool operator==(const InvariantTuple& o) const = default;
  std::string str() const;
};

/// Outcome of the even-part recognizer, with exact witnesses:
///   R: nothing to witness (dimension 1).
///   C: an element u outside the unit line with u^2 = -d * unit, d > 0.
///   H: a trace-zero triple spanning the pure part, whose pairwise
///      anticommutators are unit multiples with positive definite Gram form.
struct EvenPartType {
  EvenLabel label = EvenLabel::R;
  std::optional<VectorX<Rational>> complexUnit;  // C witness u
  Rational d;                                    // u^2 = -d * unit
  std::optional<std::array<VectorX<Rational>, 3>> pureTriple;  // H witness
  MatrixX<Rational> gram;                        // 3x3, positive definite
};

/// Refusal with the strongest certificate available over Q: a concrete
/// nonzero non-invertible element when one exists, else the violated
/// identity (e.g. a pure element whose square is +c*unit with c a positive
/// non-square, which forces zero divisors over R but not over Q).
struct DivisionFailure {
  std::optional<VectorX<Rational>> witness;
  std::string reason;
};

using EvenDivisionResult = std::variant<EvenPartType, DivisionFailure>;

/// Constructive Frobenius: decides whether a purely even validated algebra is
/// (the Q-model of) R, C or H, by exact data only. Dimensions other than
/// 1, 2, 4 are rejected; dimension 2 via the discriminant of the quadratic
/// relation; dimension 4 via the trace-form split and a positive definite
/// Clifford-type identity on the pure part.
EvenDivisionResult recognizeEvenDivision(const SuperAlgebra<Rational>& algebra);

struct SuperDivisionCheck {
  bool ok = false;
  EvenPartType evenType;        // valid when ok
  DivisionFailure failure;      // valid when !ok, witness in ambient coordinates
  ParityTag witnessParity = ParityTag::Even;
  std::vector<std::string> notes;
};

/// Decision procedure: A is a super division algebra iff its even part is a
/// division algebra and (A_1 = 0 or the first odd basis element is
/// invertible). One odd invertibility test suffices: with A_0 a division
/// algebra and e odd invertible, every nonzero odd x = (x e^-1) e is a
/// product of invertibles; conversely if the first odd basis element is not
/// invertible, no odd element can be.
SuperDivisionCheck checkSuperDivision(const SuperAlgebra<Rational>& a);

struct ClassificationReport {
  TenfoldClass cls;
  Index evenDim = 0;
  std::optional<VectorX<Rational>> chosenOdd;      // e = first odd basis element
  std::optional<VectorX<Rational>> recenteredOdd;  // H case: commuting odd element
  EvenPartType evenWitness;
  std::vector<std::string> trace;                  // proof steps, in order
};

/// Executes the classification proof on a validated R-model superalgebra.
/// Throws NotSuperDivision (with witness) on refusal and
/// InternalContradiction when a case the proof excludes occurs.
ClassificationReport classify(const SuperAlgebra<Rational>& a);

InvariantTuple invariantTuple(const ClassificationReport& report);

/// Explicit structure-constant model of each of the ten classes
/// (dims 1, 2, 4 purely even; 2+2, 4+4, 8+8 with odd part).
SuperAlgebra<Rational> canonical(TenLabel label);

/// Restriction of scalars from Q(i) to Q: dimension doubles, basis pairs
/// (b, i*b), grading preserved. Lets complex Clifford algebras feed the real
/// classifier.
SuperAlgebra<Rational> realify(const SuperAlgebra<GaussianRational>& a);

}  // namespace tenfold

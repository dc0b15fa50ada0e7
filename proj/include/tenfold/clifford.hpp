#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenfold/divclass.hpp"
#include "tenfold/superalgebra.hpp"

namespace tenfold {

inline constexpr int kCliffordCap = 8;  // dim = 2^(p+q) <= 256

/// p generators square to +1, q to -1.
struct CliffordSignature {
  int p = 0;
  int q = 0;
};

/// The Clifford algebra Cl(p,q) over the rationals, graded by word length
/// mod 2. Basis: subsets of {1..p+q} sorted by size then lexicographically;
/// products by the transposition-counting sign algorithm. Fully validated.
SuperAlgebra<Rational> cliffordReal(CliffordSignature sig);

/// Complex Clifford algebra Cl_n(C): all generators square to +1, scalars in
/// Q(i). Same basis order.
SuperAlgebra<GaussianRational> cliffordComplex(int n);

/// Matrix superalgebra End of a graded space with `even` even and `odd` odd
/// coordinates: basis E_ab (row-major), parity(E_ab) = parity(a)+parity(b).
SuperAlgebra<Rational> endSuperalgebra(int even, int odd);

/// Lexicographically-within-size ordered basis subsets of {0..n-1}, as masks.
std::vector<unsigned> cliffordBasisMasks(int n);

/// Product of basis monomials E_S * E_T in Cl(p,q): resulting subset is the
/// symmetric difference, sign from sorting the concatenation and cancelling
/// repeated generators against their squares.
struct MonomialProduct {
  unsigned mask;
  int sign;
};
MonomialProduct cliffordMonomialProduct(unsigned s, unsigned t, int p, int q);

struct BrauerWallClass {
  int modulus = 8;
  int value = 0;
  bool operator==(const BrauerWallClass&) const = default;
};

/// (p - q) mod 8; the formula is validated against the computed Morita
/// reductions rather than assumed (see verifyPeriodicity and the test suite).
BrauerWallClass brauerWall(CliffordSignature sig);
/// n mod 2 for the complex Clifford algebras.
BrauerWallClass brauerWallComplex(int n);

/// Certificate of an isomorphism defined on Clifford generators: images in a
/// target algebra that square to the required signs, pairwise anticommute,
/// and generate the full target. All images must be odd.
struct GeneratorMapRecord {
  std::string sourceName;
  std::string targetName;
  std::vector<VectorX<Rational>> images;
  std::vector<int> requiredSquares;  // +1 / -1 per image
  Index spanDim = 0;
  Index targetDim = 0;
};

/// Verifies squares, anticommutation and the span condition; throws
/// RelationFailure or SpanDeficient with the witnessing indices on failure.
GeneratorMapRecord verifyGeneratorMap(const SuperAlgebra<Rational>& target,
                                      std::vector<VectorX<Rational>> images,
                                      std::vector<int> requiredSquares,
                                      std::string sourceName, std::string targetName);

/// The Bott reduction step: Cl(p+1,q+1) ~ Cl(p,q) (x) Cl(1,1), certified by
/// the explicit generator map  g_i -> e_i (x) 1, plus 1 (x) f1 and 1 (x) f2.
/// (e_i (x) 1 anticommutes with 1 (x) f_j exactly because of the Koszul sign:
/// both tensor factors involved are odd.)
struct PeriodicityRecord {
  CliffordSignature base;    // the (p,q) of the reduction target
  CliffordSignature source;  // (p+1, q+1)
  GeneratorMapRecord map;
};

PeriodicityRecord verifyPeriodicity(CliffordSignature base);

/// Cl(1,1) ~ End(R^{1|1}) via e1 -> E01 + E10, e2 -> E01 - E10.
GeneratorMapRecord verifyCl11IsEnd11();

/// The Brauer-Wall class-4 certificate: Cl(4,0) ~ H (x) Cl(1,1) via
/// 1 (x) f1, i (x) f2, j (x) f2, k (x) f2.
GeneratorMapRecord verifyMoritaClass4();

/// classify() applied to Cl(p,q), with the refusal carried as data.
struct CliffordClassification {
  CliffordSignature sig;
  std::optional<ClassificationReport> report;      // super division case
  std::optional<VectorX<Rational>> witness;        // rejection witness
  std::string rejectionReason;
  bool isSuperDivision() const { return report.has_value(); }
};

CliffordClassification classifyClifford(CliffordSignature sig);

/// Strips (1,1) factors: (p,q) -> (p-m, q-m) with m = min(p,q), one step at
/// a time. Each step is the signature-level shadow of verifyPeriodicity.
std::vector<CliffordSignature> reductionChain(CliffordSignature sig);

}  // namespace tenfold

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle_clifford.hpp"
#include "tenfold/divclass.hpp"

using namespace tenfold;
using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;
using Alg = SuperAlgebra<Rational>;
using CAlg = SuperAlgebra<GaussianRational>;

namespace {

std::mt19937_64 rng(90210);

Vec basis(const Alg& a, Index i) { return Vec::Unit(a.dim(), i); }

Alg fromProducts(Index n, std::vector<std::uint8_t> parity,
                 const std::vector<std::vector<Vec>>& table, Vec unit) {
  return Alg::fromTable(std::move(parity), table, std::move(unit), true);
}

// R x R: two orthogonal idempotents, unit = a + b
Alg rTimesR() {
  std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, Vec::Zero(2)));
  t[0][0] = Vec::Unit(2, 0);
  t[1][1] = Vec::Unit(2, 1);
  Vec unit(2);
  unit << Rational(1), Rational(1);
  return fromProducts(2, {0, 0}, t, unit);
}

// Q(sqrt 2): division algebra over Q but not over R
Alg qSqrt2() {
  std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2));
  Vec one = Vec::Unit(2, 0), r = Vec::Unit(2, 1);
  t[0][0] = one;
  t[0][1] = r;
  t[1][0] = r;
  t[1][1] = Rational(2) * one;
  return fromProducts(2, {0, 0}, t, one);
}

// M2(R) by matrix units E_ab at index a*2+b, purely even
Alg m2r() {
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec::Zero(4)));
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c)
        for (Index d = 0; d < 2; ++d)
          if (b == c) t[a * 2 + b][c * 2 + d] = Vec::Unit(4, a * 2 + d);
  Vec unit = Vec::Unit(4, 0) + Vec::Unit(4, 3);
  return fromProducts(4, {0, 0, 0, 0}, t, unit);
}

// C x C componentwise: basis (1,0), (i,0), (0,1), (0,i)
Alg cTimesC() {
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec::Zero(4)));
  auto put = [&](Index i, Index j, Index k, int s) { t[i][j][k] = Rational(s); };
  put(0, 0, 0, 1); put(0, 1, 1, 1); put(1, 0, 1, 1); put(1, 1, 0, -1);
  put(2, 2, 2, 1); put(2, 3, 3, 1); put(3, 2, 3, 1); put(3, 3, 2, -1);
  Vec unit = Vec::Unit(4, 0) + Vec::Unit(4, 2);
  return fromProducts(4, {0, 0, 0, 0}, t, unit);
}

// C as a 1-dimensional C-model algebra
CAlg complexLine() {
  std::vector<std::vector<VectorX<GaussianRational>>> t(
      1, std::vector<VectorX<GaussianRational>>(1));
  VectorX<GaussianRational> one(1);
  one[0] = GaussianRational(1);
  t[0][0] = one;
  return CAlg::fromTable({0}, t, one, true);
}

// Cl_1(C): basis {1, e} over Q(i), e odd, e^2 = 1
CAlg complexClifford1() {
  std::vector<std::vector<VectorX<GaussianRational>>> t(
      2, std::vector<VectorX<GaussianRational>>(2));
  VectorX<GaussianRational> one = VectorX<GaussianRational>::Zero(2);
  VectorX<GaussianRational> e = VectorX<GaussianRational>::Zero(2);
  one[0] = GaussianRational(1);
  e[1] = GaussianRational(1);
  t[0][0] = one;
  t[0][1] = e;
  t[1][0] = e;
  t[1][1] = one;
  return CAlg::fromTable({0, 1}, t, one, true);
}

bool nonInvertibleIn(const Alg& a, const Vec& w) {
  return !isZeroVector<Rational>(w) && !a.tryInvert(w).has_value();
}

Mat randomGradedChange(const Alg& a) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    Mat p = Mat::Zero(a.dim(), a.dim());
    for (Index r = 0; r < a.dim(); ++r)
      for (Index c = 0; c < a.dim(); ++c)
        if (a.parity(r) == a.parity(c)) p(r, c) = Rational(entry(rng));
    if (rank<Rational>(p) == a.dim()) return p;
  }
}

}  // namespace

TEST_CASE("recognizer: quaternions are H with identity Gram form") {
  auto res = recognizeEvenDivision(oracle::quaternionTable());
  auto* t = std::get_if<EvenPartType>(&res);
  REQUIRE(t != nullptr);
  CHECK((t->label == EvenLabel::H));
  REQUIRE(t->pureTriple.has_value());
  CHECK(equalMatrices<Rational>(t->gram, Mat::Identity(3, 3)));
}

TEST_CASE("recognizer: dimension 1 is R") {
  std::vector<std::vector<Vec>> t(1, std::vector<Vec>(1, Vec::Constant(1, Rational(1))));
  Alg r = fromProducts(1, {0}, t, Vec::Constant(1, Rational(1)));
  auto res = recognizeEvenDivision(r);
  auto* type = std::get_if<EvenPartType>(&res);
  REQUIRE(type != nullptr);
  CHECK((type->label == EvenLabel::R));
}

TEST_CASE("recognizer: even part of Cl(2,0) is C with witness 2 e1e2, d = 4") {
  auto [even, idx] = evenSubalgebra(oracle::cliffordTable(2, 0));
  auto res = recognizeEvenDivision(even);
  auto* t = std::get_if<EvenPartType>(&res);
  REQUIRE(t != nullptr);
  CHECK((t->label == EvenLabel::C));
  REQUIRE(t->complexUnit.has_value());
  Vec expect(2);
  expect << Rational(0), Rational(2);  // u = 2x with x = e1e2
  CHECK(equalVectors<Rational>(*t->complexUnit, expect));
  CHECK(t->d == Rational(4));
}

TEST_CASE("recognizer rejects R x R with an idempotent-derived zero divisor") {
  Alg a = rTimesR();
  auto res = recognizeEvenDivision(a);
  auto* f = std::get_if<DivisionFailure>(&res);
  REQUIRE(f != nullptr);
  REQUIRE(f->witness.has_value());
  CHECK(nonInvertibleIn(a, *f->witness));
}

TEST_CASE("recognizer rejects Q(sqrt 2) with an identity reason, no rational witness") {
  auto res = recognizeEvenDivision(qSqrt2());
  auto* f = std::get_if<DivisionFailure>(&res);
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->witness.has_value());
  CHECK(f->reason.find("discriminant") != std::string::npos);
}

TEST_CASE("recognizer rejects M2(R) with a verified witness") {
  Alg a = m2r();
  auto res = recognizeEvenDivision(a);
  auto* f = std::get_if<DivisionFailure>(&res);
  REQUIRE(f != nullptr);
  REQUIRE(f->witness.has_value());
  CHECK(nonInvertibleIn(a, *f->witness));
}

TEST_CASE("recognizer rejects C x C with a verified witness") {
  Alg a = cTimesC();
  auto res = recognizeEvenDivision(a);
  auto* f = std::get_if<DivisionFailure>(&res);
  REQUIRE(f != nullptr);
  REQUIRE(f->witness.has_value());
  CHECK(nonInvertibleIn(a, *f->witness));
}

TEST_CASE("super division check: Cl(1,1) fails with odd witness e1 + e2 of square zero") {
  Alg cl11 = oracle::cliffordTable(1, 1);
  SuperDivisionCheck chk = checkSuperDivision(cl11);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.failure.witness.has_value());
  Vec expect(4);
  expect << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(equalVectors<Rational>(*chk.failure.witness, expect));
  CHECK((chk.witnessParity == ParityTag::Odd));
  CHECK(isZeroVector<Rational>(cl11.mul(*chk.failure.witness, *chk.failure.witness)));
  CHECK(nonInvertibleIn(cl11, *chk.failure.witness));
}

TEST_CASE("super division check: purely even quaternions pass") {
  SuperDivisionCheck chk = checkSuperDivision(oracle::quaternionTable());
  CHECK(chk.ok);
  CHECK((chk.evenType.label == EvenLabel::H));
}

TEST_CASE("super division check: Cl(0,1) passes via the invertible odd generator") {
  SuperDivisionCheck chk = checkSuperDivision(oracle::cliffordTable(0, 1));
  CHECK(chk.ok);
  CHECK((chk.evenType.label == EvenLabel::R));
}

TEST_CASE("classify round trips every canonical label") {
  for (TenLabel label : kAllTenLabels) {
    CAPTURE(std::string(toString(label)));
    Alg a = canonical(label);
    CHECK_NOTHROW(a.validate());
    ClassificationReport report = classify(a);
    CHECK((report.cls.label() == label));
    CHECK((report.cls == classOf(label)));
  }
}

TEST_CASE("the ten invariant tuples are pairwise distinct") {
  std::vector<InvariantTuple> tuples;
  for (TenLabel label : kAllTenLabels) tuples.push_back(invariantTuple(classify(canonical(label))));
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK_FALSE(tuples[a] == tuples[b]);
    }
}

TEST_CASE("invariant tuple projections") {
  InvariantTuple h = invariantTuple(classify(canonical(TenLabel::H)));
  CHECK(h.evenDim == 4);
  CHECK_FALSE(h.hasOdd);
  CHECK((h.commutation == Commutation::NA));
  CHECK((h.eSquareSign == ESign::NA));

  InvariantTuple rp = invariantTuple(classify(canonical(TenLabel::RPlus)));
  CHECK(rp.evenDim == 1);
  CHECK(rp.hasOdd);
  CHECK((rp.eSquareSign == ESign::Plus));
}

TEST_CASE("canonical tables satisfy their defining relations") {
  // C-type canonicals: u^2 = -1, e^2 = sigma, e u = eps u e
  struct CCase { TenLabel label; int eps; int sigma; };
  for (CCase c : {CCase{TenLabel::CComm, 1, 1}, CCase{TenLabel::CAntiPlus, -1, 1},
                  CCase{TenLabel::CAntiMinus, -1, -1}}) {
    Alg a = canonical(c.label);
    Vec u = basis(a, 1), e = basis(a, 2);
    CHECK(equalVectors<Rational>(a.mul(u, u), Vec(-a.unit())));
    CHECK(equalVectors<Rational>(a.mul(e, e), Vec(Rational(c.sigma) * a.unit())));
    CHECK(equalVectors<Rational>(a.mul(e, u), Vec(Rational(c.eps) * a.mul(u, e))));
  }
  // H-type canonicals: quaternion relations, e central among evens, e^2 = sigma
  for (auto [label, sigma] : {std::pair{TenLabel::HPlus, 1}, std::pair{TenLabel::HMinus, -1}}) {
    Alg a = canonical(label);
    Vec i = basis(a, 1), j = basis(a, 2), k = basis(a, 3), e = basis(a, 4);
    CHECK(equalVectors<Rational>(a.mul(i, j), k));
    CHECK(equalVectors<Rational>(a.mul(a.mul(i, j), k), Vec(-a.unit())));
    CHECK(equalVectors<Rational>(a.mul(e, e), Vec(Rational(sigma) * a.unit())));
    for (Index q = 0; q < 4; ++q)
      CHECK(equalVectors<Rational>(a.mul(e, basis(a, q)), a.mul(basis(a, q), e)));
  }
  for (auto [label, sigma] : {std::pair{TenLabel::RPlus, 1}, std::pair{TenLabel::RMinus, -1}}) {
    Alg a = canonical(label);
    Vec e = basis(a, 1);
    CHECK(equalVectors<Rational>(a.mul(e, e), Vec(Rational(sigma) * a.unit())));
  }
}

TEST_CASE("classify Cl(2,0): anticommuting case with positive square") {
  ClassificationReport report = classify(oracle::cliffordTable(2, 0));
  CHECK((report.cls.label() == TenLabel::CAntiPlus));
  CHECK((report.cls.commutation == Commutation::Anticommutes));
  CHECK((report.cls.eSquareSign == ESign::Plus));
  REQUIRE(report.chosenOdd.has_value());
  CHECK(equalVectors<Rational>(*report.chosenOdd, Vec::Unit(4, 1)));  // e1
}

TEST_CASE("classify Cl(3,0): recentered element is the pseudoscalar, square -1") {
  Alg cl30 = oracle::cliffordTable(3, 0);
  // oracle check: omega = e1e2e3 has square -1 in Cl(3,0)
  Vec omega = Vec::Unit(8, 7);
  CHECK(equalVectors<Rational>(cl30.mul(omega, omega), Vec(-cl30.unit())));

  ClassificationReport report = classify(cl30);
  CHECK((report.cls.label() == TenLabel::HMinus));
  REQUIRE(report.recenteredOdd.has_value());
  CHECK(equalVectors<Rational>(*report.recenteredOdd, omega));
}

TEST_CASE("rejections throw NotSuperDivision with a parseable witness") {
  try {
    classify(oracle::cliffordTable(1, 1));
    FAIL("expected NotSuperDivision");
  } catch (const NotSuperDivision& e) {
    REQUIRE(e.witnessCoords.size() == 4);
    CHECK(e.witnessParity == "odd");
    Vec w(4);
    for (Index k = 0; k < 4; ++k) w[k] = Rational::parse(e.witnessCoords[k]);
    CHECK(nonInvertibleIn(oracle::cliffordTable(1, 1), w));
  }
}

TEST_CASE("realify: the complex line becomes purely even C") {
  Alg r = realify(complexLine());
  CHECK(r.dim() == 2);
  ClassificationReport report = classify(r);
  CHECK((report.cls.label() == TenLabel::C));
}

TEST_CASE("realify: Cl_1(C) classifies as C_comm") {
  CAlg c = complexClifford1();
  Alg r = realify(c);
  CHECK(r.dim() == 2 * c.dim());
  ClassificationReport report = classify(r);
  CHECK((report.cls.label() == TenLabel::CComm));
}

TEST_CASE("classifier is stable under random graded changes of basis") {
  for (TenLabel label : kAllTenLabels) {
    CAPTURE(std::string(toString(label)));
    Alg a = canonical(label);
    for (int t = 0; t < 20; ++t) {
      Alg moved = conjugateBasis(a, randomGradedChange(a), true);
      CHECK((classify(moved).cls.label() == label));
    }
  }
}

TEST_CASE("sampled homogeneous elements of a super division algebra are invertible") {
  std::uniform_int_distribution<int> entry(-5, 5);
  Alg a = canonical(TenLabel::HMinus);
  auto sampleHomogeneous = [&](const std::vector<Index>& idx) {
    for (;;) {
      Vec v = Vec::Zero(a.dim());
      for (Index k : idx) v[k] = Rational(entry(rng));
      if (!isZeroVector<Rational>(v)) return v;
    }
  };
  for (int t = 0; t < 100; ++t) {
    CHECK(a.tryInvert(sampleHomogeneous(a.evenIndices())).has_value());
    CHECK(a.tryInvert(sampleHomogeneous(a.oddIndices())).has_value());
  }
  CHECK(a.evenDim() == a.oddDim());
}

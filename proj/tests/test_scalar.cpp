#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tenfold/scalar.hpp"

using namespace tenfold;

namespace {

std::mt19937_64 rng(20240917);

Rational randomRational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

Rational randomNonzeroRational() {
  for (;;) {
    Rational r = randomRational();
    if (!r.isZero()) return r;
  }
}

GaussianRational randomGaussian() { return {randomRational(), randomRational()}; }

}  // namespace

TEST_CASE("rational arithmetic matches hand-computed fractions") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));  // canonical form on construction
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(7, 3) * Rational(3, 7)).isOne());
  CHECK(Rational(5) / Rational(1, 5) == Rational(25));
}

TEST_CASE("gaussian i squares to -1") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
}

TEST_CASE("sign is a strict trichotomy") {
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5).sign() == 1);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
}

TEST_CASE("conjugation fixes exactly the rational subfield") {
  CHECK(conj(GaussianRational(Rational(1), Rational(2))) ==
        GaussianRational(Rational(1), Rational(-2)));
  CHECK(conj(GaussianRational(3)) == GaussianRational(3));
  for (int t = 0; t < 200; ++t) {
    GaussianRational z = randomGaussian();
    CHECK(conj(conj(z)) == z);
    CHECK((conj(z) == z) == z.isReal());
  }
}

TEST_CASE("conjugation is a field automorphism") {
  // the worked pair: conj((1+i)(2-i)) = (1-i)(2+i) = 3-i, both sides expanded
  GaussianRational z(Rational(1), Rational(1)), w(Rational(2), Rational(-1));
  CHECK(z * w == GaussianRational(Rational(3), Rational(1)));
  CHECK(conj(z * w) == GaussianRational(Rational(3), Rational(-1)));
  CHECK(conj(z) * conj(w) == conj(z * w));
  for (int t = 0; t < 200; ++t) {
    GaussianRational a = randomGaussian(), b = randomGaussian();
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
  }
}

TEST_CASE("field axioms hold on random triples") {
  for (int t = 0; t < 300; ++t) {
    Rational a = randomRational(), b = randomRational(), c = randomRational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Rational nz = randomNonzeroRational();
    CHECK(nz * (Rational(1) / nz) == Rational(1));
  }
  for (int t = 0; t < 300; ++t) {
    GaussianRational a = randomGaussian(), b = randomGaussian(), c = randomGaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.isZero()) CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
  }
}

TEST_CASE("canonical form is the equality test") {
  // equal values have identical canonical serializations
  CHECK(Rational(2, 4).str() == Rational(1, 2).str());
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  for (int t = 0; t < 200; ++t) {
    Rational a = randomRational(), b = randomRational();
    CHECK((a == b) == (a.str() == b.str()));
  }
}

TEST_CASE("parse round trips and rejects garbage") {
  for (int t = 0; t < 200; ++t) {
    Rational a = randomRational();
    CHECK(Rational::parse(a.str()) == a);
  }
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("+4/2") == Rational(2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("arbitrary precision survives large products") {
  Rational big(BigInt("123456789123456789"), BigInt(1));
  Rational prod = big * big * big;
  CHECK(prod.numerator() == BigInt("123456789123456789") * BigInt("123456789123456789") *
                                BigInt("123456789123456789"));
  CHECK(prod / big / big == big);
}

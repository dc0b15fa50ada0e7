#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tenfold/linalg.hpp"

using namespace tenfold;
using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;

namespace {

std::mt19937_64 rng(777);

Mat randomMatrix(Index rows, Index cols) {
  std::uniform_int_distribution<int> num(-5, 5);
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = Rational(num(rng));
  return m;
}

}  // namespace

TEST_CASE("identity system has the unique obvious solution") {
  Mat id = Mat::Identity(3, 3);
  Vec b(3);
  b << Rational(1), Rational(0), Rational(0);
  auto sol = solveLinear<Rational>(id, b);
  CHECK(sol.consistent);
  CHECK(sol.nullspace.cols() == 0);
  CHECK(equalVectors<Rational>(sol.particular, b));
}

TEST_CASE("zero map on a 3-dimensional space has full nullspace") {
  Mat zero = Mat::Zero(3, 3);
  CHECK(nullspaceBasis<Rational>(zero).cols() == 3);
  auto sol = solveLinear<Rational>(zero, Vec::Zero(3));
  CHECK(sol.consistent);
  CHECK(sol.nullspace.cols() == 3);
  Vec b(3);
  b << Rational(0), Rational(1), Rational(0);
  CHECK_FALSE(solveLinear<Rational>(zero, b).consistent);
}

TEST_CASE("commutant system of the rotation J is 2-dimensional") {
  // unknown T (2x2, row-major); equations T J - J T = 0 with J = [[0,-1],[1,0]].
  // Writing them out by hand: rows correspond to entries (a,b) of TJ - JT.
  Mat j(2, 2);
  j << Rational(0), Rational(-1), Rational(1), Rational(0);
  Mat sys = Mat::Zero(4, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c) {
        sys(a * 2 + b, a * 2 + c) += j(c, b);
        sys(a * 2 + b, c * 2 + b) -= j(a, c);
      }
  CHECK(nullspaceBasis<Rational>(sys).cols() == 2);
}

TEST_CASE("rref solutions verify exactly on random systems") {
  for (int t = 0; t < 50; ++t) {
    Mat a = randomMatrix(4, 5);
    Vec x = randomMatrix(5, 1);
    Vec b = a * x;
    auto sol = solveLinear<Rational>(a, b);
    REQUIRE(sol.consistent);
    CHECK(equalVectors<Rational>(Vec(a * sol.particular), b));
    for (Index k = 0; k < sol.nullspace.cols(); ++k)
      CHECK(isZeroVector<Rational>(Vec(a * sol.nullspace.col(k))));
    // rank-nullity
    CHECK(rank<Rational>(a) + sol.nullspace.cols() == 5);
  }
}

TEST_CASE("inverse agrees with multiplication") {
  for (int t = 0; t < 30; ++t) {
    Mat a = randomMatrix(4, 4);
    auto inv = tryInverse<Rational>(a);
    if (!inv) {
      CHECK(rank<Rational>(a) < 4);
      continue;
    }
    CHECK(equalMatrices<Rational>(Mat(a * *inv), Mat::Identity(4, 4)));
    CHECK(equalMatrices<Rational>(Mat(*inv * a), Mat::Identity(4, 4)));
  }
}

TEST_CASE("determinant matches the cofactor expansion on 3x3") {
  for (int t = 0; t < 40; ++t) {
    Mat m = randomMatrix(3, 3);
    Rational cofactor = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                        m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                        m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant<Rational>(m) == cofactor);
  }
}

TEST_CASE("span builder reaches the row space and no more") {
  SpanBuilder<Rational> span(4);
  Vec v1(4), v2(4), v3(4);
  v1 << Rational(1), Rational(2), Rational(0), Rational(0);
  v2 << Rational(0), Rational(1), Rational(1), Rational(0);
  v3 << Rational(1), Rational(3), Rational(1), Rational(0);  // v1 + v2
  CHECK(span.insert(v1));
  CHECK(span.insert(v2));
  CHECK_FALSE(span.insert(v3));
  CHECK(span.dim() == 2);
  CHECK(span.contains(v3));
  Vec out(4);
  out << Rational(0), Rational(0), Rational(0), Rational(1);
  CHECK_FALSE(span.contains(out));
}

TEST_CASE("span builder canonical form is insertion-order independent") {
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> vs;
    for (int k = 0; k < 5; ++k) vs.push_back(randomMatrix(6, 1));
    SpanBuilder<Rational> fwd(6), rev(6);
    for (const auto& v : vs) fwd.insert(v);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) rev.insert(*it);
    REQUIRE(fwd.dim() == rev.dim());
    for (Index r = 0; r < fwd.dim(); ++r)
      CHECK(equalVectors<Rational>(fwd.rows()[r], rev.rows()[r]));
  }
}

TEST_CASE("congruence diagonalization is exact") {
  for (int t = 0; t < 40; ++t) {
    Mat m = randomMatrix(3, 3);
    Mat b = m + Mat(m.transpose());  // symmetric
    auto diag = congruentDiagonalize<Rational>(b);
    Mat d = Mat(diag.transform.transpose()) * b * diag.transform;
    for (Index r = 0; r < 3; ++r)
      for (Index c = 0; c < 3; ++c) {
        if (r == c)
          CHECK(d(r, c) == diag.diagonal[r]);
        else
          CHECK(d(r, c) == Rational(0));
      }
    CHECK(rank<Rational>(diag.transform) == 3);  // invertible change of basis
  }
}

#include "tenfold/clifford.hpp"

#include <algorithm>
#include <unordered_map>

namespace tenfold {

namespace {

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;

std::vector<int> maskToList(unsigned mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if (mask & (1u << b)) out.push_back(b);
  return out;
}

void requireCap(int p, int q) {
  if (p < 0 || q < 0 || p + q > kCliffordCap) throw SignatureTooLarge(p, q, kCliffordCap);
}

}  // namespace

std::vector<unsigned> cliffordBasisMasks(int n) {
  std::vector<unsigned> masks(1u << n);
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return maskToList(a) < maskToList(b);  // lexicographic on sorted index lists
  });
  return masks;
}

MonomialProduct cliffordMonomialProduct(unsigned s, unsigned t, int p, int q) {
  std::vector<int> seq = maskToList(s);
  std::vector<int> tl = maskToList(t);
  seq.insert(seq.end(), tl.begin(), tl.end());

  // insertion sort counting transpositions of distinct generators
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  // cancel adjacent duplicates against the generator squares
  unsigned mask = 0;
  for (std::size_t i = 0; i < seq.size();) {
    if (i + 1 < seq.size() && seq[i] == seq[i + 1]) {
      if (seq[i] >= p) sign = -sign;  // e_i^2 = -1 for the last q generators
      i += 2;
    } else {
      mask |= 1u << seq[i];
      ++i;
    }
  }
  return {mask, sign};
}

namespace {

template <typename Scalar>
SuperAlgebra<Scalar> buildClifford(int p, int q) {
  const int n = p + q;
  const Index dim = Index(1) << n;
  std::vector<unsigned> masks = cliffordBasisMasks(n);
  std::unordered_map<unsigned, Index> pos;
  for (Index i = 0; i < dim; ++i) pos[masks[i]] = i;

  std::vector<std::uint8_t> parity(dim);
  for (Index i = 0; i < dim; ++i) parity[i] = __builtin_popcount(masks[i]) & 1;

  std::vector<MatrixX<Scalar>> lmul(dim, MatrixX<Scalar>::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      MonomialProduct prod = cliffordMonomialProduct(masks[i], masks[j], p, q);
      lmul[i](pos.at(prod.mask), j) = Scalar(prod.sign);
    }

  VectorX<Scalar> unit = VectorX<Scalar>::Zero(dim);
  unit[0] = Scalar(1);  // the empty subset sorts first
  return SuperAlgebra<Scalar>::fromLeftMul(std::move(parity), std::move(lmul),
                                           std::move(unit), true);
}

}  // namespace

SuperAlgebra<Rational> cliffordReal(CliffordSignature sig) {
  requireCap(sig.p, sig.q);
  return buildClifford<Rational>(sig.p, sig.q);
}

SuperAlgebra<GaussianRational> cliffordComplex(int n) {
  requireCap(n, 0);
  return buildClifford<GaussianRational>(n, 0);
}

SuperAlgebra<Rational> endSuperalgebra(int even, int odd) {
  const int n = even + odd;
  if (n < 1 || n * n > 256)
    throw SizeTooLarge("matrix superalgebra size " + std::to_string(n) +
                       " out of range (need 1 <= r+s and (r+s)^2 <= 256)");
  const Index dim = Index(n) * n;
  auto coordParity = [&](Index a) { return static_cast<std::uint8_t>(a < even ? 0 : 1); };

  std::vector<std::uint8_t> parity(dim);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) parity[a * n + b] = coordParity(a) ^ coordParity(b);

  // E_ab E_cd = delta_bc E_ad
  std::vector<Mat> lmul(dim, Mat::Zero(dim, dim));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          if (b == c) lmul[a * n + b](a * n + d, c * n + d) = 1;

  Vec unit = Vec::Zero(dim);
  for (Index a = 0; a < n; ++a) unit[a * n + a] = 1;
  return SuperAlgebra<Rational>::fromLeftMul(std::move(parity), std::move(lmul),
                                             std::move(unit), true);
}

BrauerWallClass brauerWall(CliffordSignature sig) {
  requireCap(sig.p, sig.q);
  return {8, ((sig.p - sig.q) % 8 + 8) % 8};
}

BrauerWallClass brauerWallComplex(int n) {
  requireCap(n, 0);
  return {2, n % 2};
}

GeneratorMapRecord verifyGeneratorMap(const SuperAlgebra<Rational>& target,
                                      std::vector<Vec> images, std::vector<int> requiredSquares,
                                      std::string sourceName, std::string targetName) {
  const Index k = static_cast<Index>(images.size());
  if (static_cast<Index>(requiredSquares.size()) != k)
    throw Error("generator map: images and required squares differ in count");

  for (Index a = 0; a < k; ++a)
    if (target.parityOf(images[a]) != ParityTag::Odd)
      throw RelationFailure("generator image " + std::to_string(a) + " is not odd", a, a);

  for (Index a = 0; a < k; ++a) {
    Vec sq = target.mul(images[a], images[a]);
    Vec want = Rational(requiredSquares[a]) * target.unit();
    if (!equalVectors<Rational>(sq, want))
      throw RelationFailure("image " + std::to_string(a) + " squares to the wrong value", a, a);
  }
  for (Index a = 0; a < k; ++a)
    for (Index b = a + 1; b < k; ++b) {
      Vec anti = target.mul(images[a], images[b]) + target.mul(images[b], images[a]);
      if (!isZeroVector<Rational>(anti))
        throw RelationFailure(
            "images " + std::to_string(a) + " and " + std::to_string(b) +
                " do not anticommute",
            a, b);
    }

  // span of all words in the images, grown by left multiplication from the unit
  SpanBuilder<Rational> span(target.dim());
  std::vector<Vec> frontier;
  span.insert(target.unit());
  frontier.push_back(target.unit());
  std::vector<Mat> leftOps;
  leftOps.reserve(images.size());
  for (const Vec& g : images) leftOps.push_back(target.leftMul(g));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      for (const Mat& op : leftOps) {
        Vec w = op * v;
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }

  GeneratorMapRecord rec;
  rec.sourceName = std::move(sourceName);
  rec.targetName = std::move(targetName);
  rec.images = std::move(images);
  rec.requiredSquares = std::move(requiredSquares);
  rec.spanDim = span.dim();
  rec.targetDim = target.dim();
  if (rec.spanDim != rec.targetDim) throw SpanDeficient(rec.spanDim, rec.targetDim);
  return rec;
}

namespace {

std::string sigName(CliffordSignature s) {
  return "Cl(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

Vec basisVec(const SuperAlgebra<Rational>& a, Index i) { return Vec::Unit(a.dim(), i); }

/// Index of the singleton generator {g} in the size-then-lex basis order:
/// generators occupy positions 1..n in index order.
Index generatorIndex(int g) { return 1 + g; }

}  // namespace

PeriodicityRecord verifyPeriodicity(CliffordSignature base) {
  requireCap(base.p + 1, base.q + 1);
  CliffordSignature src{base.p + 1, base.q + 1};

  SuperAlgebra<Rational> sourceAlg = cliffordReal(src);  // fixes dim 2^(p+q+2)
  SuperAlgebra<Rational> factor = cliffordReal(base);
  SuperAlgebra<Rational> cl11 = cliffordReal({1, 1});
  SuperAlgebra<Rational> target = gradedTensor(factor, cl11);

  std::vector<Vec> images;
  std::vector<int> squares;
  auto push = [&](const Vec& left, const Vec& right, int sq) {
    images.push_back(tensorVector<Rational>(left, right));
    squares.push_back(sq);
  };
  // source generator order: p+1 with square +1, then q+1 with square -1
  for (int g = 0; g < base.p; ++g)
    push(basisVec(factor, generatorIndex(g)), cl11.unit(), 1);
  push(factor.unit(), basisVec(cl11, generatorIndex(0)), 1);  // f1^2 = +1
  for (int g = 0; g < base.q; ++g)
    push(basisVec(factor, generatorIndex(base.p + g)), cl11.unit(), -1);
  push(factor.unit(), basisVec(cl11, generatorIndex(1)), -1);  // f2^2 = -1

  PeriodicityRecord rec;
  rec.base = base;
  rec.source = src;
  rec.map = verifyGeneratorMap(target, std::move(images), std::move(squares), sigName(src),
                               sigName(base) + " (x) Cl(1,1)");
  if (rec.map.targetDim != sourceAlg.dim())
    throw InternalContradiction("tensor target dimension mismatch");
  return rec;
}

GeneratorMapRecord verifyCl11IsEnd11() {
  SuperAlgebra<Rational> target = endSuperalgebra(1, 1);
  // basis E_ab at index a*2+b
  Vec f = Vec::Zero(4), g = Vec::Zero(4);
  f[1] = 1; f[2] = 1;   // E01 + E10
  g[1] = 1; g[2] = -1;  // E01 - E10
  return verifyGeneratorMap(target, {f, g}, {1, -1}, "Cl(1,1)", "End(R^{1|1})");
}

GeneratorMapRecord verifyMoritaClass4() {
  SuperAlgebra<Rational> quat = canonical(TenLabel::H);
  SuperAlgebra<Rational> cl11 = cliffordReal({1, 1});
  SuperAlgebra<Rational> target = gradedTensor(quat, cl11);

  Vec f1 = basisVec(cl11, generatorIndex(0));
  Vec f2 = basisVec(cl11, generatorIndex(1));
  std::vector<Vec> images;
  images.push_back(tensorVector<Rational>(quat.unit(), f1));
  for (Index qi = 1; qi <= 3; ++qi)  // i, j, k
    images.push_back(tensorVector<Rational>(basisVec(quat, qi), f2));
  return verifyGeneratorMap(target, std::move(images), {1, 1, 1, 1}, "Cl(4,0)",
                            "H (x) Cl(1,1)");
}

CliffordClassification classifyClifford(CliffordSignature sig) {
  CliffordClassification out;
  out.sig = sig;
  SuperAlgebra<Rational> a = cliffordReal(sig);
  try {
    out.report = classify(a);
  } catch (const NotSuperDivision& e) {
    out.rejectionReason = e.relation;
    if (!e.witnessCoords.empty()) {
      Vec w(static_cast<Index>(e.witnessCoords.size()));
      for (Index k = 0; k < w.size(); ++k) w[k] = Rational::parse(e.witnessCoords[k]);
      out.witness = std::move(w);
    }
  }
  return out;
}

std::vector<CliffordSignature> reductionChain(CliffordSignature sig) {
  requireCap(sig.p, sig.q);
  std::vector<CliffordSignature> chain{sig};
  while (sig.p >= 1 && sig.q >= 1) {
    sig = {sig.p - 1, sig.q - 1};
    chain.push_back(sig);
  }
  return chain;
}

}  // namespace tenfold

#include "tenfold/selftest.hpp"

#include <future>
#include <sstream>

#include "tenfold/clifford.hpp"
#include "tenfold/repthree.hpp"

namespace tenfold {

namespace {

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;
using CVec = VectorX<GaussianRational>;
using CMat = MatrixX<GaussianRational>;

void check(SectionResult& sec, const std::string& name, bool pass, std::string detail = "") {
  sec.checks.push_back({name, pass, std::move(detail)});
}

template <typename F>
void checked(SectionResult& sec, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    check(sec, name, false, e.what());
  }
}

TenLabel corruptionPartner(TenLabel label) {
  switch (label) {
    case TenLabel::RPlus: return TenLabel::RMinus;
    case TenLabel::RMinus: return TenLabel::RPlus;
    case TenLabel::CAntiPlus: return TenLabel::CAntiMinus;
    case TenLabel::CAntiMinus: return TenLabel::CAntiPlus;
    case TenLabel::HPlus: return TenLabel::HMinus;
    case TenLabel::HMinus: return TenLabel::HPlus;
    case TenLabel::CComm: return TenLabel::CAntiPlus;
    case TenLabel::R: return TenLabel::C;
    default: return TenLabel::R;
  }
}

SectionResult runTenfold(const SelftestOptions& opt) {
  SectionResult sec{"tenfold", {}};
  auto canonicalTable = [&](TenLabel label) {
    if (opt.corruptCanon && *opt.corruptCanon == label)
      return canonical(corruptionPartner(label));
    return canonical(label);
  };

  std::vector<std::pair<TenLabel, InvariantTuple>> tuples;
  for (TenLabel label : kAllTenLabels) {
    std::string name = std::string("classify(canonical(") + toString(label) + "))";
    checked(sec, name, [&] {
      ClassificationReport report = classify(canonicalTable(label));
      bool ok = report.cls.label() == label;
      tuples.emplace_back(label, invariantTuple(report));
      check(sec, name, ok,
            ok ? "round trip" : std::string("got ") + toString(report.cls.label()));
    });
  }
  bool distinct = true;
  std::string offending;
  for (std::size_t a = 0; a < tuples.size() && distinct; ++a)
    for (std::size_t b = a + 1; b < tuples.size(); ++b)
      if (tuples[a].second == tuples[b].second) {
        distinct = false;
        offending = std::string(toString(tuples[a].first)) + " vs " +
                    toString(tuples[b].first) + " both " + tuples[a].second.str();
        break;
      }
  check(sec, "ten invariant tuples pairwise distinct", distinct, offending);
  return sec;
}

/// Homogeneous, nonzero and exactly non-invertible.
bool verifyRejectionWitness(const SuperAlgebra<Rational>& a, const Vec& w) {
  if (isZeroVector<Rational>(w)) return false;
  if (a.parityOf(w) == ParityTag::Mixed) return false;
  return !a.tryInvert(w).has_value();
}

SectionResult runClifford(const SelftestOptions&) {
  SectionResult sec{"clifford", {}};
  const std::vector<std::pair<CliffordSignature, TenLabel>> table = {
      {{0, 0}, TenLabel::R},          {{1, 0}, TenLabel::RPlus},
      {{0, 1}, TenLabel::RMinus},     {{2, 0}, TenLabel::CAntiPlus},
      {{0, 2}, TenLabel::CAntiMinus}, {{3, 0}, TenLabel::HMinus},
      {{0, 3}, TenLabel::HPlus},
  };
  for (const auto& [sig, want] : table) {
    std::string name = "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ") -> " +
                       toString(want);
    checked(sec, name, [&, sig = sig, want = want] {
      CliffordClassification c = classifyClifford(sig);
      bool ok = c.isSuperDivision() && c.report->cls.label() == want;
      check(sec, name, ok,
            c.isSuperDivision() ? std::string("got ") + toString(c.report->cls.label())
                                : "rejected: " + c.rejectionReason);
    });
  }
  checked(sec, "realify(Cl_0(C)) -> C", [&] {
    ClassificationReport r = classify(realify(cliffordComplex(0)));
    check(sec, "realify(Cl_0(C)) -> C", r.cls.label() == TenLabel::C,
          std::string("got ") + toString(r.cls.label()));
  });
  checked(sec, "realify(Cl_1(C)) -> C_comm", [&] {
    ClassificationReport r = classify(realify(cliffordComplex(1)));
    check(sec, "realify(Cl_1(C)) -> C_comm", r.cls.label() == TenLabel::CComm,
          std::string("got ") + toString(r.cls.label()));
  });
  for (CliffordSignature sig : {CliffordSignature{1, 1}, CliffordSignature{2, 2}}) {
    std::string name = "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                       ") rejected with verified witness";
    checked(sec, name, [&, sig] {
      CliffordClassification c = classifyClifford(sig);
      bool ok = !c.isSuperDivision() && c.witness &&
                verifyRejectionWitness(cliffordReal(sig), *c.witness);
      check(sec, name, ok, c.rejectionReason);
    });
  }
  return sec;
}

SectionResult runPeriodicity(const SelftestOptions&) {
  SectionResult sec{"periodicity", {}};
  for (int total = 0; total <= 4; ++total)
    for (int p = 0; p <= total; ++p) {
      CliffordSignature base{p, total - p};
      std::string name = "Cl(" + std::to_string(base.p + 1) + "," + std::to_string(base.q + 1) +
                         ") ~ Cl(" + std::to_string(base.p) + "," + std::to_string(base.q) +
                         ") (x) Cl(1,1)";
      checked(sec, name, [&] {
        PeriodicityRecord rec = verifyPeriodicity(base);
        check(sec, name, rec.map.spanDim == rec.map.targetDim,
              "span " + std::to_string(rec.map.spanDim));
      });
    }
  checked(sec, "Cl(1,1) ~ End(R^{1|1})", [&] {
    GeneratorMapRecord rec = verifyCl11IsEnd11();
    check(sec, "Cl(1,1) ~ End(R^{1|1})", rec.spanDim == 4, "");
  });
  return sec;
}

SectionResult runMorita(const SelftestOptions&) {
  SectionResult sec{"morita", {}};
  struct Case {
    int value;
    CliffordSignature sig;
    std::optional<TenLabel> label;  // nullopt: certified via the class-4 map
  };
  const std::vector<Case> cases = {
      {0, {1, 1}, TenLabel::R},          {1, {2, 1}, TenLabel::RPlus},
      {2, {3, 1}, TenLabel::CAntiPlus},  {3, {4, 1}, TenLabel::HMinus},
      {4, {5, 1}, std::nullopt},         {5, {1, 4}, TenLabel::HPlus},
      {6, {1, 3}, TenLabel::CAntiMinus}, {7, {1, 2}, TenLabel::RMinus},
  };
  for (const Case& c : cases) {
    std::string name = "Brauer-Wall class " + std::to_string(c.value) + " via Cl(" +
                       std::to_string(c.sig.p) + "," + std::to_string(c.sig.q) + ")";
    checked(sec, name, [&] {
      if (brauerWall(c.sig).value != c.value) {
        check(sec, name, false, "formula value mismatch");
        return;
      }
      std::vector<CliffordSignature> chain = reductionChain(c.sig);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        verifyPeriodicity(chain[k + 1]);  // Cl(chain[k]) ~ Cl(chain[k+1]) (x) Cl(1,1)
        if (brauerWall(chain[k + 1]).value != c.value) {
          check(sec, name, false, "class changed along the reduction chain");
          return;
        }
      }
      CliffordSignature terminal = chain.back();
      if (c.label) {
        CliffordClassification cc = classifyClifford(terminal);
        bool ok = cc.isSuperDivision() && cc.report->cls.label() == *c.label;
        check(sec, name, ok,
              ok ? std::string("reduces to ") + toString(*c.label)
                 : "terminal classification mismatch");
      } else {
        GeneratorMapRecord rec = verifyMoritaClass4();
        check(sec, name, rec.spanDim == 16,
              "terminal Cl(4,0) certified Morita-equivalent to H");
      }
    });
  }
  return sec;
}

Mat c4Rotation() {
  Mat m(2, 2);
  m << Rational(0), Rational(-1), Rational(1), Rational(0);
  return m;
}

// left multiplication by i and j on the quaternions with basis (1, i, j, k)
std::pair<Mat, Mat> q8LeftRegular() {
  Mat li = Mat::Zero(4, 4), lj = Mat::Zero(4, 4);
  li(1, 0) = 1; li(0, 1) = -1; li(3, 2) = 1; li(2, 3) = -1;
  lj(2, 0) = 1; lj(3, 1) = -1; lj(0, 2) = -1; lj(1, 3) = 1;
  return {li, lj};
}

// standard degree-2 rational representation of S3: a 3-cycle and a transposition
std::pair<Mat, Mat> s3Standard() {
  Mat r(2, 2), s(2, 2);
  r << Rational(0), Rational(-1), Rational(1), Rational(-1);
  s << Rational(0), Rational(1), Rational(1), Rational(0);
  return {r, s};
}

std::pair<CMat, CMat> q8Complex() {
  GaussianRational i = GaussianRational::i();
  CMat gi = CMat::Zero(2, 2), gj = CMat::Zero(2, 2);
  gi(0, 0) = i; gi(1, 1) = -i;
  gj(0, 1) = 1; gj(1, 0) = -1;
  return {gi, gj};
}

template <typename Scalar>
CMat complexify(const MatrixX<Scalar>&);

CMat complexifyReal(const Mat& m) {
  CMat out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c));
  return out;
}

SectionResult runThreefold(const SelftestOptions&) {
  SectionResult sec{"threefold", {}};

  checked(sec, "C4 rotations: Schur type C", [&] {
    auto rep = groupClosure<Rational>({c4Rotation()});
    SchurAnalysis an = schurType(rep);
    check(sec, "C4 rotations: Schur type C",
          rep.order() == 4 && an.type == SchurType::C && an.comm.dimension == 2,
          std::string("order ") + std::to_string(rep.order()) + ", type " +
              toString(an.type));
  });
  checked(sec, "Q8 left regular: Schur type H", [&] {
    auto [li, lj] = q8LeftRegular();
    auto rep = groupClosure<Rational>({li, lj});
    SchurAnalysis an = schurType(rep);
    check(sec, "Q8 left regular: Schur type H",
          rep.order() == 8 && an.type == SchurType::H && an.comm.dimension == 4,
          std::string("order ") + std::to_string(rep.order()) + ", type " +
              toString(an.type));
  });
  checked(sec, "S3 standard: Schur type R", [&] {
    auto [r, s] = s3Standard();
    auto rep = groupClosure<Rational>({r, s});
    SchurAnalysis an = schurType(rep);
    check(sec, "S3 standard: Schur type R",
          rep.order() == 6 && an.type == SchurType::R && an.comm.dimension == 1,
          std::string("order ") + std::to_string(rep.order()) + ", type " +
              toString(an.type));
  });
  checked(sec, "trivial + trivial: reducible", [&] {
    auto rep = groupClosure<Rational>({Mat::Identity(2, 2)});
    SchurAnalysis an = schurType(rep);
    check(sec, "trivial + trivial: reducible", an.type == SchurType::Reducible,
          toString(an.type));
  });
  checked(sec, "C4 complex: fs = 0", [&] {
    CMat g(1, 1);
    g(0, 0) = GaussianRational::i();
    auto rep = groupClosure<GaussianRational>({g});
    int fs = fsIndicator(rep);
    check(sec, "C4 complex: fs = 0", fs == 0, "fs " + std::to_string(fs));
  });
  checked(sec, "Q8 degree 2: fs = -1", [&] {
    auto [gi, gj] = q8Complex();
    auto rep = groupClosure<GaussianRational>({gi, gj});
    int fs = fsIndicator(rep);
    check(sec, "Q8 degree 2: fs = -1", fs == -1, "fs " + std::to_string(fs));
  });
  checked(sec, "S3 standard complexified: fs = +1", [&] {
    auto [r, s] = s3Standard();
    auto rep = groupClosure<GaussianRational>({complexifyReal(r), complexifyReal(s)});
    int fs = fsIndicator(rep);
    check(sec, "S3 standard complexified: fs = +1", fs == 1, "fs " + std::to_string(fs));
  });
  return sec;
}

}  // namespace

const std::vector<std::string>& selftestSections() {
  static const std::vector<std::string> names = {"tenfold", "clifford", "periodicity",
                                                 "morita", "threefold"};
  return names;
}

std::vector<SectionResult> runSelftest(const SelftestOptions& options) {
  using Runner = SectionResult (*)(const SelftestOptions&);
  const std::vector<std::pair<std::string, Runner>> sections = {
      {"tenfold", runTenfold},
      {"clifford", runClifford},
      {"periodicity", runPeriodicity},
      {"morita", runMorita},
      {"threefold", runThreefold},
  };

  std::vector<std::future<SectionResult>> futures;
  std::vector<std::string> names;
  for (const auto& [name, runner] : sections) {
    if (options.section && *options.section != name) continue;
    names.push_back(name);
    futures.push_back(std::async(std::launch::async, runner, std::cref(options)));
  }
  if (futures.empty()) throw ParseError("unknown selftest section: " + *options.section);

  std::vector<SectionResult> out;
  for (auto& f : futures) out.push_back(f.get());  // futures joined in fixed order
  return out;
}

}  // namespace tenfold

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "tenfold/clifford.hpp"
#include "tenfold/divclass.hpp"
#include "tenfold/io.hpp"
#include "tenfold/repthree.hpp"
#include "tenfold/selftest.hpp"

namespace {

using namespace tenfold;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // domain rejection, witness in the report
constexpr int kExitInput = 2;   // malformed input

struct Output {
  bool json = false;
  std::optional<std::string> outFile;

  void emit(const Json& report) const {
    std::cout << dumpJson(report);
  }
  void prose(const std::string& line) const { std::cout << line << "\n"; }
};

std::size_t closureCap() {
  const char* env = std::getenv("TENFOLD_CLOSURE_CAP");
  if (!env) return kDefaultClosureCap;
  try {
    std::size_t pos = 0;
    std::string s(env);
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("TENFOLD_CLOSURE_CAP must be a positive integer");
  }
}

void writeAlgebra(const Json& algebraJson, const Output& out, const std::string& describe) {
  std::string bytes = dumpJson(algebraJson);
  if (out.outFile) {
    writeFile(*out.outFile, bytes);
    if (out.json) {
      Json j;
      j["written"] = *out.outFile;
      out.emit(j);
    } else {
      out.prose(describe + " -> " + *out.outFile);
    }
  } else {
    std::cout << bytes;
  }
}

void printReportProse(const ClassificationReport& report) {
  std::cout << "class: " << toString(report.cls.label()) << "\n";
  std::cout << "invariant tuple: " << invariantTuple(report).str() << "\n";
  std::cout << "proof trace:\n";
  for (const auto& line : report.trace) std::cout << "  - " << line << "\n";
}

int classifyAndReport(const SuperAlgebra<Rational>& algebra, const Output& out,
                      std::vector<std::string> preNotes = {}) {
  try {
    ClassificationReport report = classify(algebra);
    report.trace.insert(report.trace.begin(), preNotes.begin(), preNotes.end());
    if (out.json) {
      out.emit(reportToJson(report));
    } else {
      for (const auto& n : preNotes) std::cout << "note: " << n << "\n";
      printReportProse(report);
    }
    return kExitOk;
  } catch (const NotSuperDivision& e) {
    if (out.json) {
      out.emit(rejectionToJson(e));
    } else {
      std::cout << "rejected: " << e.relation << "\n";
      if (!e.witnessCoords.empty()) {
        std::cout << "witness (" << e.witnessParity << "): [";
        for (std::size_t k = 0; k < e.witnessCoords.size(); ++k) {
          if (k) std::cout << ", ";
          std::cout << e.witnessCoords[k];
        }
        std::cout << "]\n";
      }
    }
    return kExitDomain;
  }
}

SuperAlgebra<Rational> toRealModel(AnyAlgebra any, std::vector<std::string>* notes) {
  if (auto* real = std::get_if<SuperAlgebra<Rational>>(&any)) return std::move(*real);
  if (notes)
    notes->push_back("input is a C-model algebra: classified after restriction of scalars");
  return realify(std::get<SuperAlgebra<GaussianRational>>(any));
}

int runCanon(const std::string& labelStr, const Output& out) {
  auto label = tenLabelFromString(labelStr);
  if (!label) throw ParseError("unknown label '" + labelStr + "'");
  SuperAlgebra<Rational> algebra = canonical(*label);
  writeAlgebra(algebraToJson(algebra), out,
               std::string("canonical ") + toString(*label) + " (dim " +
                   std::to_string(algebra.dim()) + ")");
  return kExitOk;
}

int runClassify(const std::string& path, const Output& out) {
  AnyAlgebra any = algebraFromJson(parseJson(readFile(path)));
  std::vector<std::string> notes;
  SuperAlgebra<Rational> algebra = toRealModel(std::move(any), &notes);
  return classifyAndReport(algebra, out, std::move(notes));
}

int runClifford(std::optional<int> p, std::optional<int> q, std::optional<int> complexN,
                bool doClassify, const Output& out) {
  if (complexN && (p || q))
    throw ParseError("--complex cannot be combined with --p/--q");
  if (complexN) {
    SuperAlgebra<GaussianRational> algebra = cliffordComplex(*complexN);
    if (doClassify) {
      std::vector<std::string> notes{"complex Clifford algebra classified after realify"};
      if (out.outFile) writeFile(*out.outFile, dumpJson(algebraToJson(algebra)));
      return classifyAndReport(realify(algebra), out, std::move(notes));
    }
    writeAlgebra(algebraToJson(algebra), out,
                 "Cl_" + std::to_string(*complexN) + "(C) (dim " +
                     std::to_string(algebra.dim()) + ")");
    return kExitOk;
  }
  CliffordSignature sig{p.value_or(0), q.value_or(0)};
  SuperAlgebra<Rational> algebra = cliffordReal(sig);
  if (doClassify) {
    if (out.outFile) writeFile(*out.outFile, dumpJson(algebraToJson(algebra)));
    return classifyAndReport(algebra, out);
  }
  writeAlgebra(algebraToJson(algebra), out,
               "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ") (dim " +
                   std::to_string(algebra.dim()) + ")");
  return kExitOk;
}

int runTensor(const std::string& pathA, const std::string& pathB, const Output& out) {
  AnyAlgebra a = algebraFromJson(parseJson(readFile(pathA)));
  AnyAlgebra b = algebraFromJson(parseJson(readFile(pathB)));
  if (a.index() != b.index()) throw ParseError("tensor operands live over different fields");
  if (auto* ra = std::get_if<SuperAlgebra<Rational>>(&a)) {
    auto t = gradedTensor(*ra, std::get<SuperAlgebra<Rational>>(b));
    writeAlgebra(algebraToJson(t), out, "graded tensor (dim " + std::to_string(t.dim()) + ")");
  } else {
    auto t = gradedTensor(std::get<SuperAlgebra<GaussianRational>>(a),
                          std::get<SuperAlgebra<GaussianRational>>(b));
    writeAlgebra(algebraToJson(t), out, "graded tensor (dim " + std::to_string(t.dim()) + ")");
  }
  return kExitOk;
}

template <typename Scalar>
int invertIn(const SuperAlgebra<Scalar>& algebra, const Json& coordsJson, const Output& out) {
  if (!coordsJson.is_array() || static_cast<Index>(coordsJson.size()) != algebra.dim())
    throw ParseError("--element must be a JSON array of dim scalars");
  VectorX<Scalar> v(algebra.dim());
  for (Index k = 0; k < algebra.dim(); ++k) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      v[k] = rationalFromJson(coordsJson.at(k));
    else
      v[k] = gaussianFromJson(coordsJson.at(k));
  }
  auto inv = algebra.tryInvert(v);
  if (!inv) {
    if (out.json) {
      Json j;
      j["invertible"] = false;
      out.emit(j);
    } else {
      out.prose("not invertible");
    }
    return kExitDomain;
  }
  if (out.json) {
    Json j;
    j["invertible"] = true;
    Json coords = Json::array();
    for (Index k = 0; k < algebra.dim(); ++k) coords.push_back(toJson((*inv)[k]));
    j["inverse"] = std::move(coords);
    out.emit(j);
  } else {
    std::string line = "inverse: [";
    for (Index k = 0; k < algebra.dim(); ++k) {
      if (k) line += ", ";
      line += (*inv)[k].str();
    }
    out.prose(line + "]");
  }
  return kExitOk;
}

int runInvert(const std::string& path, const std::string& elementJson, const Output& out) {
  AnyAlgebra any = algebraFromJson(parseJson(readFile(path)));
  Json coords = parseJson(elementJson);
  if (auto* real = std::get_if<SuperAlgebra<Rational>>(&any))
    return invertIn(*real, coords, out);
  return invertIn(std::get<SuperAlgebra<GaussianRational>>(any), coords, out);
}

int runCommutant(const std::string& path, const Output& out) {
  AnyGenerators gens = generatorsFromJson(parseJson(readFile(path)));
  Json j;
  std::string type;
  std::size_t order = 0;
  Index dim = 0;
  if (auto* rg = std::get_if<std::vector<MatrixX<Rational>>>(&gens)) {
    GroupRep<Rational> rep = groupClosure(std::move(*rg), closureCap());
    SchurAnalysis an = schurType(rep);
    order = rep.order();
    dim = an.comm.dimension;
    type = toString(an.type);
  } else {
    auto& cg = std::get<std::vector<MatrixX<GaussianRational>>>(gens);
    GroupRep<GaussianRational> rep = groupClosure(std::move(cg), closureCap());
    CommutantResult<GaussianRational> comm = commutant(rep);
    order = rep.order();
    dim = comm.dimension;
    // complex Schur: the commutant of an absolutely irreducible complex
    // representation is the scalars, so dimension 1 decides it
    type = dim == 1 ? "C" : "reducible";
  }
  if (out.json) {
    j["order"] = order;
    j["commutant_dim"] = dim;
    j["type"] = type;
    out.emit(j);
  } else {
    out.prose("group order: " + std::to_string(order));
    out.prose("commutant dimension: " + std::to_string(dim));
    out.prose("type: " + type);
  }
  return kExitOk;
}

int runFs(const std::string& path, const Output& out) {
  AnyGenerators gens = generatorsFromJson(parseJson(readFile(path)));
  auto* cg = std::get_if<std::vector<MatrixX<GaussianRational>>>(&gens);
  if (!cg) throw ParseError("fs needs a C-model representation (\"field\": \"C\")");
  GroupRep<GaussianRational> rep = groupClosure(std::move(*cg), closureCap());
  int fs = fsIndicator(rep);
  if (out.json) {
    Json j;
    j["order"] = rep.order();
    j["commutant_dim"] = 1;
    j["fs"] = fs > 0 ? "+1" : (fs < 0 ? "-1" : "0");
    out.emit(j);
  } else {
    out.prose("group order: " + std::to_string(rep.order()));
    out.prose("fs indicator: " + std::to_string(fs));
  }
  return kExitOk;
}

int runPeriodicity(int p, int q, const Output& out) {
  PeriodicityRecord rec = verifyPeriodicity({p, q});
  if (out.json) {
    out.emit(periodicityToJson(rec));
  } else {
    out.prose(rec.map.sourceName + " ~ " + rec.map.targetName + ": verified");
    out.prose("generator images: " + std::to_string(rec.map.images.size()) +
              ", span dimension: " + std::to_string(rec.map.spanDim));
  }
  return kExitOk;
}

int runSelftestCmd(const std::optional<std::string>& section,
                   const std::optional<std::string>& corrupt, const Output& out) {
  SelftestOptions opt;
  opt.section = section;
  if (corrupt) {
    auto label = tenLabelFromString(*corrupt);
    if (!label) throw ParseError("unknown label '" + *corrupt + "'");
    opt.corruptCanon = label;
  }
  std::vector<SectionResult> results = runSelftest(opt);
  bool allPass = true;
  if (out.json) {
    Json j = Json::array();
    for (const auto& sec : results) {
      Json sj;
      sj["section"] = sec.name;
      sj["pass"] = sec.pass();
      Json checks = Json::array();
      for (const auto& c : sec.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
      }
      sj["checks"] = std::move(checks);
      j.push_back(std::move(sj));
      allPass = allPass && sec.pass();
    }
    out.emit(j);
  } else {
    for (const auto& sec : results) {
      allPass = allPass && sec.pass();
      std::cout << "== " << sec.name << " " << (sec.pass() ? "[PASS]" : "[FAIL]") << "\n";
      for (const auto& c : sec.checks) {
        std::cout << "  " << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
    }
  }
  return allPass ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact super division algebra toolkit"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON reports");

  std::string canonLabel;
  std::optional<std::string> outFile;
  auto* canonCmd = app.add_subcommand("canon", "canonical algebra for one of the ten labels");
  canonCmd->add_option("label", canonLabel, "R, C, H, R_plus, ... H_minus")->required();
  canonCmd->add_option("-o,--output", outFile, "write algebra JSON to this file");

  std::string classifyPath;
  auto* classifyCmd = app.add_subcommand("classify", "classify an algebra file");
  classifyCmd->add_option("file", classifyPath, "algebra JSON")->required();

  std::optional<int> clifP, clifQ, clifComplex;
  bool clifClassify = false;
  auto* clifCmd = app.add_subcommand("clifford", "construct Cl(p,q) or Cl_n(C)");
  clifCmd->add_option("--p", clifP, "generators squaring to +1");
  clifCmd->add_option("--q", clifQ, "generators squaring to -1");
  clifCmd->add_option("--complex", clifComplex, "complex Clifford algebra Cl_n(C)");
  clifCmd->add_flag("--classify", clifClassify, "classify the constructed algebra");
  clifCmd->add_option("-o,--output", outFile, "write algebra JSON to this file");

  std::string tensorA, tensorB;
  auto* tensorCmd = app.add_subcommand("tensor", "graded (Koszul) tensor product");
  tensorCmd->add_option("a", tensorA, "left algebra JSON")->required();
  tensorCmd->add_option("b", tensorB, "right algebra JSON")->required();
  tensorCmd->add_option("-o,--output", outFile, "write algebra JSON to this file");

  std::string invertPath, invertElement;
  auto* invertCmd = app.add_subcommand("invert", "invert an element of an algebra");
  invertCmd->add_option("file", invertPath, "algebra JSON")->required();
  invertCmd->add_option("--element", invertElement, "JSON array of dim scalars")->required();

  std::string commutantPath;
  auto* commutantCmd =
      app.add_subcommand("commutant", "group closure, commutant and Schur type");
  commutantCmd->add_option("file", commutantPath, "representation JSON")->required();

  std::string fsPath;
  auto* fsCmd = app.add_subcommand("fs", "Frobenius-Schur indicator of a complex irreducible");
  fsCmd->add_option("file", fsPath, "representation JSON")->required();

  int perP = 0, perQ = 0;
  auto* perCmd =
      app.add_subcommand("periodicity", "verify Cl(p+1,q+1) ~ Cl(p,q) (x) Cl(1,1)");
  perCmd->add_option("--p", perP, "base signature p")->required();
  perCmd->add_option("--q", perQ, "base signature q")->required();

  std::optional<std::string> selftestSection, selftestCorrupt;
  auto* selftestCmd = app.add_subcommand("selftest", "run the bundled verification corpus");
  selftestCmd->add_option("--section", selftestSection, "tenfold|clifford|periodicity|morita|threefold");
  selftestCmd->add_option("--corrupt-canon", selftestCorrupt,
                          "test hook: corrupt this canonical table")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  Output out{json, outFile};
  try {
    if (*canonCmd) return runCanon(canonLabel, out);
    if (*classifyCmd) return runClassify(classifyPath, out);
    if (*clifCmd) return runClifford(clifP, clifQ, clifComplex, clifClassify, out);
    if (*tensorCmd) return runTensor(tensorA, tensorB, out);
    if (*invertCmd) return runInvert(invertPath, invertElement, out);
    if (*commutantCmd) return runCommutant(commutantPath, out);
    if (*fsCmd) return runFs(fsPath, out);
    if (*perCmd) return runPeriodicity(perP, perQ, out);
    if (*selftestCmd) return runSelftestCmd(selftestSection, selftestCorrupt, out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const RelationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const SpanDeficient& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotIrreducible& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ClosureExceeded& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotInvertible& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    // invalid input data (bad tables, bad signatures, bad labels)
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

#include "tenfold/io.hpp"

#include <fstream>
#include <sstream>

namespace tenfold {

Json toJson(const Rational& r) { return r.str(); }

Json toJson(const GaussianRational& z) {
  Json j;
  j["re"] = z.re().str();
  j["im"] = z.im().str();
  return j;
}

Rational rationalFromJson(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational scalar string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

GaussianRational gaussianFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("expected a Gaussian scalar object {\"re\", \"im\"}, got " + j.dump());
  return {rationalFromJson(j.at("re")), rationalFromJson(j.at("im"))};
}

namespace {

template <typename Scalar>
Json scalarJson(const Scalar& s) {
  return toJson(s);
}

template <typename Scalar>
Json algebraJson(const SuperAlgebra<Scalar>& a, const char* fieldName) {
  Json j;
  j["field"] = fieldName;
  j["dim"] = a.dim();
  j["parity"] = Json::array();
  for (Index i = 0; i < a.dim(); ++i) j["parity"].push_back(static_cast<int>(a.parity(i)));
  j["unit"] = Json::array();
  for (Index i = 0; i < a.dim(); ++i) j["unit"].push_back(scalarJson(a.unit()[i]));
  Json mul = Json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (Index jj = 0; jj < a.dim(); ++jj) {
      Json coords = Json::array();
      VectorX<Scalar> prod = a.basisProduct(i, jj);
      for (Index k = 0; k < a.dim(); ++k) coords.push_back(scalarJson(prod[k]));
      row.push_back(std::move(coords));
    }
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

template <typename Scalar>
Scalar scalarFromJson(const Json& j);
template <>
Rational scalarFromJson<Rational>(const Json& j) {
  return rationalFromJson(j);
}
template <>
GaussianRational scalarFromJson<GaussianRational>(const Json& j) {
  return gaussianFromJson(j);
}

template <typename Scalar>
SuperAlgebra<Scalar> algebraFromJsonT(const Json& j, bool validateNow) {
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw ParseError("algebra JSON needs an integer \"dim\"");
  const Index n = j.at("dim").get<Index>();
  if (n <= 0) throw ParseError("algebra dimension must be positive");
  const Json& parityJ = j.at("parity");
  const Json& unitJ = j.at("unit");
  const Json& mulJ = j.at("mul");
  if (!parityJ.is_array() || static_cast<Index>(parityJ.size()) != n)
    throw ParseError("\"parity\" must be an array of length dim");
  if (!unitJ.is_array() || static_cast<Index>(unitJ.size()) != n)
    throw ParseError("\"unit\" must be an array of length dim");
  if (!mulJ.is_array() || static_cast<Index>(mulJ.size()) != n)
    throw ParseError("\"mul\" must be a dim x dim x dim array");

  std::vector<std::uint8_t> parity(n);
  for (Index i = 0; i < n; ++i) {
    int p = parityJ.at(i).get<int>();
    if (p != 0 && p != 1) throw ParseError("parity entries must be 0 or 1");
    parity[i] = static_cast<std::uint8_t>(p);
  }
  VectorX<Scalar> unit(n);
  for (Index i = 0; i < n; ++i) unit[i] = scalarFromJson<Scalar>(unitJ.at(i));

  std::vector<MatrixX<Scalar>> lmul(n, MatrixX<Scalar>(n, n));
  for (Index i = 0; i < n; ++i) {
    const Json& row = mulJ.at(i);
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("\"mul\" must be a dim x dim x dim array");
    for (Index jj = 0; jj < n; ++jj) {
      const Json& coords = row.at(jj);
      if (!coords.is_array() || static_cast<Index>(coords.size()) != n)
        throw ParseError("\"mul\" must be a dim x dim x dim array");
      for (Index k = 0; k < n; ++k) lmul[i](k, jj) = scalarFromJson<Scalar>(coords.at(k));
    }
  }
  return SuperAlgebra<Scalar>::fromLeftMul(std::move(parity), std::move(lmul), std::move(unit),
                                           validateNow);
}

std::string fieldOf(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.at("field").is_string())
    throw ParseError("JSON needs a \"field\" of \"R\" or \"C\"");
  std::string f = j.at("field").get<std::string>();
  if (f != "R" && f != "C") throw ParseError("\"field\" must be \"R\" or \"C\"");
  return f;
}

}  // namespace

Json algebraToJson(const SuperAlgebra<Rational>& a) { return algebraJson(a, "R"); }
Json algebraToJson(const SuperAlgebra<GaussianRational>& a) { return algebraJson(a, "C"); }

AnyAlgebra algebraFromJson(const Json& j, bool validateNow) {
  try {
    if (fieldOf(j) == "R") return algebraFromJsonT<Rational>(j, validateNow);
    return algebraFromJsonT<GaussianRational>(j, validateNow);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

namespace {

template <typename Scalar>
std::vector<MatrixX<Scalar>> generatorsFromJsonT(const Json& j) {
  if (!j.contains("degree") || !j.at("degree").is_number_integer())
    throw ParseError("representation JSON needs an integer \"degree\"");
  const Index n = j.at("degree").get<Index>();
  if (n <= 0) throw ParseError("degree must be positive");
  const Json& gens = j.at("generators");
  if (!gens.is_array() || gens.empty())
    throw ParseError("\"generators\" must be a nonempty array");
  std::vector<MatrixX<Scalar>> out;
  for (const Json& g : gens) {
    if (!g.is_array() || static_cast<Index>(g.size()) != n * n)
      throw ParseError("each generator must be a flat row-major list of degree^2 scalars");
    MatrixX<Scalar> m(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) m(r, c) = scalarFromJson<Scalar>(g.at(r * n + c));
    out.push_back(std::move(m));
  }
  return out;
}

template <typename Scalar>
Json repJson(const GroupRep<Scalar>& rep, const char* fieldName) {
  Json j;
  j["field"] = fieldName;
  j["degree"] = rep.degree;
  Json gens = Json::array();
  for (const auto& g : rep.generators) {
    Json flat = Json::array();
    for (Index r = 0; r < rep.degree; ++r)
      for (Index c = 0; c < rep.degree; ++c) flat.push_back(scalarJson(g(r, c)));
    gens.push_back(std::move(flat));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace

AnyGenerators generatorsFromJson(const Json& j) {
  try {
    if (fieldOf(j) == "R") return generatorsFromJsonT<Rational>(j);
    return generatorsFromJsonT<GaussianRational>(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed representation JSON: ") + e.what());
  }
}

Json repToJson(const GroupRep<Rational>& rep) { return repJson(rep, "R"); }
Json repToJson(const GroupRep<GaussianRational>& rep) { return repJson(rep, "C"); }

Json vectorToJson(const VectorX<Rational>& v) {
  Json j = Json::array();
  for (Index k = 0; k < v.size(); ++k) j.push_back(v[k].str());
  return j;
}

Json reportToJson(const ClassificationReport& report) {
  Json j;
  j["class"] = toString(report.cls.label());
  j["even_type"] = toString(report.cls.even);
  j["has_odd"] = report.cls.hasOdd;
  j["e_square_sign"] = toString(report.cls.eSquareSign);
  j["commutation"] = toString(report.cls.commutation);
  InvariantTuple t = invariantTuple(report);
  j["invariant_tuple"] = {
      {"even_dim", t.evenDim},
      {"has_odd", t.hasOdd},
      {"commutation", toString(t.commutation)},
      {"e_square_sign", toString(t.eSquareSign)},
  };
  if (report.chosenOdd) j["chosen_e"] = vectorToJson(*report.chosenOdd);
  if (report.recenteredOdd) j["recentered_e"] = vectorToJson(*report.recenteredOdd);
  Json witness;
  witness["even_type"] = toString(report.evenWitness.label);
  if (report.evenWitness.complexUnit) {
    witness["complex_unit"] = vectorToJson(*report.evenWitness.complexUnit);
    witness["d"] = report.evenWitness.d.str();
  }
  if (report.evenWitness.pureTriple) {
    Json triple = Json::array();
    for (const auto& v : *report.evenWitness.pureTriple) triple.push_back(vectorToJson(v));
    witness["pure_triple"] = std::move(triple);
    Json gram = Json::array();
    for (Index r = 0; r < 3; ++r) {
      Json row = Json::array();
      for (Index c = 0; c < 3; ++c) row.push_back(report.evenWitness.gram(r, c).str());
      gram.push_back(std::move(row));
    }
    witness["gram"] = std::move(gram);
  }
  j["even_witness"] = std::move(witness);
  j["trace"] = report.trace;
  return j;
}

Json rejectionToJson(const NotSuperDivision& err) {
  Json j;
  j["rejected"] = true;
  j["reason"] = err.relation;
  if (!err.witnessCoords.empty()) {
    j["witness"] = err.witnessCoords;
    j["witness_parity"] = err.witnessParity;
  }
  return j;
}

Json generatorMapToJson(const GeneratorMapRecord& rec) {
  Json j;
  j["source"] = rec.sourceName;
  j["target"] = rec.targetName;
  j["required_squares"] = rec.requiredSquares;
  Json images = Json::array();
  for (const auto& v : rec.images) images.push_back(vectorToJson(v));
  j["images"] = std::move(images);
  j["span_dim"] = rec.spanDim;
  j["target_dim"] = rec.targetDim;
  return j;
}

Json periodicityToJson(const PeriodicityRecord& rec) {
  Json j;
  j["base"] = {{"p", rec.base.p}, {"q", rec.base.q}};
  j["source"] = {{"p", rec.source.p}, {"q", rec.source.q}};
  j["map"] = generatorMapToJson(rec.map);
  return j;
}

std::string dumpJson(const Json& j) { return j.dump() + "\n"; }

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

}  // namespace tenfold

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "tenfold/clifford.hpp"
#include "tenfold/divclass.hpp"
#include "tenfold/repthree.hpp"
#include "tenfold/superalgebra.hpp"

namespace tenfold {

// Insertion-ordered JSON keeps every serialization byte-deterministic.
using Json = nlohmann::ordered_json;

// Scalars: rationals as canonical "p/q" strings (q omitted when 1), Gaussian
// rationals as {"re": "p/q", "im": "r/s"}.
Json toJson(const Rational& r);
Json toJson(const GaussianRational& z);
Rational rationalFromJson(const Json& j);
GaussianRational gaussianFromJson(const Json& j);

// Superalgebra interchange:
// {"field": "R"|"C", "dim": n, "parity": [...], "unit": [...], "mul": [[[...]]]}
// with mul[i][j] the coordinates of b_i * b_j. Round trip of canonical-form
// scalars is byte-identical.
Json algebraToJson(const SuperAlgebra<Rational>& a);
Json algebraToJson(const SuperAlgebra<GaussianRational>& a);

using AnyAlgebra = std::variant<SuperAlgebra<Rational>, SuperAlgebra<GaussianRational>>;
AnyAlgebra algebraFromJson(const Json& j, bool validateNow = true);

// Group representation input: {"field", "degree", "generators": [[...], ...]}
// with each generator a row-major flat list of degree^2 scalars.
using AnyGenerators =
    std::variant<std::vector<MatrixX<Rational>>, std::vector<MatrixX<GaussianRational>>>;
AnyGenerators generatorsFromJson(const Json& j);
Json repToJson(const GroupRep<Rational>& rep);
Json repToJson(const GroupRep<GaussianRational>& rep);

Json vectorToJson(const VectorX<Rational>& v);
Json reportToJson(const ClassificationReport& report);
Json rejectionToJson(const NotSuperDivision& err);
Json generatorMapToJson(const GeneratorMapRecord& rec);
Json periodicityToJson(const PeriodicityRecord& rec);

/// Canonical byte form used for every file and stream the tools emit.
std::string dumpJson(const Json& j);
Json parseJson(const std::string& text);  // wraps parse errors in ParseError
std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& contents);

}  // namespace tenfold

#pragma once

#include <json.hpp>

#include <map>

#include "tropsym/blocksym.hpp"
#include "tropsym/poly.hpp"
#include "tropsym/sym.hpp"

namespace tropsym {

using Json = nlohmann::ordered_json;

// Malformed documents throw Error(kSyntax).

Json toJson(const Poly& p);
Poly polyFromJson(const Json& j);

Json toJson(const TropRational& r);
TropRational rationalFromJson(const Json& j);

/// {"n": n, "terms": [{"coeff": "0", "e_exps": [1, 1, 0]}]}
Json toJson(const GeneratorExpr& g);
GeneratorExpr generatorExprFromJson(const Json& j);

/// {"n": n, "expr": tree}, tree nodes {"const": "c"}, {"gen": label, "exp": k},
/// {"add": [...]}, {"mul": [...]}, {"inv": node}.
Json toJson(const Gen2Expr& g);
Gen2Expr gen2ExprFromJson(const Json& j);

/// {"intervals": [{"birth": "0", "death": "3/2"}]}
Json toJson(const Barcode& b);
Barcode barcodeFromJson(const Json& j);

Json toJson(const Point& x);
Json toJson(const std::map<OrbitRep, Rational>& fingerprint);

/// Parses text, mapping nlohmann parse errors to Error(kSyntax).
Json parseJson(const std::string& text);

}  // namespace tropsym

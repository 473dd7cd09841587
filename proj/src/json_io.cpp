#include "tropsym/json_io.hpp"

#include <optional>

#include "tropsym/error.hpp"

namespace tropsym {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kSyntax, "invalid JSON document: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rationalField(const Json& j) {
  if (j.is_string()) {
    try {
      return parseRational(j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (j.is_number_integer()) return fromInt(j.get<std::int64_t>());
  bad("expected a rational as a string or integer");
}

std::int64_t intField(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer");
  return j.get<std::int64_t>();
}

std::size_t sizeField(const Json& j) {
  std::int64_t v = intField(j);
  if (v < 1) bad("expected a positive integer");
  return static_cast<std::size_t>(v);
}

Exponents exponentsField(const Json& j) {
  if (!j.is_array()) bad("expected an exponent array");
  Exponents e;
  for (const auto& v : j) e.push_back(intField(v));
  return e;
}

}  // namespace

Json toJson(const Poly& p) {
  Json monos = Json::array();
  for (const auto& m : p.monomials()) monos.push_back(Json{{"coeff", toString(m.coeff)}, {"exps", m.exps}});
  return Json{{"nvars", p.nVars()}, {"monomials", monos}};
}

Poly polyFromJson(const Json& j) {
  std::size_t n = sizeField(field(j, "nvars"));
  const Json& arr = field(j, "monomials");
  if (!arr.is_array() || arr.empty()) bad("\"monomials\" must be a nonempty array");
  std::vector<Monomial> monos;
  for (const auto& m : arr) {
    Exponents e = exponentsField(field(m, "exps"));
    if (e.size() != n) throw Error(ErrorCode::kDimensionMismatch, "monomial exponent vector length differs from nvars");
    monos.push_back(Monomial{rationalField(field(m, "coeff")), std::move(e)});
  }
  return Poly(n, std::move(monos));
}

Json toJson(const TropRational& r) { return Json{{"num", toJson(r.num)}, {"den", toJson(r.den)}}; }

TropRational rationalFromJson(const Json& j) {
  if (j.is_object() && j.contains("nvars")) return TropRational::fromPoly(polyFromJson(j));
  return TropRational(polyFromJson(field(j, "num")), polyFromJson(field(j, "den")));
}

Json toJson(const GeneratorExpr& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms) terms.push_back(Json{{"coeff", toString(t.coeff)}, {"e_exps", t.eExps}});
  return Json{{"n", g.n}, {"terms", terms}};
}

GeneratorExpr generatorExprFromJson(const Json& j) {
  GeneratorExpr g;
  g.n = sizeField(field(j, "n"));
  const Json& arr = field(j, "terms");
  if (!arr.is_array() || arr.empty()) bad("\"terms\" must be a nonempty array");
  for (const auto& t : arr) {
    Exponents e = exponentsField(field(t, "e_exps"));
    if (e.size() != g.n) throw Error(ErrorCode::kDimensionMismatch, "e_exps length differs from n");
    g.terms.push_back(GeneratorTerm{rationalField(field(t, "coeff")), std::move(e)});
  }
  return g;
}

namespace {

Json gen2Node(const Gen2Expr& g) {
  switch (g.kind()) {
    case Gen2Expr::Kind::kConst: return Json{{"const", toString(g.value())}};
    case Gen2Expr::Kind::kGen: return Json{{"gen", g.orbit()->label()}, {"exp", g.exponent()}};
    case Gen2Expr::Kind::kInv: return Json{{"inv", gen2Node(g.children().front())}};
    case Gen2Expr::Kind::kAdd:
    case Gen2Expr::Kind::kMul: {
      Json arr = Json::array();
      for (const auto& c : g.children()) arr.push_back(gen2Node(c));
      return Json{{g.kind() == Gen2Expr::Kind::kAdd ? "add" : "mul", arr}};
    }
  }
  throw Error(ErrorCode::kInternal, "bad generator expression node");
}

Gen2Expr gen2FromNode(const Json& j, std::size_t n) {
  if (!j.is_object()) bad("expression node must be an object");
  if (j.contains("const")) return Gen2Expr::constant(n, rationalField(j.at("const")));
  if (j.contains("gen")) {
    if (!j.at("gen").is_string()) bad("\"gen\" must be an orbit label");
    std::int64_t k = j.contains("exp") ? intField(j.at("exp")) : 1;
    std::optional<OrbitRep> orbit;
    try {
      orbit = OrbitRep::parse(j.at("gen").get<std::string>(), n);
    } catch (const Error& e) {
      bad(e.what());
    }
    return Gen2Expr::generator(*orbit, k);
  }
  if (j.contains("inv")) return Gen2Expr::inv(gen2FromNode(j.at("inv"), n));
  for (const char* key : {"add", "mul"}) {
    if (!j.contains(key)) continue;
    const Json& arr = j.at(key);
    if (!arr.is_array() || arr.empty()) bad(std::string("\"") + key + "\" must be a nonempty array");
    std::vector<Gen2Expr> kids;
    for (const auto& c : arr) kids.push_back(gen2FromNode(c, n));
    return std::string(key) == "add" ? Gen2Expr::add(std::move(kids)) : Gen2Expr::mul(std::move(kids));
  }
  bad("unknown expression node");
}

}  // namespace

Json toJson(const Gen2Expr& g) { return Json{{"n", g.n()}, {"expr", gen2Node(g)}}; }

Gen2Expr gen2ExprFromJson(const Json& j) { return gen2FromNode(field(j, "expr"), sizeField(field(j, "n"))); }

Json toJson(const Barcode& b) {
  Json arr = Json::array();
  for (const auto& [birth, death] : b.intervals) arr.push_back(Json{{"birth", toString(birth)}, {"death", toString(death)}});
  return Json{{"intervals", arr}};
}

Barcode barcodeFromJson(const Json& j) {
  const Json& arr = field(j, "intervals");
  if (!arr.is_array() || arr.empty()) bad("\"intervals\" must be a nonempty array");
  Barcode b;
  for (const auto& i : arr) b.intervals.emplace_back(rationalField(field(i, "birth")), rationalField(field(i, "death")));
  return b;
}

Json toJson(const Point& x) {
  Json arr = Json::array();
  for (const auto& v : x) arr.push_back(toString(v));
  return arr;
}

Json toJson(const std::map<OrbitRep, Rational>& fingerprint) {
  Json out = Json::object();
  for (const auto& [orbit, value] : fingerprint) out[orbit.label()] = toString(value);
  return out;
}

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace tropsym

// Command-line front end for the tropsym library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tropsym/blocksym.hpp"
#include "tropsym/canon.hpp"
#include "tropsym/error.hpp"
#include "tropsym/expr.hpp"
#include "tropsym/json_io.hpp"
#include "tropsym/sym.hpp"

using namespace tropsym;

namespace {

struct Options {
  std::optional<std::size_t> n;
  bool block = false;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string input;
  std::string output;
  bool count = false;
  std::int64_t maxDegree = 64;
  std::vector<std::string> args;
  std::string at;
  std::int64_t d = 2;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looksLikeJson(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// Positional arguments, or the --input file as the sole argument.
std::vector<std::string> operands(const Options& o, std::size_t expected) {
  std::vector<std::string> out = o.args;
  if (!o.input.empty()) out.insert(out.begin(), readFile(o.input));
  if (out.size() != expected) {
    throw Error(ErrorCode::kSyntax, "expected " + std::to_string(expected) + " operand(s), got " +
                                        std::to_string(out.size()));
  }
  return out;
}

VariableSpace space(const Options& o) { return VariableSpace{o.n, o.block}; }

TropRational readRational(const std::string& text, const Options& o) {
  if (looksLikeJson(text)) return rationalFromJson(parseJson(text));
  ParsedExpr e = parseExpr(text, space(o));
  return normalizeToRational(e.ast, e.nVars);
}

// Accepts any rational expression whose denominator is a single monomial.
Poly readPolynomial(const std::string& text, const Options& o) {
  TropRational r = readRational(text, o);
  Poly den = minimalRepresentation(r.den);
  if (den.size() != 1) throw Error(ErrorCode::kInvalidArgument, "expression is not a (Laurent) polynomial");
  Exponents inv = den[0].exps;
  for (auto& v : inv) v = -v;
  return mulMonomial(r.num, -den[0].coeff, inv);
}

// Aligns two operands that were parsed with inferred variable counts.
std::pair<TropRational, TropRational> readPair(const std::vector<std::string>& ops, Options o) {
  if (!o.n) {
    ParsedExpr a = looksLikeJson(ops[0]) ? ParsedExpr{Expr::constant(0), 0} : parseExpr(ops[0], space(o));
    ParsedExpr b = looksLikeJson(ops[1]) ? ParsedExpr{Expr::constant(0), 0} : parseExpr(ops[1], space(o));
    std::size_t nv = std::max(a.nVars, b.nVars);
    if (nv > 0) o.n = o.block ? nv / 2 : nv;
  }
  return {readRational(ops[0], o), readRational(ops[1], o)};
}

Point readPoint(const std::string& text) {
  Point x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    x.push_back(parseRational(t));
  }
  if (x.empty()) throw Error(ErrorCode::kSyntax, "empty point");
  return x;
}

struct Output {
  Json json;
  std::string text;
};

Output cmdEval(const Options& o) {
  auto ops = operands(o, 1);
  if (o.at.empty()) throw Error(ErrorCode::kSyntax, "eval needs --at with a comma-separated point");
  std::vector<std::string> parts;
  {
    std::stringstream ss(o.at);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
  }
  bool anyInf = false;
  for (auto& p : parts) {
    p.erase(std::remove_if(p.begin(), p.end(), [](unsigned char c) { return std::isspace(c); }), p.end());
    anyInf = anyInf || p == "inf" || p == "INF";
  }
  Options sized = o;
  if (!sized.n) sized.n = o.block ? parts.size() / 2 : parts.size();
  TropRational r = readRational(ops[0], sized);
  if (parts.size() != r.nVars()) throw Error(ErrorCode::kDimensionMismatch, "point length differs from the number of variables");
  TropScalar value;
  if (anyInf) {
    std::vector<TropScalar> x;
    for (const auto& p : parts) x.push_back(p == "inf" || p == "INF" ? TropScalar::inf() : TropScalar(parseRational(p)));
    Poly den = minimalRepresentation(r.den);
    TropScalar top = evalPoly(r.num, x);
    TropScalar bottom = evalPoly(den, x);
    value = tropMul(top, tropInv(bottom));
  } else {
    Point x;
    for (const auto& p : parts) x.push_back(parseRational(p));
    value = r.evaluate(x);
  }
  return {Json{{"value", toString(value)}}, toString(value)};
}

Output cmdCanon(const Options& o) {
  TropRational r = canonicalize(readRational(operands(o, 1)[0], o));
  return {toJson(r), toString(r, o.block)};
}

Output cmdEquiv(const Options& o) {
  auto ops = operands(o, 2);
  auto [a, b] = readPair(ops, o);
  EquivResult eq = rationalEquiv(a, b);
  Json j{{"equivalent", eq.equivalent}};
  std::string text = eq.equivalent ? "equivalent" : "not equivalent";
  if (eq.witness) {
    j["witness"] = toJson(*eq.witness);
    j["left"] = toString(a.evaluate(*eq.witness));
    j["right"] = toString(b.evaluate(*eq.witness));
    text += " at " + j["witness"].dump();
  }
  return {j, text};
}

Output cmdSym(const Options& o, bool block) {
  Poly p = readPolynomial(operands(o, 1)[0], o);
  Poly s = minimalRepresentation(block ? symmetrize2(p) : symmetrize(p));
  return {toJson(s), toString(s, block || o.block)};
}

Output cmdDecompose(const Options& o) {
  TropRational r = readRational(operands(o, 1)[0], o);
  Poly den = minimalRepresentation(r.den);
  if (den.size() == 1) {
    Exponents inv = den[0].exps;
    for (auto& v : inv) v = -v;
    GeneratorExpr g = decomposeSymmetric(mulMonomial(r.num, -den[0].coeff, inv));
    return {toJson(g), toString(g)};
  }
  auto [num, dnm] = decomposeSymmetricRational(r);
  return {Json{{"num", toJson(num)}, {"den", toJson(dnm)}},
          "(" + toString(num) + ") ⊙ (" + toString(dnm) + ")^-1"};
}

Output cmdDecompose2(const Options& o) {
  Options blockOpts = o;
  blockOpts.block = true;
  TropRational r = readRational(operands(blockOpts, 1)[0], blockOpts);
  Decompose2Options opts;
  opts.maxDegree = o.maxDegree;
  Decompose2Stats stats;
  Gen2Expr g = decompose2SymmetricRational(r, opts, &stats);
  Json j = toJson(g);
  j["text"] = toString(g);
  j["stats"] = Json{{"recursive_calls", stats.recursiveCalls},
                    {"max_depth", stats.maxDepth},
                    {"strict_descent", stats.strictDescent},
                    {"inductive_steps", stats.inductiveSteps},
                    {"cover_steps", stats.coverSteps}};
  return {j, toString(g)};
}

Output cmdOrbits(const Options& o) {
  if (!o.n) throw Error(ErrorCode::kSyntax, "orbits needs --n");
  auto orbits = enumerateOrbits(*o.n);
  if (o.count) return {Json(orbits.size()), std::to_string(orbits.size())};
  Json arr = Json::array();
  std::string text;
  for (const auto& orb : orbits) {
    arr.push_back(orb.label());
    text += orb.label() + " = " + toString(elementary2(orb), true) + "\n";
  }
  if (!text.empty()) text.pop_back();
  return {Json{{"n", *o.n}, {"orbits", arr}}, text};
}

Output cmdFingerprint(const Options& o) {
  Point x = readPoint(operands(o, 1)[0]);
  if (o.block) {
    if (x.size() % 2 != 0) throw Error(ErrorCode::kDimensionMismatch, "block point needs an even number of coordinates");
    Barcode b;
    for (std::size_t i = 0; i < x.size(); i += 2) b.intervals.emplace_back(x[i], x[i + 1]);
    Json j = toJson(orbitFingerprint2(b));
    return {j, j.dump()};
  }
  Json j = toJson(orbitFingerprint(x));
  return {j, j.dump()};
}

Output cmdBarcode(const Options& o) {
  Barcode b = barcodeFromJson(parseJson(operands(o, 1)[0]));
  Json j = toJson(orbitFingerprint2(b));
  std::string text;
  for (const auto& [k, v] : j.items()) text += k + " " + v.get<std::string>() + "\n";
  if (!text.empty()) text.pop_back();
  return {j, text};
}

Output cmdWitness(const Options& o) {
  NonGenerationWitness w = nonGenerationWitness(o.d);
  Json entries = Json::array();
  std::string text;
  for (const auto& e : w.entries) {
    entries.push_back(Json{{"a", e.a},
                           {"point", toJson(e.point)},
                           {"min_value", toString(e.minValue)},
                           {"cross_term", toString(e.crossTerm)},
                           {"polynomial", toString(e.polynomial)}});
    text += "a=" + std::to_string(e.a) + " point=" + toJson(e.point).dump() + " min=" + toString(e.minValue) + "\n";
  }
  Json j{{"d", w.d},
         {"entries", entries},
         {"essential", {w.essential[0].essential, w.essential[1].essential}},
         {"minimal", w.minimal}};
  text += std::string("minimal: ") + (w.minimal ? "yes" : "no");
  return {j, text};
}

int emitError(const Error& e) {
  Json j{{"error", {{"code", errorCodeName(e.code())}, {"message", e.what()}}}};
  std::cerr << j.dump() << "\n";
  bool parse = e.code() == ErrorCode::kSyntax || e.code() == ErrorCode::kUnknownVariable;
  return parse ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact min-plus polynomial algebra: canonical forms, symmetrization, decompositions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of variables (blocks with --block)");
    sub->add_flag("--block", o.block, "use 2n block variables x[i,j]");
    sub->add_option("--seed", o.seed, "seed for randomized sub-steps (all current commands are deterministic)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--input", o.input, "read the first operand from this file");
    sub->add_option("--output", o.output, "write the result to this file");
  };

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    subs[name] = s;
    return s;
  };
  add("eval", "evaluate an expression at --at")->add_option("--at", o.at, "comma-separated point; 'inf' allowed");
  subs["eval"]->add_option("expr", o.args);
  add("canon", "canonical (minimal) numerator and denominator")->add_option("expr", o.args);
  add("equiv", "decide functional equivalence")->add_option("exprs", o.args);
  add("sym", "symmetrize a polynomial (blocks with --block)")->add_option("expr", o.args);
  add("decompose", "write a symmetric function in e1..en")->add_option("expr", o.args);
  add("sym2", "block-symmetrize a polynomial over x[i,j]")->add_option("expr", o.args);
  add("decompose2", "write a 2-symmetric function in elementary 2-symmetric generators")->add_option("expr", o.args);
  subs["decompose2"]->add_option("--max-degree", o.maxDegree, "largest exponent allowed in intermediate steps");
  add("orbits", "list the orbits of nonzero {0,1} n x 2 matrices")->add_flag("--count", o.count, "print only the count");
  add("fingerprint", "elementary symmetric coordinates of a point")->add_option("point", o.args);
  add("barcode-features", "elementary 2-symmetric coordinates of a barcode JSON")->add_option("barcode", o.args);
  add("witness", "witness points for the non-finite-generation inequality")->add_option("--d", o.d, "degree d >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string cmd = app.get_subcommands().front()->get_name();
    Output out;
    if (cmd == "eval") out = cmdEval(o);
    else if (cmd == "canon") out = cmdCanon(o);
    else if (cmd == "equiv") out = cmdEquiv(o);
    else if (cmd == "sym") out = cmdSym(o, o.block);
    else if (cmd == "sym2") {
      Options b = o;
      b.block = true;
      out = cmdSym(b, true);
    } else if (cmd == "decompose") out = cmdDecompose(o);
    else if (cmd == "decompose2") out = cmdDecompose2(o);
    else if (cmd == "orbits") out = cmdOrbits(o);
    else if (cmd == "fingerprint") out = cmdFingerprint(o);
    else if (cmd == "barcode-features") out = cmdBarcode(o);
    else out = cmdWitness(o);

    std::string payload = (o.format == "text" ? out.text : out.json.dump()) + "\n";
    if (o.output.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write output file " + o.output);
      f << payload;
    }
    return 0;
  } catch (const Error& e) {
    return emitError(e);
  } catch (const std::exception& e) {
    return emitError(Error(ErrorCode::kInternal, e.what()));
  }
}

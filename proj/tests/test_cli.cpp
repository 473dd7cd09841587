#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropsym/canon.hpp"
#include "tropsym/json_io.hpp"

using namespace tropsym;

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratchDir() {
  auto dir = std::filesystem::temp_directory_path() / ("tropsym_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run(const std::vector<std::string>& args) {
  auto errPath = scratchDir() / "stderr.txt";
  std::string cmd = quote(TROPSYM_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(errPath.string());
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = ::pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(errPath);
  return r;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, EquivExample) {
  RunResult r = run({"equiv", "min(x1+x1,x2+x2)", "min(x1+x1,x2+x2,x1+x2)", "--n", "2"});
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_EQ(parseJson(r.out), parseJson(R"({"equivalent": true})"));

  RunResult no = run({"equiv", "min(x1+x1,x2+x2)", "min(x1+x1,x2)", "--n", "2"});
  EXPECT_EQ(no.exitCode, 0);
  Json j = parseJson(no.out);
  EXPECT_FALSE(j.at("equivalent").get<bool>());
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Cli, OrbitCount) {
  RunResult r = run({"orbits", "--n", "2", "--count"});
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_EQ(trimmed(r.out), "9");
  RunResult list = run({"orbits", "--n", "1"});
  EXPECT_EQ(parseJson(list.out).at("orbits").size(), 3u);
}

TEST(Cli, CanonNestedQuotient) {
  RunResult r = run({"canon", "--n", "2", "min(-x1 + x2, -x2, -min(x2 + x1, x1))"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  TropRational got = rationalFromJson(parseJson(r.out));
  EXPECT_EQ(minimalRepresentation(got.num), got.num);
  EXPECT_EQ(minimalRepresentation(got.den), got.den);
  TropRational common(Poly(2, {Monomial{0, {0, 3}}, Monomial{0, {0, 2}}, Monomial{0, {1, 1}}, Monomial{0, {1, 0}},
                               Monomial{0, {0, 1}}}),
                      Poly(2, {Monomial{0, {1, 2}}, Monomial{0, {1, 1}}}));
  EXPECT_TRUE(rationalEquiv(got, common).equivalent);
}

TEST(Cli, EvalAndText) {
  RunResult r = run({"eval", "--n", "2", "--at", "1,2", "min(x1+x1, x2)"});
  EXPECT_EQ(parseJson(r.out).at("value"), "2");
  RunResult inf = run({"eval", "--n", "2", "--at", "inf,2", "min(x1, x2)"});
  EXPECT_EQ(parseJson(inf.out).at("value"), "2");
  RunResult text = run({"decompose", "--n", "2", "--format", "text", "min(x1+x1+x2, x1+x2+x2)"});
  EXPECT_EQ(trimmed(text.out), "e1 ⊙ e2");
}

TEST(Cli, BlockCommands) {
  RunResult s = run({"sym2", "--n", "2", "x[1,1] + x[2,2]"});
  ASSERT_EQ(s.exitCode, 0) << s.err;
  EXPECT_EQ(polyFromJson(parseJson(s.out)).size(), 2u);

  RunResult d = run({"decompose2", "--n", "2", "min(x[1,1] + x[1,1] + x[1,2], x[2,1] + x[2,1] + x[2,2])"});
  ASSERT_EQ(d.exitCode, 0) << d.err;
  Json j = parseJson(d.out);
  Gen2Expr g = gen2ExprFromJson(Json{{"n", j.at("n")}, {"expr", j.at("expr")}});
  Poly target(4, {Monomial{0, {2, 1, 0, 0}}, Monomial{0, {0, 0, 2, 1}}});
  EXPECT_TRUE(rationalEquiv(expand(g), TropRational::fromPoly(target)).equivalent);
  EXPECT_TRUE(j.at("stats").at("strict_descent").get<bool>());

  auto dir = scratchDir();
  std::ofstream(dir / "bars.json") << R"({"intervals":[{"birth":"0","death":"1"},{"birth":"2","death":"3"}]})";
  RunResult f = run({"barcode-features", "--input", (dir / "bars.json").string()});
  ASSERT_EQ(f.exitCode, 0) << f.err;
  EXPECT_EQ(parseJson(f.out).at("[(1,1)]"), "1");

  RunResult w = run({"witness", "--d", "3"});
  ASSERT_EQ(w.exitCode, 0) << w.err;
  EXPECT_EQ(parseJson(w.out).at("entries").size(), 3u);
}

TEST(Cli, ErrorsAndExitCodes) {
  RunResult syntax = run({"canon", "--n", "2", "min(x1,, x2)"});
  EXPECT_EQ(syntax.exitCode, 2);
  Json e = parseJson(syntax.err);
  EXPECT_EQ(e.at("error").at("code"), "syntax_error");
  EXPECT_TRUE(syntax.out.empty());

  RunResult unknown = run({"canon", "--n", "2", "x3"});
  EXPECT_EQ(unknown.exitCode, 2);
  EXPECT_EQ(parseJson(unknown.err).at("error").at("code"), "unknown_variable");

  RunResult notSym = run({"decompose", "--n", "2", "min(x1 + x1, x2)"});
  EXPECT_EQ(notSym.exitCode, 1);
  EXPECT_EQ(parseJson(notSym.err).at("error").at("code"), "not_symmetric");

  RunResult notSym2 = run({"decompose2", "--n", "2", "x[1,1]"});
  EXPECT_EQ(notSym2.exitCode, 1);

  RunResult capped = run({"decompose2", "--n", "2", "--max-degree", "1", "min(x[1,1] + x[1,1], x[2,1] + x[2,1])"});
  EXPECT_EQ(capped.exitCode, 1);
  EXPECT_EQ(parseJson(capped.err).at("error").at("code"), "resource_cap");

  RunResult badFlag = run({"canon", "--bogus"});
  EXPECT_EQ(badFlag.exitCode, 2);

  RunResult mismatch = run({"equiv", "x1", "{\"nvars\":3,\"monomials\":[{\"coeff\":\"0\",\"exps\":[1,0,0]}]}"});
  EXPECT_EQ(mismatch.exitCode, 1);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> cmds{
      {"canon", "--n", "3", "--seed", "7", "min(x1 + x2, x3, x1 + x1, -x2)"},
      {"decompose2", "--n", "2", "--seed", "7", "min(x[1,1] + x[1,2] + x[1,2], x[2,1] + x[2,2] + x[2,2])"},
      {"equiv", "--n", "2", "--seed", "7", "min(x1, x2)", "min(x1, x2 + 1)"},
  };
  for (const auto& c : cmds) {
    RunResult a = run(c), b = run(c);
    EXPECT_EQ(a.exitCode, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, EmitReingestIsByteIdentical) {
  auto dir = scratchDir();
  RunResult first = run({"canon", "--n", "2", "--output", (dir / "a.json").string(), "min(-x1 + x2, -x2, -min(x2 + x1, x1))"});
  ASSERT_EQ(first.exitCode, 0) << first.err;
  std::string a = slurp(dir / "a.json");
  RunResult second = run({"canon", "--input", (dir / "a.json").string(), "--output", (dir / "b.json").string()});
  ASSERT_EQ(second.exitCode, 0) << second.err;
  EXPECT_EQ(slurp(dir / "b.json"), a);

  RunResult sym = run({"sym", "--n", "3", "x1 + x1 + x2"});
  std::ofstream(dir / "s.json") << sym.out;
  RunResult sym2 = run({"sym", "--input", (dir / "s.json").string()});
  EXPECT_EQ(sym2.out, sym.out);

  RunResult dec = run({"decompose2", "--n", "2", "min(x[1,1] + x[2,2], x[2,1] + x[1,2])"});
  Json d = parseJson(dec.out);
  Json doc{{"n", d.at("n")}, {"expr", d.at("expr")}};
  EXPECT_EQ(toJson(gen2ExprFromJson(doc)).dump(), doc.dump());
  std::filesystem::remove_all(dir);
}

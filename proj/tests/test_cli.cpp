#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "lgschub/cli.hpp"

using namespace lgschub;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

Json RunJson(std::vector<std::string> args) {
  auto r = Invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, RestrictLatex) {
  auto r = Invoke({"restrict", "--n", "2", "--lambda", "2,1", "--mu", "2,1", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4x_1x_2(x_1+x_2)\n");
}

TEST(Cli, RestrictJsonRoundTrips) {
  auto j = RunJson({"restrict", "--n", "3", "--lambda", "2", "--mu", "3,1"});
  EXPECT_EQ(j["schema"], "lgschub/1");
  Poly p = poly_from_json(j["value"]);
  EXPECT_EQ(p, restrict(StrictPartition(3, {2}), StrictPartition(3, {3, 1})));
  EXPECT_EQ(parse_poly(j["value"]["text"].get<std::string>()), p);
}

TEST(Cli, RecurrenceCheckPasses) {
  auto r = Invoke({"check", "--suite", "recurrence", "--n", "3", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Cli, BijectionExample) {
  auto j = RunJson({"bijection", "--n", "5", "--perm", "1,3,4,6,9"});
  EXPECT_EQ(j["diagram"], Json::parse("[5,4,4,3,1]"));
  EXPECT_EQ(j["strict"], Json::parse("[5,3,2]"));
  EXPECT_EQ(j["mask"], Json::parse("[1,0,1,1,0]"));
  EXPECT_EQ(j["schema"], "lgschub/1");
  auto back = RunJson({"bijection", "--n", "5", "--strict", "5,3,2"});
  EXPECT_EQ(back["perm"], Json::parse("[1,3,4,6,9]"));
  auto m = RunJson({"bijection", "--n", "5", "--mask", "1,0,1,1,0"});
  EXPECT_EQ(m["strict"], Json::parse("[5,3,2]"));
  auto d = RunJson({"bijection", "--n", "5", "--diagram", "5,4,4,3,1"});
  EXPECT_EQ(d["perm"], Json::parse("[1,3,4,6,9]"));
}

TEST(Cli, MultiplyDivisorSquare) {
  auto r = Invoke({"multiply", "--n", "2", "--w", "1", "--v", "1", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\\sigma(1)\\sigma(1) = 2x_2\\sigma(1) + 2\\sigma(2)\n");
  auto j = RunJson({"multiply", "--n", "2", "--w", "1", "--v", "1"});
  ASSERT_EQ(j["products"].size(), 2u);
  EXPECT_EQ(poly_from_json(j["products"][0]["coeff"]), Poly::x(2) * 2);
  EXPECT_EQ(poly_from_json(j["products"][1]["coeff"]), Poly(2));
  auto c = Invoke({"multiply", "--n", "2", "--w", "1", "--v", "1", "--format", "csv"});
  EXPECT_EQ(c.out, "w,v,u,coeff\n(1),(1),(1),2*x2\n(1),(1),(2),2\n");
}

TEST(Cli, TableFormats) {
  auto j = RunJson({"table", "--n", "2"});
  ASSERT_EQ(j["index"].size(), 4u);
  auto t = RestrictionTable::build(2);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) EXPECT_EQ(poly_from_json(j["entries"][l][m]), t.at(l, m));
  auto csv = Invoke({"table", "--n", "2", "--format", "csv"});
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 17);
  auto tex = Invoke({"table", "--n", "1", "--format", "latex"});
  EXPECT_NE(tex.out.find("\\begin{array}"), std::string::npos);
}

TEST(Cli, QfunGiambelliPresent) {
  auto q = RunJson({"qfun", "--n", "2", "--lambda", "2,1"});
  EXPECT_EQ(poly_from_json(q["value"]), factorial_Q(std::vector<int>{2, 1}, QContext{2}));
  auto qc = RunJson({"qfun", "--n", "1", "--lambda", "3", "--classical"});
  EXPECT_EQ(qc["value"]["text"], "2*x1^3");
  auto g = RunJson({"giambelli", "--n", "3", "--lambda", "3,2,1"});
  EXPECT_TRUE(g["holds"].get<bool>());
  auto p = Invoke({"present", "--n", "2", "--normal-form", "X1*X1", "--format", "latex"});
  EXPECT_EQ(p.out, "X1*X1 = 2*X2 + 2*x2*X1\n");
  auto rel = RunJson({"present", "--n", "2", "--relations"});
  EXPECT_EQ(rel["results"][0]["value"]["text"], "X1^2 - 2*X2 - 2*x2*X1");
}

TEST(Cli, UsageErrorsExit2) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"table"}).code, 2);
  EXPECT_EQ(Invoke({"table", "--n", "9"}).code, 2);
  EXPECT_EQ(Invoke({"table", "--n", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(Invoke({"restrict", "--n", "2", "--lambda", "1,2", "--mu", "1"}).code, 2);
  EXPECT_EQ(Invoke({"restrict", "--n", "2", "--lambda", "3", "--mu", "1"}).code, 2);
  EXPECT_EQ(Invoke({"bijection", "--n", "2"}).code, 2);
  EXPECT_EQ(Invoke({"bijection", "--n", "2", "--perm", "1,3", "--strict", "2"}).code, 2);
  EXPECT_EQ(Invoke({"present", "--n", "2", "--normal-form", "X1 +"}).code, 2);
  EXPECT_EQ(Invoke({"check", "--suite", "nope", "--n", "2"}).code, 2);
  EXPECT_EQ(Invoke({"check", "--suite", "pieri", "--n", "2", "--points", "0"}).code, 2);
}

TEST(Cli, WarnsAboveSix) {
  auto r = Invoke({"bijection", "--n", "7", "--strict", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_TRUE(Invoke({"bijection", "--n", "6", "--strict", "6"}).err.empty());
}

TEST(Cli, IdenticalArgsIdenticalOutput) {
  std::vector<std::string> args = {"check", "--suite", "oracle", "--n", "3", "--seed", "11", "--points", "3"};
  auto a = Invoke(args), b = Invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = Invoke({"check", "--suite", "oracle", "--n", "3", "--seed", "11", "--points", "3", "--parallelism", "3"});
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, EnvironmentOverrides) {
  ::setenv("LGSCHUB_SEED", "99", 1);
  auto j = RunJson({"check", "--suite", "recurrence", "--n", "2", "--points", "2"});
  EXPECT_EQ(j["seed"], 99);
  auto flag = RunJson({"check", "--suite", "recurrence", "--n", "2", "--points", "2", "--seed", "5"});
  EXPECT_EQ(flag["seed"], 5);
  ::setenv("LGSCHUB_SEED", "banana", 1);
  EXPECT_EQ(Invoke({"check", "--suite", "recurrence", "--n", "2"}).code, 2);
  ::unsetenv("LGSCHUB_SEED");
  std::string serial = Invoke({"table", "--n", "3"}).out;
  ::setenv("LGSCHUB_PARALLELISM", "4", 1);
  EXPECT_EQ(Invoke({"table", "--n", "3"}).out, serial);
  ::setenv("LGSCHUB_PARALLELISM", "x", 1);
  EXPECT_EQ(Invoke({"table", "--n", "3"}).code, 2);
  ::unsetenv("LGSCHUB_PARALLELISM");
}

TEST(Cli, CheckCsvAndLatex) {
  auto r = Invoke({"check", "--suite", "square", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("suite,n,instances,passed\n", 0), 0u);
  EXPECT_EQ(Invoke({"check", "--suite", "square", "--n", "2", "--format", "latex"}).code, 2);
}

#include <gtest/gtest.h>

#include <random>

#include "lgschub/exactpoly.hpp"

using namespace lgschub;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly random_poly(std::mt19937& rng, int vars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-9, 9), var(1, vars), deg(0, maxdeg);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly m = coeff(rng);
    for (int d = deg(rng); d > 0; --d) m *= (var(rng) % 2) ? Poly::x(var(rng)) : Poly::a(var(rng) + 1);
    p += m;
  }
  return p;
}

}  // namespace

TEST(Ring, Examples) {
  EXPECT_EQ((P("x1 + x2") * P("x1 - x2")), P("x1^2 - x2^2"));
  Poly p = P("3*x1*a2 - 7");
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_TRUE((p + (-p)).terms().empty());
  EXPECT_EQ(P("2*x1") * P("2*x3"), P("4*x1*x3"));
  EXPECT_EQ(to_string(P("4*x1*x3")), "4*x1*x3");
}

TEST(Ring, CanonicalOrderAndPrinting) {
  Poly p = P("x2 + x1^2 + a2*x1 + 3");
  EXPECT_EQ(to_string(p), "x1^2 + x1*a2 + x2 + 3");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous(2));
  EXPECT_TRUE(P("x1^2 - x1*x2").is_homogeneous(2));
  EXPECT_EQ(to_string(Poly{}), "0");
  EXPECT_TRUE(Poly::a(1).is_zero());
}

TEST(Ring, Axioms) {
  std::mt19937 rng(1);
  for (int i = 0; i < 60; ++i) {
    Poly a = random_poly(rng, 3, 5, 3), b = random_poly(rng, 3, 5, 3), c = random_poly(rng, 3, 4, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(P("4*x1*x2*(x1+x2)"), P("2*x2")), P("2*x1*(x1+x2)"));
  EXPECT_TRUE(exact_div(Poly{}, P("x1 + 1")).is_zero());
  EXPECT_EQ(exact_div(P("x1^2 - x2^2"), P("x1 + x2")), P("x1 - x2"));
}

TEST(ExactDiv, Errors) {
  EXPECT_THROW(exact_div(P("x1^2 + 1"), P("x1 + 1")), NotDivisible);
  EXPECT_THROW(exact_div(P("3*x1"), P("2")), NotDivisible);
  EXPECT_THROW(exact_div(P("x1"), Poly{}), std::exception);
}

TEST(ExactDiv, RandomProducts) {
  std::mt19937 rng(2);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(rng, 3, 5, 3), q = random_poly(rng, 3, 4, 2);
    if (q.is_zero()) continue;
    EXPECT_EQ(exact_div(p * q, q), p);
  }
}

TEST(Substitute, Examples) {
  Substitution s1;
  s1.set(VarId::x(2), Poly{});
  EXPECT_EQ(substitute(P("2*x1 + 2*x2"), s1), P("2*x1"));
  Substitution s2;
  s2.set(VarId::a(2), Poly::x(2));
  EXPECT_EQ(substitute(P("a2*x1"), s2), P("x1*x2"));
  Substitution s3;
  s3.set(VarId::a(3), Poly::x(1));
  EXPECT_EQ(substitute(P("x1 + a3"), s3), P("2*x1"));
}

TEST(Substitute, SimultaneousNotSequential) {
  Substitution s;
  s.set(VarId::x(1), Poly::x(2));
  s.set(VarId::x(2), Poly::x(1));
  EXPECT_EQ(substitute(P("x1^2*x2"), s), P("x2^2*x1"));
}

TEST(Substitute, CommutesWithEvaluation) {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    Poly p = random_poly(rng, 3, 5, 3);
    Substitution s;
    s.set(VarId::x(1), random_poly(rng, 2, 2, 2));
    s.set(VarId::a(3), random_poly(rng, 2, 2, 1));
    Point pt;
    for (int v = 1; v <= 3; ++v) pt.set(VarId::x(v), Rat(int(rng() % 19) - 9, int(rng() % 7) + 1));
    for (int v = 2; v <= 4; ++v) pt.set(VarId::a(v), Rat(int(rng() % 19) - 9, int(rng() % 7) + 1));
    Point composed = pt;
    composed.set(VarId::x(1), eval_at(*s.image(VarId::x(1)), pt));
    composed.set(VarId::a(3), eval_at(*s.image(VarId::a(3)), pt));
    EXPECT_EQ(eval_at(substitute(p, s), pt), eval_at(p, composed));
  }
}

TEST(Eval, Examples) {
  Point pt;
  pt.set(VarId::x(1), Rat(3, 2));
  EXPECT_EQ(eval_at(P("x1^2"), pt), Rat(9, 4));
  EXPECT_EQ(eval_at(Poly(1), Point{}), Rat(1));
  Point q;
  q.set(VarId::x(1), 5).set(VarId::x(2), 5);
  EXPECT_EQ(eval_at(P("x1 - x2"), q), Rat(0));
}

TEST(Symmetric, Examples) {
  auto a23 = a_range(2, 3);
  EXPECT_EQ(sym_e(2, a23), P("a2*a3"));
  EXPECT_EQ(sym_h(2, a_range(2, 2)), P("a2^2"));
  EXPECT_EQ(sym_m(std::vector<int>{2, 1}, 2), P("x1^2*x2 + x1*x2^2"));
  std::vector<Poly> none;
  EXPECT_EQ(sym_e(0, none), Poly(1));
  EXPECT_TRUE(sym_h(3, none).is_zero());
  EXPECT_TRUE(sym_m(std::vector<int>{1, 1, 1}, 2).is_zero());
}

TEST(Symmetric, ElementaryCompleteDuality) {
  for (int len = 1; len <= 4; ++len) {
    auto vars = a_range(2, len + 1);
    for (int k = 1; k <= 5; ++k) {
      Poly s;
      for (int i = 0; i <= k; ++i) {
        Poly t = sym_e(i, vars) * sym_h(k - i, vars);
        s += (i % 2) ? -t : t;
      }
      EXPECT_TRUE(s.is_zero()) << "len=" << len << " k=" << k;
    }
  }
}

TEST(Serialization, JsonRoundTrip) {
  std::mt19937 rng(4);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(rng, 3, 6, 4) * Poly(Integer("123456789012345678901234567890"));
    auto j = to_json(p);
    EXPECT_EQ(poly_from_json(nlohmann::ordered_json::parse(j.dump())), p);
    EXPECT_EQ(parse_poly(to_string(p)), p);
  }
  auto j = to_json(P("2*x1 - a2"));
  EXPECT_EQ(j["vars"], nlohmann::ordered_json::parse(R"(["x1","a2"])"));
  EXPECT_EQ(j["terms"][0]["coeff"], "2");
}

TEST(Serialization, Latex) {
  EXPECT_EQ(to_latex(P("4*x1*x2*(x1+x2)")), "4x_1x_2(x_1+x_2)");
  EXPECT_EQ(to_latex(P("2*x1")), "2x_1");
  EXPECT_EQ(to_latex(Poly{}), "0");
}

TEST(Variables, ParseAndLimits) {
  EXPECT_EQ(parse_var("x3"), VarId::x(3));
  EXPECT_EQ(parse_var("a2"), VarId::a(2));
  EXPECT_THROW(parse_var("y1"), std::invalid_argument);
  EXPECT_THROW(parse_poly("x1 +"), std::invalid_argument);
  EXPECT_THROW(Poly::x(Monomial::kMaxX + 1), std::exception);
}

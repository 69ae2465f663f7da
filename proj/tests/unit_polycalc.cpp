#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holab/polycalc.hpp"

using namespace holab;

static const std::vector<std::string> V = {"x", "y", "z"};

TEST_CASE("parse and print") {
  auto p = parse_poly("(x+y)^2 - 2*x*y", V);
  CHECK(p.str(V) == "x^2 + y^2");
  auto r = parse_ratfunc("x/(x*y)", V);
  CHECK(r.str(V) == "(1)/(y)");
  CHECK(parse_ratfunc("1.5*z", V).str(V) == "3/2*z");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_ratfunc("x +* y", V), doctest::Contains("SYNTAX_ERROR"), Error);
  CHECK_THROWS_WITH_AS(parse_ratfunc("x + w", V), doctest::Contains("UNKNOWN_VARIABLE"), Error);
  CHECK_THROWS_WITH_AS(parse_ratfunc("x/(y-y)", V), doctest::Contains("DIVIDE_BY_ZERO_POLY"), Error);
  CHECK_THROWS_WITH_AS(parse_ratfunc("x^65", V), doctest::Contains("DEGREE_OVERFLOW"), Error);
}

TEST_CASE("rational function arithmetic") {
  auto a = parse_ratfunc("1/(1+x^2)", V);
  auto b = parse_ratfunc("x^2/(1+x^2)", V);
  CHECK((a + b) == RatFunc::constant(3, 1));
  CHECK((a + b).is_constant());
  auto d = a.deriv(0);
  CHECK(d == parse_ratfunc("-2*x/(1+x^2)^2", V));
  CHECK(d.eval({Q(1), Q(0), Q(0)}) == Q(-1, 2));
  CHECK_THROWS_AS(parse_ratfunc("1/x", V).eval({Q(0), Q(0), Q(0)}), Error);
}

TEST_CASE("exact division and shift") {
  auto a = parse_poly("x^3 - y^3", V);
  auto b = parse_poly("x - y", V);
  Poly q;
  REQUIRE(Poly::divexact(a, b, &q));
  CHECK(q == parse_poly("x^2 + x*y + y^2", V));
  CHECK_FALSE(Poly::divexact(a, parse_poly("x + y", V), nullptr));
  auto s = parse_poly("x*y", V).shifted({Q(1), Q(2), Q(0)});
  CHECK(s == parse_poly("(x+1)*(y+2)", V));
}

TEST_CASE("jets agree with derivatives") {
  auto f = parse_ratfunc("(1 + x*z)/(2 + y^2 + x)", V);
  std::vector<Q> p = {Q(1, 3), Q(-1, 2), Q(2)};
  auto j = Jet::of(f, p, 3);
  CHECK(j.value() == f.eval(p));
  CHECK(j.deriv(0).value() == f.deriv(0).eval(p));
  CHECK(j.deriv(1).deriv(2).value() == f.deriv(1).deriv(2).eval(p));
  CHECK(j.deriv(0).deriv(1).deriv(1).value() == f.deriv(0).deriv(1).deriv(1).eval(p));
  auto g = Jet::of(parse_ratfunc("x*y", V), p, 3);
  CHECK((j * g).deriv(0).value() == (f * parse_ratfunc("x*y", V)).deriv(0).eval(p));
  CHECK((g / j).deriv(2).value() == (parse_ratfunc("x*y", V) / f).deriv(2).eval(p));
}

TEST_CASE("vector field bracket") {
  // X = d/dx + y d/dz, Y = d/dy - x d/dz: [X,Y] = -2 d/dz
  VField X = {RatFunc::constant(3, 1), RatFunc(3), parse_ratfunc("y", V)};
  VField Y = {RatFunc(3), RatFunc::constant(3, 1), parse_ratfunc("-x", V)};
  auto Z = lie_bracket(X, Y);
  CHECK(Z[0].is_zero());
  CHECK(Z[2] == RatFunc::constant(3, -2));
}

TEST_CASE("normalisation is integral with joint content one") {
  auto r = parse_ratfunc("(x/2)/(3*y/4)", V);
  CHECK(r.num() == parse_poly("2*x", V));
  CHECK(r.den() == parse_poly("3*y", V));
  auto s = parse_ratfunc("x/(-y)", V);
  CHECK(s.den() == parse_poly("y", V));
  CHECK(parse_ratfunc("(1+z)^2/(2 - z)", V).den() == parse_poly("z - 2", V));
  CHECK(parse_ratfunc("x*y - y*x", V).is_zero());
}

TEST_CASE("exterior derivative and lie derivative") {
  // theta = dz + x dy - y dx  ->  d theta = 2 dx^dy
  OneForm th = {parse_ratfunc("-y", V), parse_ratfunc("x", V), RatFunc::constant(3, 1)};
  auto d = exterior_d(th);
  CHECK(d.at(0, 1) == RatFunc::constant(3, 2));
  CHECK(d.at(1, 0) == RatFunc::constant(3, -2));
  CHECK(d.at(0, 2).is_zero());
  VField dz = {RatFunc(3), RatFunc(3), RatFunc::constant(3, 1)};
  CHECK(lie_derivative(dz, d).is_zero());
  // L_{dx}(x dy (x) dy) = dy (x) dy
  SymTensor t(3);
  t.set(1, 1, parse_ratfunc("x", V));
  VField dx = {RatFunc::constant(3, 1), RatFunc(3), RatFunc(3)};
  auto lt = lie_derivative(dx, t);
  CHECK(lt.at(1, 1) == RatFunc::constant(3, 1));
  // d(df) = 0
  auto f = parse_ratfunc("x^2*y + z*y^3 - x*z", V);
  OneForm df = {f.deriv(0), f.deriv(1), f.deriv(2)};
  CHECK(exterior_d(df).is_zero());
}

TEST_CASE("jacobi identity for polynomial fields") {
  VField A = {parse_ratfunc("x*y", V), parse_ratfunc("z^2", V), parse_ratfunc("1+x", V)};
  VField B = {parse_ratfunc("y", V), parse_ratfunc("x*z", V), parse_ratfunc("y^2", V)};
  VField C = {parse_ratfunc("z", V), parse_ratfunc("1", V), parse_ratfunc("x*y", V)};
  auto j1 = lie_bracket(A, lie_bracket(B, C));
  auto j2 = lie_bracket(B, lie_bracket(C, A));
  auto j3 = lie_bracket(C, lie_bracket(A, B));
  for (int i = 0; i < 3; ++i) CHECK((j1[i] + j2[i] + j3[i]).is_zero());
}

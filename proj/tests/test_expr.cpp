#include <doctest.h>

#include "crwb/expr.hpp"
#include "crwb/chart.hpp"
#include "oracles.hpp"

using namespace crwb;
using crwb::testing::FiniteDifference;
using crwb::testing::mixed_error;

namespace {

Vec pt3(double a, double b, double c) {
  Vec p(3);
  p << a, b, c;
  return p;
}

}  // namespace

TEST_CASE("linear expression has constant gradient") {
  auto e = CoefficientExpr::parse("2*y2", 3);
  for (double x : {-0.7, 0.0, 1.3}) {
    Jet2 j = e.eval_jet(pt3(x, 0.5 * x, -x));
    CHECK(j.gradient[0] == doctest::Approx(0.0));
    CHECK(j.gradient[1] == doctest::Approx(2.0));
    CHECK(j.gradient[2] == doctest::Approx(0.0));
    CHECK(j.hessian.norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("polynomial value and gradient") {
  auto e = CoefficientExpr::parse("y1^2 + y2^2", 3);
  Jet2 j = e.eval_jet(pt3(1, 2, 0));
  CHECK(j.value == doctest::Approx(5.0));
  CHECK(j.gradient[0] == doctest::Approx(2.0));
  CHECK(j.gradient[1] == doctest::Approx(4.0));
  CHECK(j.gradient[2] == doctest::Approx(0.0));
}

TEST_CASE("sin*exp jet against central finite differences") {
  auto e = CoefficientExpr::parse("sin(y1)*exp(y3)", 3);
  FiniteDifference fd{[&](const Vec& p) { return e.eval(p); }};
  Jet2 j = e.eval_jet(pt3(0, 0, 0));
  CHECK(j.value == doctest::Approx(0.0));
  CHECK(j.gradient[0] == doctest::Approx(1.0));
  CHECK(j.gradient[1] == doctest::Approx(0.0));
  CHECK(j.gradient[2] == doctest::Approx(0.0));
  Vec p = pt3(0.3, -0.2, 0.5);
  Jet2 jp = e.eval_jet(p);
  for (int i = 0; i < 3; ++i) {
    CHECK(mixed_error(jp.gradient[i], fd.gradient(p, i)) <= 1e-5);
    for (int l = 0; l < 3; ++l) {
      CHECK(mixed_error(jp.hessian(i, l), fd.hessian(p, i, l)) <= 1e-5);
    }
  }
}

TEST_CASE("product rule in the hessian") {
  auto e = CoefficientExpr::parse("y1*y2", 2);
  Vec p(2);
  p << 3, 5;
  Jet2 j = e.eval_jet(p);
  CHECK(j.value == doctest::Approx(15.0));
  CHECK(j.hessian(0, 1) == doctest::Approx(1.0));
  CHECK(j.hessian(1, 0) == doctest::Approx(1.0));
  CHECK(j.hessian(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("exp jet at zero") {
  auto e = CoefficientExpr::parse("exp(y1)", 2);
  Vec p = Vec::Zero(2);
  Jet2 j = e.eval_jet(p);
  CHECK(j.value == doctest::Approx(1.0));
  CHECK(j.gradient[0] == doctest::Approx(1.0));
  CHECK(j.hessian(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("rational function with finite-difference cross-check") {
  auto e = CoefficientExpr::parse("1/(1+y1^2)", 2);
  Vec p(2);
  p << 1, 0;
  Jet2 j = e.eval_jet(p);
  CHECK(j.value == doctest::Approx(0.5));
  CHECK(j.gradient[0] == doctest::Approx(-0.5));
  FiniteDifference fd{[&](const Vec& q) { return e.eval(q); }};
  CHECK(mixed_error(j.hessian(0, 0), fd.hessian(p, 0, 0)) <= 1e-5);
}

TEST_CASE("negative exponent") {
  auto e = CoefficientExpr::parse("(1+y1^2)^-1", 2);
  Vec p(2);
  p << 1, 0;
  CHECK(e.eval(p) == doctest::Approx(0.5));
  CHECK(e.eval_jet(p).gradient[0] == doctest::Approx(-0.5));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(CoefficientExpr::parse("", 3), ParseError);
  CHECK_THROWS_AS(CoefficientExpr::parse("y1 + ", 3), ParseError);
  CHECK_THROWS_AS(CoefficientExpr::parse("foo(y1)", 3), ParseError);
  CHECK_THROWS_AS(CoefficientExpr::parse("y7", 3), ParseError);
  CHECK_THROWS_AS(CoefficientExpr::parse("y1 @ y2", 3), ParseError);
  CHECK_THROWS_AS(CoefficientExpr::parse("tan(y1)", 3), ParseError);
  try {
    CoefficientExpr::parse("y1 + foo", 3);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("print/parse round-trip is stable") {
  for (const char* src : {"2*y2", "y1^2 + y2^2", "sin(y1)*exp(y3)", "1/(1+y1^2)",
                          "-y1 + (y2 - y3)^3", "cos(y1*y2)/(2 + sin(y3))"}) {
    auto e = CoefficientExpr::parse(src, 3);
    const std::string once = e.print();
    auto e2 = CoefficientExpr::parse(once, 3);
    CHECK(e2.print() == once);
    Vec p = pt3(0.37, -0.58, 0.21);
    CHECK(e.eval(p) == doctest::Approx(e2.eval(p)).epsilon(1e-14));
  }
}

TEST_CASE("symbolic derivative matches jet gradient") {
  Rng rng(17);
  for (const char* src : {"y1^3*y2 - y3/(1+y2^2)", "sin(y1*y3)*exp(y2)", "cos(y2)^2"}) {
    auto e = CoefficientExpr::parse(src, 3);
    for (int axis = 0; axis < 3; ++axis) {
      auto d = e.derivative(axis);
      for (int trial = 0; trial < 20; ++trial) {
        Vec p = pt3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
        CHECK(d.eval(p) == doctest::Approx(e.eval_jet(p).gradient[axis]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("division by zero is an evaluation error") {
  auto e = CoefficientExpr::parse("1/y1", 2);
  Vec p = Vec::Zero(2);
  CHECK_THROWS_AS(e.eval(p), EvalError);
}

#include <doctest.h>

#include "crwb/chart.hpp"
#include "crwb/gallery.hpp"

using namespace crwb;

namespace {

Vec pt3(double a, double b, double c) {
  Vec p(3);
  p << a, b, c;
  return p;
}

VectorField make_field(const Chart& chart, std::initializer_list<const char*> coeffs) {
  std::vector<CoefficientExpr> c;
  for (const char* s : coeffs) c.push_back(CoefficientExpr::parse(s, chart.dim));
  return VectorField(chart, std::move(c));
}

}  // namespace

TEST_CASE("bracket of constant fields vanishes") {
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"1", "0", "0"});
  auto Y = make_field(chart, {"0", "1", "0"});
  Vec b = lie_bracket(X, Y, pt3(0.2, -0.3, 0.1));
  CHECK(b.norm() == doctest::Approx(0.0));
}

TEST_CASE("heisenberg bracket is -4 d/dt everywhere") {
  // Hand oracle: [d/dx + 2y d/dt, d/dy - 2x d/dt] = -4 d/dt.
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"1", "0", "2*y2"});
  auto Y = make_field(chart, {"0", "1", "-2*y1"});
  for (const Vec& p : chart.probe_points(25)) {
    Vec b = lie_bracket(X, Y, p);
    CHECK(b[0] == doctest::Approx(0.0));
    CHECK(b[1] == doctest::Approx(0.0));
    CHECK(b[2] == doctest::Approx(-4.0));
  }
}

TEST_CASE("bracket is antisymmetric and [X,X] = 0") {
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"y2^2", "sin(y1)", "y3*y1"});
  auto Y = make_field(chart, {"1 + y3", "y1*y2", "cos(y2)"});
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Vec p = rng.point_in(chart.lo, chart.hi);
    Vec ab = lie_bracket(X, Y, p);
    Vec ba = lie_bracket(Y, X, p);
    CHECK((ab + ba).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(lie_bracket(X, X, p).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("jacobi identity for polynomial fields") {
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"y2", "y3^2", "1"});
  auto Y = make_field(chart, {"y1*y3", "y2", "y1"});
  auto Z = make_field(chart, {"y3", "y1^2", "y2*y2"});
  auto XY = lie_bracket_field(X, Y);
  auto YZ = lie_bracket_field(Y, Z);
  auto ZX = lie_bracket_field(Z, X);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Vec p = rng.point_in(chart.lo, chart.hi);
    Vec residual =
        lie_bracket(XY, Z, p) + lie_bracket(YZ, X, p) + lie_bracket(ZX, Y, p);
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("flow of a constant field is a straight line") {
  Chart chart("box", Vec::Constant(3, -2.0), Vec::Constant(3, 2.0));
  auto X = make_field(chart, {"1", "0", "0"});
  Vec q = flow(X, pt3(0, 0, 0), 1.0, 0.05);
  CHECK((q - pt3(1, 0, 0)).norm() <= 1e-12);
}

TEST_CASE("heisenberg flow follows the closed-form solution") {
  // From (0,1,0): xdot = 1, ydot = 0, tdot = 2y = 2, so endpoint (1,1,2).
  Chart chart("box", Vec::Constant(3, -3.0), Vec::Constant(3, 3.0));
  auto X = make_field(chart, {"1", "0", "2*y2"});
  Vec q = flow(X, pt3(0, 1, 0), 1.0, 0.02);
  CHECK((q - pt3(1, 1, 2)).norm() <= 1e-10);
}

TEST_CASE("zero-time flow is the identity") {
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"sin(y2)", "cos(y3)", "y1"});
  Vec p = pt3(0.3, 0.4, -0.2);
  CHECK((flow(X, p, 0.0, 0.1) - p).norm() == doctest::Approx(0.0));
}

TEST_CASE("flow reversibility within the fourth-order bound") {
  Chart chart("box", Vec::Constant(3, -4.0), Vec::Constant(3, 4.0));
  auto X = make_field(chart, {"sin(y2)+1", "cos(y1)", "y1*y2"});
  const double step = 0.05;
  const double time = 1.2;
  Vec p = pt3(0.1, -0.4, 0.3);
  Vec q = flow(X, p, time, step);
  Vec back = flow(X, q, -time, step);
  CHECK((back - p).norm() <= 10 * std::pow(step, 4) * std::abs(time));
}

TEST_CASE("flow out of bounds aborts") {
  Chart chart("box", Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  auto X = make_field(chart, {"1", "0", "0"});
  CHECK_THROWS_AS(flow(X, pt3(0.5, 0, 0), 1.0, 0.05), FlowError);
}

TEST_CASE("chart rejects malformed bounds and outside points") {
  CHECK_THROWS_AS(Chart("bad", Vec::Constant(1, 0.0), Vec::Constant(1, 1.0)), DomainError);
  Vec lo(2), hi(2);
  lo << 0, 1;
  hi << 1, 0;  // empty on axis 2
  CHECK_THROWS_AS(Chart("bad", lo, hi), DomainError);
  Chart chart("box", Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
  Vec p(2);
  p << 2, 0;
  CHECK_THROWS_AS(chart.require_inside(p), DomainError);
}

TEST_CASE("bracket requires a common chart") {
  Chart c1("a", Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
  Chart c2("b", Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
  auto X = make_field(c1, {"1", "0"});
  auto Y = make_field(c2, {"0", "1"});
  Vec p = Vec::Zero(2);
  CHECK_THROWS_AS(lie_bracket(X, Y, p), DomainError);
}

#include "crwb/fields.hpp"

namespace crwb {

ScalarFunction ScalarFunction::from_expr(const CoefficientExpr& e, std::string name) {
  if (name.empty()) name = e.source();
  return {std::move(name), [e](const Vec& p) { return e.eval_jet(p); }};
}

ScalarFunction ScalarFunction::constant(double v, int dim) {
  return {"const", [v, dim](const Vec&) { return Jet2::constant(v, dim); }};
}

ComplexFunction ComplexFunction::from_exprs(const CoefficientExpr& re,
                                            const CoefficientExpr& im, std::string name) {
  if (name.empty()) name = re.source() + " + i*(" + im.source() + ")";
  return {std::move(name),
          [re, im](const Vec& p) { return Jet2c(re.eval_jet(p), im.eval_jet(p)); }};
}

ComplexFunction ComplexFunction::from_real(const ScalarFunction& f) {
  return {f.name, [f](const Vec& p) { return Jet2c(f.jet(p)); }};
}

ComplexFunction ComplexFunction::constant(Complex v, int dim) {
  return {"const", [v, dim](const Vec&) {
            return Jet2c(Jet2::constant(v.real(), dim), Jet2::constant(v.imag(), dim));
          }};
}

namespace {

// Quintic smoothstep on [0,1]: C^2 join with 0 and 1.
inline void smoothstep(double v, double& s, double& ds, double& dds) {
  s = v * v * v * (10.0 + v * (-15.0 + 6.0 * v));
  ds = 30.0 * v * v * (v - 1.0) * (v - 1.0);
  dds = v * (60.0 + v * (-180.0 + 120.0 * v));
}

}  // namespace

void AxisWindow::eval(double x, double& w, double& dw, double& ddw) const {
  w = dw = ddw = 0.0;
  if (x <= outer_lo || x >= outer_hi) return;
  if (x >= inner_lo && x <= inner_hi) {
    w = 1.0;
    return;
  }
  if (x < inner_lo) {
    const double len = inner_lo - outer_lo;
    const double v = (x - outer_lo) / len;
    double s, ds, dds;
    smoothstep(v, s, ds, dds);
    w = s;
    dw = ds / len;
    ddw = dds / (len * len);
  } else {
    const double len = outer_hi - inner_hi;
    const double v = (outer_hi - x) / len;
    double s, ds, dds;
    smoothstep(v, s, ds, dds);
    w = s;
    dw = -ds / len;
    ddw = dds / (len * len);
  }
}

Jet2 AxisWindow::jet(const Vec& p, int dim) const {
  double w, dw, ddw;
  eval(p[axis], w, dw, ddw);
  Jet2 j(w, dim);
  j.gradient[axis] = dw;
  j.hessian(axis, axis) = ddw;
  return j;
}

Jet2 WindowBump::jet(const Vec& p, int dim) const {
  Jet2 out = Jet2::constant(1.0, dim);
  for (const auto& w : axes) out = out * w.jet(p, dim);
  return out;
}

ScalarFunction WindowBump::as_function(int dim, std::string name) const {
  WindowBump copy = *this;
  return {std::move(name), [copy, dim](const Vec& p) { return copy.jet(p, dim); }};
}

bool WindowBump::supported_inside(const Vec& lo, const Vec& hi, double margin) const {
  for (const auto& w : axes) {
    if (w.outer_lo < lo[w.axis] + margin || w.outer_hi > hi[w.axis] - margin) return false;
  }
  return true;
}

}  // namespace crwb

#ifndef CRWB_FIELDS_HPP
#define CRWB_FIELDS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "crwb/chart.hpp"

namespace crwb {

/// Real scalar function with exact order-2 jets.
struct ScalarFunction {
  std::string name;
  std::function<Jet2(const Vec&)> jet;

  Jet2 operator()(const Vec& p) const { return jet(p); }
  double value(const Vec& p) const { return jet(p).value; }

  static ScalarFunction from_expr(const CoefficientExpr& e, std::string name = "");
  static ScalarFunction constant(double v, int dim);
};

/// Complex scalar function with exact order-2 jets.
struct ComplexFunction {
  std::string name;
  std::function<Jet2c(const Vec&)> jet;

  Jet2c operator()(const Vec& p) const { return jet(p); }
  Complex value(const Vec& p) const { return jet(p).value(); }

  static ComplexFunction from_exprs(const CoefficientExpr& re, const CoefficientExpr& im,
                                    std::string name = "");
  static ComplexFunction from_real(const ScalarFunction& f);
  static ComplexFunction constant(Complex v, int dim);
};

/// One-dimensional C^2 window: 0 outside [outer_lo, outer_hi], 1 on
/// [inner_lo, inner_hi], quintic-smoothstep ramps in between. Degenerate
/// inner interval (inner_lo == inner_hi) gives a compactly supported bump.
struct AxisWindow {
  int axis = 0;
  double outer_lo = -1.0;
  double inner_lo = 0.0;
  double inner_hi = 0.0;
  double outer_hi = 1.0;

  /// Value and first two derivatives with respect to the axis coordinate.
  void eval(double x, double& w, double& dw, double& ddw) const;
  Jet2 jet(const Vec& p, int dim) const;
};

/// Product of axis windows; compactly supported C^2 function.
struct WindowBump {
  std::vector<AxisWindow> axes;

  Jet2 jet(const Vec& p, int dim) const;
  ScalarFunction as_function(int dim, std::string name = "bump") const;

  bool supported_inside(const Vec& lo, const Vec& hi, double margin) const;
};

}  // namespace crwb

#endif

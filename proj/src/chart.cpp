#include "crwb/chart.hpp"

#include <cmath>

namespace crwb {

Chart::Chart(std::string name_, Vec lo_, Vec hi_)
    : name(std::move(name_)), dim(static_cast<int>(lo_.size())), lo(std::move(lo_)), hi(std::move(hi_)) {
  if (dim < 2) throw DomainError("chart dimension must be at least 2");
  if (hi.size() != lo.size()) throw DomainError("chart bounds size mismatch");
  for (int i = 0; i < dim; ++i) {
    if (!(lo[i] < hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i]))
      throw DomainError("chart bounds must be finite and nonempty on every axis");
  }
}

bool Chart::contains(const Vec& p, double margin) const {
  if (p.size() != dim) return false;
  for (int i = 0; i < dim; ++i) {
    if (p[i] < lo[i] + margin || p[i] > hi[i] - margin) return false;
  }
  return true;
}

void Chart::require_inside(const Vec& p) const {
  if (!contains(p))
    throw DomainError("point outside chart bounds of '" + name + "'");
}

std::vector<Vec> Chart::probe_points(int count, double shrink) const {
  // Additive low-discrepancy sequence from the d-dimensional plastic constant.
  double phi = 2.0;
  for (int it = 0; it < 32; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
  Vec alpha(dim);
  double a = 1.0;
  for (int i = 0; i < dim; ++i) {
    a /= phi;
    alpha[i] = a;
  }
  std::vector<Vec> pts;
  pts.reserve(count);
  Vec u = Vec::Constant(dim, 0.5);
  for (int j = 0; j < count; ++j) {
    u += alpha;
    for (int i = 0; i < dim; ++i) u[i] -= std::floor(u[i]);
    Vec p(dim);
    for (int i = 0; i < dim; ++i) {
      double pad = shrink * (hi[i] - lo[i]);
      p[i] = lo[i] + pad + u[i] * (hi[i] - lo[i] - 2 * pad);
    }
    pts.push_back(p);
  }
  return pts;
}

VectorField::VectorField(const Chart& c, std::vector<CoefficientExpr> coeffs_)
    : chart(&c), coeffs(std::move(coeffs_)) {
  if (static_cast<int>(coeffs.size()) != c.dim)
    throw DomainError("vector field needs one coefficient per chart coordinate");
}

Vec VectorField::eval(const Vec& p) const {
  Vec v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = coeffs[i].eval(p);
  return v;
}

void VectorField::eval_jet(const Vec& p, Vec& value, Mat& jacobian) const {
  const int n = dim();
  value.resize(n);
  jacobian.resize(n, n);
  for (int i = 0; i < n; ++i) {
    Jet2 j = coeffs[i].eval_jet(p);
    value[i] = j.value;
    jacobian.row(i) = j.gradient.transpose();
  }
}

double VectorField::apply(const Jet2& f, const Vec& p) const {
  return eval(p).dot(f.gradient);
}

VectorField VectorField::scaled(const CoefficientExpr& factor) const {
  std::vector<CoefficientExpr> scaled_coeffs;
  scaled_coeffs.reserve(coeffs.size());
  const std::string f = "(" + factor.print() + ")";
  for (const auto& c : coeffs) {
    scaled_coeffs.push_back(
        CoefficientExpr::parse(f + "*(" + c.print() + ")", dim()));
  }
  return VectorField(*chart, std::move(scaled_coeffs));
}

Vec lie_bracket(const VectorField& X, const VectorField& Y, const Vec& p) {
  if (X.chart != Y.chart) throw DomainError("lie_bracket: fields on different charts");
  X.chart->require_inside(p);
  Vec xv, yv;
  Mat xj, yj;
  X.eval_jet(p, xv, xj);
  Y.eval_jet(p, yv, yj);
  return yj * xv - xj * yv;
}

VectorField lie_bracket_field(const VectorField& X, const VectorField& Y) {
  if (X.chart != Y.chart) throw DomainError("lie_bracket_field: fields on different charts");
  const int n = X.dim();
  std::vector<CoefficientExpr> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) {
    // [X,Y]^i = sum_j X^j dY^i/dy_j - Y^j dX^i/dy_j
    std::string s;
    for (int j = 0; j < n; ++j) {
      const CoefficientExpr dy = Y.coeffs[i].derivative(j);
      const CoefficientExpr dx = X.coeffs[i].derivative(j);
      if (!dy.is_zero() && !X.coeffs[j].is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + X.coeffs[j].print() + ")*(" + dy.print() + ")";
      }
      if (!dx.is_zero() && !Y.coeffs[j].is_zero()) {
        if (!s.empty()) s += " ";
        s += "- (" + Y.coeffs[j].print() + ")*(" + dx.print() + ")";
      }
    }
    if (s.empty()) s = "0";
    comps.push_back(CoefficientExpr::parse(s, n));
  }
  return VectorField(*X.chart, std::move(comps));
}

namespace {

Vec rk4_stage(const VectorField& X, const Vec& p, double dt) {
  const Vec k1 = X.eval(p);
  const Vec k2 = X.eval(p + 0.5 * dt * k1);
  const Vec k3 = X.eval(p + 0.5 * dt * k2);
  const Vec k4 = X.eval(p + dt * k3);
  return p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Vec flow(const VectorField& X, const Vec& p, double time, double step) {
  if (step <= 0.0) throw FlowError("flow: step must be positive");
  X.chart->require_inside(p);
  Vec y = p;
  double remaining = std::abs(time);
  const double dir = time >= 0 ? 1.0 : -1.0;
  while (remaining > 0.0) {
    const double dt = dir * std::min(step, remaining);
    y = rk4_stage(X, y, dt);
    if (!y.allFinite()) throw FlowError("flow: non-finite state");
    if (!X.chart->contains(y))
      throw FlowError("flow: trajectory exited chart bounds of '" + X.chart->name + "'");
    remaining -= std::abs(dt);
  }
  return y;
}

bool flow_step_clipped(const VectorField& X, const Vec& p, double dt, const Vec& lo,
                       const Vec& hi, Vec& out) {
  auto inside = [&](const Vec& q) {
    for (int i = 0; i < q.size(); ++i) {
      if (q[i] < lo[i] || q[i] > hi[i]) return false;
    }
    return true;
  };
  const Vec k1 = X.eval(p);
  Vec q = p + 0.5 * dt * k1;
  if (!inside(q)) return false;
  const Vec k2 = X.eval(q);
  q = p + 0.5 * dt * k2;
  if (!inside(q)) return false;
  const Vec k3 = X.eval(q);
  q = p + dt * k3;
  if (!inside(q)) return false;
  const Vec k4 = X.eval(q);
  out = p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return out.allFinite() && inside(out);
}

}  // namespace crwb

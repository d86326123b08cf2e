#ifndef CRWB_CHART_HPP
#define CRWB_CHART_HPP

#include <string>
#include <vector>

#include "crwb/expr.hpp"

namespace crwb {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned coordinate box of dimension N = 2n+k.
struct Chart {
  std::string name;
  int dim = 0;
  Vec lo;
  Vec hi;

  Chart() = default;
  Chart(std::string name_, Vec lo_, Vec hi_);

  bool contains(const Vec& p, double margin = 0.0) const;
  void require_inside(const Vec& p) const;

  /// Deterministic low-discrepancy probe points in the interior.
  std::vector<Vec> probe_points(int count, double shrink = 0.02) const;
};

/// Smooth real vector field, one coefficient expression per coordinate.
struct VectorField {
  const Chart* chart = nullptr;
  std::vector<CoefficientExpr> coeffs;

  VectorField() = default;
  VectorField(const Chart& c, std::vector<CoefficientExpr> coeffs_);

  int dim() const { return chart ? chart->dim : 0; }

  Vec eval(const Vec& p) const;

  /// Value and Jacobian J(i,l) = d coeff_i / d y_l.
  void eval_jet(const Vec& p, Vec& value, Mat& jacobian) const;

  /// Directional derivative action on a scalar jet: X f (p), with gradient
  /// of the result available from second-order data of f.
  double apply(const Jet2& f, const Vec& p) const;

  VectorField scaled(const CoefficientExpr& factor) const;
};

/// Commutator [X, Y] evaluated at a point.
Vec lie_bracket(const VectorField& X, const VectorField& Y, const Vec& p);

/// Commutator [X, Y] as a vector field with symbolically differentiated
/// coefficients; exact, so brackets can be nested to any depth.
VectorField lie_bracket_field(const VectorField& X, const VectorField& Y);

struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integral curve endpoint of X from p over the given time, classical
/// fourth-order one-step method with fixed step size. Trajectories leaving
/// the chart bounds abort with FlowError.
Vec flow(const VectorField& X, const Vec& p, double time, double step);

/// Single fixed-step RK4 update without bounds enforcement on intermediate
/// stages; returns false if any stage or the endpoint leaves `lo..hi`.
bool flow_step_clipped(const VectorField& X, const Vec& p, double dt, const Vec& lo,
                       const Vec& hi, Vec& out);

/// Deterministic splitmix-based RNG with portable uniform doubles.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  Vec point_in(const Vec& lo, const Vec& hi, double shrink = 0.0) {
    Vec p(lo.size());
    for (int i = 0; i < lo.size(); ++i) {
      double pad = shrink * (hi[i] - lo[i]);
      p[i] = uniform(lo[i] + pad, hi[i] - pad);
    }
    return p;
  }

 private:
  uint64_t state_;
};

}  // namespace crwb

#endif

#ifndef CRWB_TESTS_ORACLES_HPP
#define CRWB_TESTS_ORACLES_HPP

#include <functional>

#include "crwb/jet.hpp"

namespace crwb::testing {

/// Central finite differences, the independent oracle for jet derivatives.
/// Kept free of any expression-tree machinery on purpose.
struct FiniteDifference {
  std::function<double(const Vec&)> f;
  double step = 1e-4;

  double value(const Vec& p) const { return f(p); }

  double gradient(const Vec& p, int i) const {
    Vec a = p, b = p;
    a[i] += step;
    b[i] -= step;
    return (f(a) - f(b)) / (2 * step);
  }

  double hessian(const Vec& p, int i, int j) const {
    if (i == j) {
      Vec a = p, b = p;
      a[i] += step;
      b[i] -= step;
      return (f(a) - 2 * f(p) + f(b)) / (step * step);
    }
    Vec pp = p, pm = p, mp = p, mm = p;
    pp[i] += step;
    pp[j] += step;
    pm[i] += step;
    pm[j] -= step;
    mp[i] -= step;
    mp[j] += step;
    mm[i] -= step;
    mm[j] -= step;
    return (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * step * step);
  }
};

/// |a - b| scaled relative for large magnitudes, absolute for small.
inline double mixed_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace crwb::testing

#endif

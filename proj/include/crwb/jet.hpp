#ifndef CRWB_JET_HPP
#define CRWB_JET_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace crwb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Second-order jet of a scalar function of N variables: value, gradient and
/// (symmetric) Hessian, propagated exactly through arithmetic.
struct Jet2 {
  double value = 0.0;
  Vec gradient;
  Mat hessian;

  Jet2() = default;
  explicit Jet2(int dim)
      : value(0.0), gradient(Vec::Zero(dim)), hessian(Mat::Zero(dim, dim)) {}
  Jet2(double v, int dim)
      : value(v), gradient(Vec::Zero(dim)), hessian(Mat::Zero(dim, dim)) {}

  int dim() const { return static_cast<int>(gradient.size()); }

  static Jet2 constant(double v, int dim) { return Jet2(v, dim); }

  static Jet2 variable(double v, int axis, int dim) {
    Jet2 j(v, dim);
    j.gradient[axis] = 1.0;
    return j;
  }

  bool finite() const {
    return std::isfinite(value) && gradient.allFinite() && hessian.allFinite();
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r(a.dim());
  r.value = a.value + b.value;
  r.gradient = a.gradient + b.gradient;
  r.hessian = a.hessian + b.hessian;
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r(a.dim());
  r.value = a.value - b.value;
  r.gradient = a.gradient - b.gradient;
  r.hessian = a.hessian - b.hessian;
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r(a.dim());
  r.value = -a.value;
  r.gradient = -a.gradient;
  r.hessian = -a.hessian;
  return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.dim());
  r.value = a.value * b.value;
  r.gradient = a.value * b.gradient + b.value * a.gradient;
  r.hessian = a.value * b.hessian + b.value * a.hessian +
              a.gradient * b.gradient.transpose() +
              b.gradient * a.gradient.transpose();
  return r;
}

inline Jet2 operator*(double s, const Jet2& a) {
  Jet2 r(a.dim());
  r.value = s * a.value;
  r.gradient = s * a.gradient;
  r.hessian = s * a.hessian;
  return r;
}

inline Jet2 operator*(const Jet2& a, double s) { return s * a; }

inline Jet2 operator+(const Jet2& a, double s) {
  Jet2 r = a;
  r.value += s;
  return r;
}

inline Jet2 operator+(double s, const Jet2& a) { return a + s; }

inline Jet2 operator-(const Jet2& a, double s) { return a + (-s); }

inline Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }

/// Chain rule for g(f): g', g'' evaluated at f.value.
inline Jet2 compose(const Jet2& f, double g0, double g1, double g2) {
  Jet2 r(f.dim());
  r.value = g0;
  r.gradient = g1 * f.gradient;
  r.hessian = g1 * f.hessian + g2 * f.gradient * f.gradient.transpose();
  return r;
}

inline Jet2 inverse(const Jet2& a) {
  const double v = a.value;
  if (v == 0.0) throw std::domain_error("jet: division by zero");
  return compose(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }

inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }

inline Jet2 operator/(double s, const Jet2& a) { return s * inverse(a); }

inline Jet2 sin(const Jet2& a) {
  return compose(a, std::sin(a.value), std::cos(a.value), -std::sin(a.value));
}

inline Jet2 cos(const Jet2& a) {
  return compose(a, std::cos(a.value), -std::sin(a.value), -std::cos(a.value));
}

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return compose(a, e, e, e);
}

inline Jet2 pow(const Jet2& a, int n) {
  if (n == 0) return Jet2::constant(1.0, a.dim());
  if (n < 0) return inverse(pow(a, -n));
  const double v = a.value;
  const double p0 = std::pow(v, n);
  const double p1 = n * std::pow(v, n - 1);
  const double p2 = n > 1 ? double(n) * (n - 1) * std::pow(v, n - 2) : 0.0;
  return compose(a, p0, p1, p2);
}

inline Jet2 square(const Jet2& a) { return a * a; }

/// Complex-valued second-order jet as a (re, im) pair of real jets.
struct Jet2c {
  Jet2 re;
  Jet2 im;

  Jet2c() = default;
  Jet2c(const Jet2& r, const Jet2& i) : re(r), im(i) {}
  explicit Jet2c(const Jet2& r) : re(r), im(Jet2(r.dim())) {}

  int dim() const { return re.dim(); }
  Complex value() const { return {re.value, im.value}; }

  Jet2 abs2() const { return re * re + im * im; }
  Jet2c conj() const { return {re, -im}; }
};

inline Jet2c operator+(const Jet2c& a, const Jet2c& b) {
  return {a.re + b.re, a.im + b.im};
}
inline Jet2c operator-(const Jet2c& a, const Jet2c& b) {
  return {a.re - b.re, a.im - b.im};
}
inline Jet2c operator*(const Jet2c& a, const Jet2c& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Jet2c operator*(const Complex& s, const Jet2c& a) {
  return {s.real() * a.re - s.imag() * a.im, s.real() * a.im + s.imag() * a.re};
}

}  // namespace crwb

#endif

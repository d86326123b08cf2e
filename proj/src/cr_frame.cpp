#include "crwb/cr_frame.hpp"

#include <Eigen/SVD>

namespace crwb {

Mat CRFrame::frame_matrix(const Vec& p) const {
  Mat m(dim(), 2 * n);
  for (int j = 0; j < n; ++j) {
    m.col(j) = X[j].eval(p);
    m.col(n + j) = JX[j].eval(p);
  }
  return m;
}

CMat CRFrame::lbar_matrix(const Vec& p) const {
  CMat m(dim(), n);
  for (int j = 0; j < n; ++j) {
    m.col(j) = X[j].eval(p) + Complex(0, 1) * JX[j].eval(p).cast<Complex>();
  }
  return m;
}

Vec CRFrame::realize(const CVec& v, const Vec& p) const {
  Vec out = Vec::Zero(dim());
  for (int j = 0; j < n; ++j) {
    out += v[j].real() * X[j].eval(p) + v[j].imag() * JX[j].eval(p);
  }
  return out;
}

CRFrame build_frame(const Chart& chart, int n, int k, std::vector<VectorField> X,
                    std::vector<VectorField> JX, int probe_count) {
  if (n < 1 || k < 0) throw ValidationError("frame requires n >= 1 and k >= 0");
  if (chart.dim != 2 * n + k)
    throw ValidationError("chart dimension " + std::to_string(chart.dim) +
                          " does not match 2n+k = " + std::to_string(2 * n + k));
  if (static_cast<int>(X.size()) != n || static_cast<int>(JX.size()) != n)
    throw ValidationError("frame needs exactly n fields X and n fields JX");
  for (const auto& f : X) {
    if (f.chart != &chart) throw ValidationError("frame field bound to a different chart");
  }
  for (const auto& f : JX) {
    if (f.chart != &chart) throw ValidationError("frame field bound to a different chart");
  }

  CRFrame frame;
  frame.chart = &chart;
  frame.n = n;
  frame.k = k;
  frame.X = std::move(X);
  frame.JX = std::move(JX);

  for (const Vec& p : chart.probe_points(probe_count)) {
    Eigen::JacobiSVD<Mat> svd(frame.frame_matrix(p));
    const double smin = svd.singularValues()(2 * n - 1);
    if (smin < 1e-8) {
      throw ValidationError("frame rank-deficient at probe point (smallest singular value " +
                            std::to_string(smin) + ")");
    }
  }
  return frame;
}

CharacteristicBasis characteristic_basis(const CRFrame& frame, const Vec& p) {
  frame.chart->require_inside(p);
  const int N = frame.dim();
  const int k = frame.k;
  // Rows are the frame field values; the null space of this map is H^0_p.
  Mat m = frame.frame_matrix(p).transpose();
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec sv = svd.singularValues();
  const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  int null_dim = N - static_cast<int>(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) < 1e-8 * scale) ++null_dim;
  }
  if (null_dim != k) {
    throw ValidationError("numerical annihilator dimension " + std::to_string(null_dim) +
                          " differs from k = " + std::to_string(k));
  }
  CharacteristicBasis basis;
  basis.point = p;
  for (int i = N - k; i < N; ++i) {
    Vec xi = svd.matrixV().col(i);
    for (int c = 0; c < N; ++c) {
      if (std::abs(xi[c]) > 1e-9) {
        if (xi[c] < 0) xi = -xi;
        break;
      }
    }
    basis.xi.push_back(xi);
  }
  return basis;
}

namespace {

struct FrameJets {
  std::vector<Vec> value;   // 2n entries: X_1..X_n, JX_1..JX_n
  std::vector<Mat> jac;
};

FrameJets frame_jets(const CRFrame& frame, const Vec& p) {
  FrameJets fj;
  fj.value.resize(2 * frame.n);
  fj.jac.resize(2 * frame.n);
  for (int j = 0; j < frame.n; ++j) {
    frame.X[j].eval_jet(p, fj.value[j], fj.jac[j]);
    frame.JX[j].eval_jet(p, fj.value[frame.n + j], fj.jac[frame.n + j]);
  }
  return fj;
}

// <xi, [F, G](p)> for constant real coefficient combinations a, b of the
// frame fields (F = sum a_i e_i, G = sum b_i e_i).
double bracket_pairing(const FrameJets& fj, const Vec& xi, const Vec& a, const Vec& b,
                       int N) {
  Vec fv = Vec::Zero(N), gv = Vec::Zero(N);
  Mat fj_sum = Mat::Zero(N, N), gj_sum = Mat::Zero(N, N);
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != 0.0) {
      fv += a[i] * fj.value[i];
      fj_sum += a[i] * fj.jac[i];
    }
    if (b[i] != 0.0) {
      gv += b[i] * fj.value[i];
      gj_sum += b[i] * fj.jac[i];
    }
  }
  return xi.dot(gj_sum * fv - fj_sum * gv);
}

}  // namespace

LeviMatrix levi_matrix(const CRFrame& frame, const Vec& p, const Vec& xi) {
  frame.chart->require_inside(p);
  const int n = frame.n;
  const int N = frame.dim();
  FrameJets fj = frame_jets(frame, p);
  for (int i = 0; i < 2 * n; ++i) {
    if (std::abs(xi.dot(fj.value[i])) > 1e-8)
      throw ValidationError("covector is not characteristic at the point");
  }

  // Quadratic form Q(v) = <xi, [J vt, vt](p)> on complex coordinates v.
  auto quad = [&](const CVec& v) {
    Vec a(2 * n), b(2 * n);  // vt and J vt in frame coordinates
    for (int j = 0; j < n; ++j) {
      a[j] = v[j].real();
      a[n + j] = v[j].imag();
      b[j] = -v[j].imag();
      b[n + j] = v[j].real();
    }
    return bracket_pairing(fj, xi, b, a, N);
  };

  CMat A = CMat::Zero(n, n);
  std::vector<double> diag(n);
  for (int j = 0; j < n; ++j) {
    CVec e = CVec::Zero(n);
    e[j] = 1.0;
    diag[j] = quad(e);
    A(j, j) = diag[j];
  }
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      CVec u = CVec::Zero(n), w = CVec::Zero(n);
      u[j] = 1.0;
      u[l] = 1.0;
      w[j] = 1.0;
      w[l] = Complex(0, 1);
      const double re = 0.5 * (quad(u) - diag[j] - diag[l]);
      const double im = 0.5 * (diag[j] + diag[l] - quad(w));
      A(j, l) = Complex(re, im);
      A(l, j) = Complex(re, -im);
    }
  }

  LeviMatrix lm;
  lm.point = p;
  lm.xi = xi;
  lm.A = A;
  return lm;
}

double integrability_residual(const CRFrame& frame, const Vec& p) {
  frame.chart->require_inside(p);
  const int n = frame.n;
  if (n < 2) return 0.0;
  const int N = frame.dim();
  FrameJets fj = frame_jets(frame, p);

  auto real_bracket = [&](int i, int j) -> Vec {
    return fj.jac[j] * fj.value[i] - fj.jac[i] * fj.value[j];
  };

  // Orthonormal basis of span{Lbar_1..Lbar_n}(p).
  CMat B = frame.lbar_matrix(p);
  Eigen::HouseholderQR<CMat> qr(B);
  CMat Q = qr.householderQ() * CMat::Identity(N, n);

  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // [Lbar_i, Lbar_j] expanded over the real frame fields.
      Vec re = real_bracket(i, j) - real_bracket(n + i, n + j);
      Vec im = real_bracket(i, n + j) + real_bracket(n + i, j);
      CVec v = re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
      CVec orth = v - Q * (Q.adjoint() * v);
      sum += orth.squaredNorm();
    }
  }
  return std::sqrt(sum);
}

CVec dbar_apply(const CRFrame& frame, const ComplexFunction& u, const Vec& p) {
  frame.chart->require_inside(p);
  const Jet2c uj = u(p);
  CVec grad = uj.re.gradient.cast<Complex>() + Complex(0, 1) * uj.im.gradient.cast<Complex>();
  CVec out(frame.n);
  for (int j = 0; j < frame.n; ++j) {
    CVec lbar =
        frame.X[j].eval(p).cast<Complex>() + Complex(0, 1) * frame.JX[j].eval(p).cast<Complex>();
    out[j] = (lbar.transpose() * grad)(0, 0);
  }
  return out;
}

double dbar_residual(const CRFrame& frame, const ComplexFunction& u,
                     const std::vector<Vec>& points) {
  double worst = 0.0;
  for (const Vec& p : points) {
    const CVec d = dbar_apply(frame, u, p);
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace crwb

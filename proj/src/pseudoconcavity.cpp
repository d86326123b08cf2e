#include "crwb/pseudoconcavity.hpp"

#include <cmath>

#include "crwb/linprog.hpp"

namespace crwb {

namespace {

constexpr double kEigZero = 1e-8;       // eigenvalue magnitude treated as zero
constexpr double kFeasibleT = 1e-6;     // interior-cone threshold
constexpr double kCutClose = 1e-9;      // stop when lambda_min >= t - this

// Hermitian n x n <-> n^2 real parameters: diagonal first, then (Re, Im)
// per upper off-diagonal pair in row-major order.
int herm_params(int n) { return n * n; }

CMat unpack_hermitian(const Vec& x, int n) {
  CMat G(n, n);
  for (int j = 0; j < n; ++j) G(j, j) = x[j];
  int idx = n;
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      G(j, l) = Complex(x[idx], x[idx + 1]);
      G(l, j) = Complex(x[idx], -x[idx + 1]);
      idx += 2;
    }
  }
  return G;
}

// Coefficient vector of the linear functional G -> trace(G A), A Hermitian.
Vec trace_functional(const CMat& A) {
  const int n = static_cast<int>(A.rows());
  Vec c = Vec::Zero(herm_params(n));
  for (int j = 0; j < n; ++j) c[j] = A(j, j).real();
  int idx = n;
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      c[idx] = 2.0 * A(j, l).real();
      c[idx + 1] = 2.0 * A(j, l).imag();
      idx += 2;
    }
  }
  return c;
}

// Coefficient vector of G -> w* G w for a fixed complex direction w.
Vec quad_functional(const CVec& w) {
  const int n = static_cast<int>(w.size());
  Vec c = Vec::Zero(herm_params(n));
  for (int j = 0; j < n; ++j) c[j] = std::norm(w[j]);
  int idx = n;
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      const Complex z = std::conj(w[j]) * w[l];
      c[idx] = 2.0 * z.real();
      c[idx + 1] = -2.0 * z.imag();
      idx += 2;
    }
  }
  return c;
}

std::vector<CVec> sphere_samples(int k, int m) {
  std::vector<CVec> dirs;
  if (k == 1) {
    for (int i = 0; i < m; ++i) {
      CVec d(1);
      d[0] = (i % 2 == 0) ? 1.0 : -1.0;
      dirs.push_back(d);
    }
    return dirs;
  }
  // Low-discrepancy points mapped to the sphere via Box-Muller pairs.
  const int pairs = (k + 1) / 2;
  double phi = 2.0;
  const int sdim = 2 * pairs;
  for (int it = 0; it < 32; ++it) phi = std::pow(1.0 + phi, 1.0 / (sdim + 1));
  Vec alpha(sdim);
  double a = 1.0;
  for (int i = 0; i < sdim; ++i) {
    a /= phi;
    alpha[i] = a;
  }
  Vec u = Vec::Constant(sdim, 0.5);
  while (static_cast<int>(dirs.size()) < m) {
    u += alpha;
    for (int i = 0; i < sdim; ++i) u[i] -= std::floor(u[i]);
    Vec g(sdim);
    for (int i = 0; i < pairs; ++i) {
      const double r = std::sqrt(-2.0 * std::log(std::max(u[2 * i], 1e-12)));
      g[2 * i] = r * std::cos(2.0 * M_PI * u[2 * i + 1]);
      g[2 * i + 1] = r * std::sin(2.0 * M_PI * u[2 * i + 1]);
    }
    Vec dir = g.head(k);
    const double norm = dir.norm();
    if (norm < 1e-6) continue;
    CVec d(k);
    for (int i = 0; i < k; ++i) d[i] = dir[i] / norm;
    dirs.push_back(d);
  }
  return dirs;
}

}  // namespace

SignatureVerdict signature_test(const CRFrame& frame, const Vec& p, int m) {
  const int k = frame.k;
  if (m < 2 * k + 1) throw SolveError("signature_test: need at least 2k+1 samples");
  SignatureVerdict out;
  out.point = p;
  out.samples = m;
  if (k == 0) {
    out.verdict = Signature::AllZero;
    return out;
  }

  const CharacteristicBasis basis = characteristic_basis(frame, p);
  std::vector<LeviMatrix> A_basis;
  for (const Vec& xi : basis.xi) A_basis.push_back(levi_matrix(frame, p, xi));

  bool any_nonzero = false;
  for (const CVec& c : sphere_samples(k, m)) {
    Vec xi = Vec::Zero(frame.dim());
    CMat A = CMat::Zero(frame.n, frame.n);
    for (int i = 0; i < k; ++i) {
      xi += c[i].real() * basis.xi[i];
      A += c[i].real() * A_basis[i].A;
    }
    Eigen::SelfAdjointEigenSolver<CMat> eig(A);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    const bool is_zero = std::max(std::abs(lmin), std::abs(lmax)) < kEigZero;
    const bool indefinite = lmax >= kEigZero && lmin <= -kEigZero;
    if (is_zero) continue;
    any_nonzero = true;
    if (!indefinite) {
      out.verdict = Signature::Fails;
      out.witness = LeviMatrix{p, xi, A};
      return out;
    }
  }
  out.verdict = any_nonzero ? Signature::IndefiniteEverywhere : Signature::AllZero;
  return out;
}

CertifyOutcome certify_from_matrices(const std::vector<CMat>& levi_matrices,
                                     int max_iterations) {
  if (levi_matrices.empty()) throw SolveError("certify: no Levi matrices supplied");
  const int n = static_cast<int>(levi_matrices[0].rows());
  const int np = herm_params(n);
  const int nv = np + 1;  // parameters plus t

  LpProblem lp;
  lp.c = Vec::Zero(nv);
  lp.c[np] = 1.0;

  const int m_eq = 1 + static_cast<int>(levi_matrices.size());
  lp.eq_A = Mat::Zero(m_eq, nv);
  lp.eq_b = Vec::Zero(m_eq);
  for (int j = 0; j < n; ++j) lp.eq_A(0, j) = 1.0;  // trace(G) = n
  lp.eq_b[0] = n;
  for (size_t i = 0; i < levi_matrices.size(); ++i) {
    lp.eq_A.row(1 + i).head(np) = trace_functional(levi_matrices[i]).transpose();
  }

  CertifyOutcome out;
  // Seed with the coordinate directions so t is bounded from the start.
  for (int j = 0; j < n; ++j) {
    CVec e = CVec::Zero(n);
    e[j] = 1.0;
    out.cuts.push_back(e);
  }

  for (int iter = 1; iter <= max_iterations; ++iter) {
    out.iterations = iter;
    const int m_ge = static_cast<int>(out.cuts.size());
    lp.ge_A = Mat::Zero(m_ge, nv);
    lp.ge_b = Vec::Zero(m_ge);
    for (int i = 0; i < m_ge; ++i) {
      lp.ge_A.row(i).head(np) = quad_functional(out.cuts[i]).transpose();
      lp.ge_A(i, np) = -1.0;  // w* G w - t >= 0
    }

    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::Unbounded)
      throw SolveError("certify: linear program unbounded (Levi matrix data suspect)");
    if (res.status == LpStatus::Infeasible) {
      out.status = CertifyStatus::Infeasible;
      out.note = "trace constraints admit no Hermitian solution";
      return out;
    }

    const double t = res.x[np];
    const CMat G = unpack_hermitian(res.x.head(np), n);
    Eigen::SelfAdjointEigenSolver<CMat> eig(G);
    const double lmin = eig.eigenvalues().minCoeff();
    out.best_t = t;

    if (lmin >= t - kCutClose) {
      if (t >= kFeasibleT) {
        MetricCertificate cert;
        cert.G = G;
        cert.lambda_min = lmin;
        for (const CMat& A : levi_matrices) {
          cert.residuals.push_back(std::abs((G * A).trace().real()));
        }
        out.status = CertifyStatus::Feasible;
        out.certificate = cert;
      } else if (t > 0.0) {
        out.status = CertifyStatus::Inconclusive;
        out.note = "optimal t in the gap band (0, 1e-6): boundary of the cone";
      } else {
        out.status = CertifyStatus::Infeasible;
        out.note = "optimal t <= 0: no interior Hermitian solution";
      }
      return out;
    }

    int which = 0;
    eig.eigenvalues().minCoeff(&which);
    CVec w = eig.eigenvectors().col(which);
    for (int i = 0; i < n; ++i) {
      if (std::abs(w[i]) > 1e-9) {
        w *= std::conj(w[i]) / std::abs(w[i]);
        break;
      }
    }
    out.cuts.push_back(w);
  }
  out.status = CertifyStatus::Inconclusive;
  out.note = "iteration cap exceeded";
  return out;
}

CertifyOutcome certify_metric(const CRFrame& frame, const Vec& p, int max_iterations) {
  const CharacteristicBasis basis = characteristic_basis(frame, p);
  std::vector<CMat> mats;
  for (const Vec& xi : basis.xi) mats.push_back(levi_matrix(frame, p, xi).A);
  if (mats.empty()) {
    // k == 0: no trace constraints; the identity is always a certificate.
    CertifyOutcome out;
    out.status = CertifyStatus::Feasible;
    out.best_t = 1.0;
    MetricCertificate cert;
    cert.point = p;
    cert.G = CMat::Identity(frame.n, frame.n);
    cert.lambda_min = 1.0;
    out.certificate = cert;
    return out;
  }
  CertifyOutcome out = certify_from_matrices(mats, max_iterations);
  if (out.certificate) out.certificate->point = p;
  return out;
}

int RegionGrid::total() const {
  int t = 1;
  for (int c : counts) t *= c;
  return t;
}

Vec RegionGrid::point(const std::vector<int>& idx) const {
  const int d = static_cast<int>(counts.size());
  Vec p(d);
  for (int i = 0; i < d; ++i) {
    if (counts[i] == 1) {
      p[i] = 0.5 * (lo[i] + hi[i]);
    } else {
      p[i] = lo[i] + (hi[i] - lo[i]) * double(idx[i]) / double(counts[i] - 1);
    }
  }
  return p;
}

std::vector<Vec> RegionGrid::points() const {
  const int d = static_cast<int>(counts.size());
  std::vector<Vec> pts;
  pts.reserve(total());
  std::vector<int> idx(d, 0);
  for (;;) {
    pts.push_back(point(idx));
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[axis] < counts[axis]) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return pts;
}

RegionReport certify_region(const CRFrame& frame, const RegionGrid& grid,
                            int max_iterations) {
  RegionReport report;
  report.grid = grid;
  report.points = grid.points();

  for (const Vec& p : report.points) {
    try {
      report.outcomes.push_back(certify_metric(frame, p, max_iterations));
    } catch (const std::exception& e) {
      CertifyOutcome bad;
      bad.status = CertifyStatus::Inconclusive;
      bad.note = e.what();
      report.outcomes.push_back(bad);
      report.errors.push_back(e.what());
    }
  }

  report.all_feasible = true;
  for (const auto& o : report.outcomes) {
    if (o.status != CertifyStatus::Feasible) report.all_feasible = false;
  }

  // Lipschitz diagnostic over lattice edges.
  const int d = static_cast<int>(grid.counts.size());
  std::vector<int> strides(d, 1);
  for (int i = d - 2; i >= 0; --i) strides[i] = strides[i + 1] * grid.counts[i + 1];
  double worst = 0.0;
  std::vector<int> idx(d, 0);
  for (int flat = 0; flat < grid.total(); ++flat) {
    for (int axis = 0; axis < d; ++axis) {
      if (idx[axis] + 1 < grid.counts[axis]) {
        const int nb = flat + strides[axis];
        const auto& a = report.outcomes[flat];
        const auto& b = report.outcomes[nb];
        if (a.certificate && b.certificate) {
          const double dg = (a.certificate->G - b.certificate->G).norm();
          const double dp = (report.points[flat] - report.points[nb]).norm();
          if (dp > 0) worst = std::max(worst, dg / dp);
        }
      }
    }
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[axis] < grid.counts[axis]) break;
      idx[axis] = 0;
      --axis;
    }
  }
  report.lipschitz_constant = worst;
  return report;
}

}  // namespace crwb

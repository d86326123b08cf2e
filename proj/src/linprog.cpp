#include "crwb/linprog.hpp"

#include <limits>

namespace crwb {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-9;

struct Tableau {
  Mat A;               // m x ncols
  Vec b;               // m, kept >= 0
  std::vector<int> basis;  // m basic column indices

  // One simplex phase minimizing cost.x over the current tableau; columns with
  // allowed[j] == false never enter. Returns false on unbounded.
  bool minimize(const Vec& cost, const std::vector<bool>& allowed, double& value) {
    const int m = static_cast<int>(A.rows());
    const int ncols = static_cast<int>(A.cols());
    Vec r = cost;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
      const double cb = cost[basis[i]];
      if (cb != 0.0) {
        r -= cb * A.row(i).transpose();
        z -= cb * b[i];
      }
    }
    for (;;) {
      int enter = -1;  // Bland: smallest admissible index
      for (int j = 0; j < ncols; ++j) {
        if (allowed[j] && r[j] < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) {
        value = -z;
        return true;
      }
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = A(i, enter);
        if (a > kPivotTol) {
          const double ratio = b[i] / a;
          if (ratio < best - 1e-12 ||
              (ratio < best + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, r, z);
    }
  }

  void pivot(int row, int col, Vec& r, double& z) {
    const double piv = A(row, col);
    A.row(row) /= piv;
    b[row] /= piv;
    for (int i = 0; i < A.rows(); ++i) {
      if (i == row) continue;
      const double f = A(i, col);
      if (f != 0.0) {
        A.row(i) -= f * A.row(row);
        b[i] -= f * b[row];
        if (b[i] < 0 && b[i] > -1e-12) b[i] = 0.0;
      }
    }
    const double f = r[col];
    if (f != 0.0) {
      r -= f * A.row(row).transpose();
      z -= f * b[row];
    }
    basis[row] = col;
  }
};

}  // namespace

LpResult solve_lp(const LpProblem& prob) {
  const int n = static_cast<int>(prob.c.size());
  const int m_eq = static_cast<int>(prob.eq_b.size());
  const int m_ge = static_cast<int>(prob.ge_b.size());
  const int m = m_eq + m_ge;

  // Columns: u (n), w (n) with x = u - w, then one surplus per ge row, then
  // one artificial per row.
  const int col_u = 0;
  const int col_w = n;
  const int col_s = 2 * n;
  const int col_a = 2 * n + m_ge;
  const int ncols = 2 * n + m_ge + m;

  Tableau t;
  t.A = Mat::Zero(m, ncols);
  t.b = Vec::Zero(m);
  t.basis.resize(m);

  for (int i = 0; i < m; ++i) {
    Vec row;
    double rhs;
    if (i < m_eq) {
      row = prob.eq_A.row(i).transpose();
      rhs = prob.eq_b[i];
    } else {
      row = prob.ge_A.row(i - m_eq).transpose();
      rhs = prob.ge_b[i - m_eq];
    }
    double sgn = 1.0;
    if (rhs < 0) {
      sgn = -1.0;
      rhs = -rhs;
      row = -row;
    }
    t.A.block(i, col_u, 1, n) = row.transpose();
    t.A.block(i, col_w, 1, n) = -row.transpose();
    if (i >= m_eq) t.A(i, col_s + (i - m_eq)) = -sgn;
    t.A(i, col_a + i) = 1.0;
    t.b[i] = rhs;
    t.basis[i] = col_a + i;
  }

  // Phase 1: drive the artificials to zero.
  Vec phase1 = Vec::Zero(ncols);
  for (int i = 0; i < m; ++i) phase1[col_a + i] = 1.0;
  std::vector<bool> allowed(ncols, true);
  double v1 = 0.0;
  if (!t.minimize(phase1, allowed, v1)) return {LpStatus::Infeasible, Vec(), 0.0};
  if (v1 > 1e-7) return {LpStatus::Infeasible, Vec(), 0.0};

  // Pivot residual basic artificials out where possible.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= col_a) {
      for (int j = 0; j < col_a; ++j) {
        if (std::abs(t.A(i, j)) > 1e-8) {
          Vec dummy = Vec::Zero(ncols);
          double zz = 0.0;
          t.pivot(i, j, dummy, zz);
          break;
        }
      }
    }
  }
  for (int j = col_a; j < ncols; ++j) allowed[j] = false;

  // Phase 2: maximize c.x == minimize (-c).x.
  Vec phase2 = Vec::Zero(ncols);
  phase2.segment(col_u, n) = -prob.c;
  phase2.segment(col_w, n) = prob.c;
  double v2 = 0.0;
  if (!t.minimize(phase2, allowed, v2)) return {LpStatus::Unbounded, Vec(), 0.0};

  Vec x = Vec::Zero(n);
  for (int i = 0; i < m; ++i) {
    const int bcol = t.basis[i];
    if (bcol < n) {
      x[bcol] += t.b[i];
    } else if (bcol < 2 * n) {
      x[bcol - n] -= t.b[i];
    }
  }
  return {LpStatus::Optimal, x, prob.c.dot(x)};
}

}  // namespace crwb

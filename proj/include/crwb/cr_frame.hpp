#ifndef CRWB_CR_FRAME_HPP
#define CRWB_CR_FRAME_HPP

#include <vector>

#include "crwb/chart.hpp"
#include "crwb/fields.hpp"

namespace crwb {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Frame for an almost CR structure of type (n,k) on a chart of dimension
/// 2n+k: real fields X_1..X_n, JX_1..JX_n spanning HM, with J acting by
/// X_j -> JX_j, JX_j -> -X_j on the frame. The derived antiholomorphic
/// fields are Lbar_j = X_j + i JX_j.
struct CRFrame {
  const Chart* chart = nullptr;
  int n = 0;
  int k = 0;
  std::vector<VectorField> X;
  std::vector<VectorField> JX;

  int dim() const { return 2 * n + k; }

  const VectorField& field(int i) const { return i < n ? X[i] : JX[i - n]; }

  /// Values of the 2n frame fields as columns of an N x 2n matrix.
  Mat frame_matrix(const Vec& p) const;

  /// Values of Lbar_1..Lbar_n as columns of an N x n complex matrix.
  CMat lbar_matrix(const Vec& p) const;

  /// Realize a complex tangent coefficient vector v as a real field value:
  /// sum_j Re(v_j) X_j(p) + Im(v_j) JX_j(p).
  Vec realize(const CVec& v, const Vec& p) const;
};

/// Validates dimensions and the pointwise rank invariant (smallest singular
/// value of the frame matrix >= 1e-8 at deterministic probe points).
CRFrame build_frame(const Chart& chart, int n, int k, std::vector<VectorField> X,
                    std::vector<VectorField> JX, int probe_count = 40);

/// Orthonormal basis of the annihilator of HM at p, with deterministic sign
/// convention (first component of magnitude > 1e-9 is positive).
struct CharacteristicBasis {
  Vec point;
  std::vector<Vec> xi;
};

CharacteristicBasis characteristic_basis(const CRFrame& frame, const Vec& p);

/// Hermitian matrix A of the Levi form at p against a characteristic
/// covector xi: v* A v = <xi, [J vt, vt](p)> for the constant-coefficient
/// frame extension vt of the tangent vector with complex coordinates v.
struct LeviMatrix {
  Vec point;
  Vec xi;
  CMat A;
};

LeviMatrix levi_matrix(const CRFrame& frame, const Vec& p, const Vec& xi);

/// Norm of the components of all [Lbar_i, Lbar_j](p) orthogonal to
/// span{Lbar_1(p), ..., Lbar_n(p)}; ~0 certifies integrability at p.
double integrability_residual(const CRFrame& frame, const Vec& p);

/// (Lbar_1 u, ..., Lbar_n u) at p; u is CR at p iff all components vanish.
CVec dbar_apply(const CRFrame& frame, const ComplexFunction& u, const Vec& p);

/// Max dbar component magnitude over a point set.
double dbar_residual(const CRFrame& frame, const ComplexFunction& u,
                     const std::vector<Vec>& points);

}  // namespace crwb

#endif

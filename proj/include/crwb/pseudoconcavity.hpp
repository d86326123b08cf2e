#ifndef CRWB_PSEUDOCONCAVITY_HPP
#define CRWB_PSEUDOCONCAVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "crwb/cr_frame.hpp"

namespace crwb {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Signature { AllZero, IndefiniteEverywhere, Fails };

/// Spectral necessary test: on sampled unit characteristic covectors the
/// Levi form must be zero or have eigenvalues of both signs.
struct SignatureVerdict {
  Vec point;
  int samples = 0;
  Signature verdict = Signature::AllZero;
  std::optional<LeviMatrix> witness;  // offending covector when verdict == Fails
};

SignatureVerdict signature_test(const CRFrame& frame, const Vec& p, int m);

/// Positive-definite Hermitian G with trace(G) = n and trace(G A(xi_i)) = 0,
/// witnessing the trace condition at a point.
struct MetricCertificate {
  Vec point;
  CMat G;
  double lambda_min = 0.0;
  std::vector<double> residuals;  // |trace(G A(xi_i))| per basis covector
};

enum class CertifyStatus { Feasible, Infeasible, Inconclusive };

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::Infeasible;
  std::optional<MetricCertificate> certificate;
  double best_t = 0.0;
  int iterations = 0;
  std::vector<CVec> cuts;  // minimum-eigenvalue directions accumulated
  std::string note;
};

/// Matrix-level feasibility: maximize t s.t. G Hermitian, trace(G) = n,
/// trace(G A_i) = 0, G >= t I, by cutting planes over a dense simplex LP.
CertifyOutcome certify_from_matrices(const std::vector<CMat>& levi_matrices,
                                     int max_iterations = 500);

CertifyOutcome certify_metric(const CRFrame& frame, const Vec& p,
                              int max_iterations = 500);

/// Tensor lattice of points inside a box.
struct RegionGrid {
  Vec lo;
  Vec hi;
  std::vector<int> counts;

  int total() const;
  Vec point(const std::vector<int>& idx) const;
  std::vector<Vec> points() const;
};

struct RegionReport {
  RegionGrid grid;
  std::vector<Vec> points;
  std::vector<CertifyOutcome> outcomes;
  std::vector<std::string> errors;   // collected per-point failures
  double lipschitz_constant = 0.0;   // max ||G(p)-G(q)||_F / ||p-q|| over edges
  bool all_feasible = false;
  // Pointwise certificates plus a Lipschitz diagnostic are evidence, not
  // proof, of a smooth section.
  std::string smoothness_label = "pointwise certified, smoothness diagnostic only";
};

RegionReport certify_region(const CRFrame& frame, const RegionGrid& grid,
                            int max_iterations = 500);

}  // namespace crwb

#endif

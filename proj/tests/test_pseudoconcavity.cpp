#include <doctest.h>

#include "crwb/gallery.hpp"
#include "crwb/linprog.hpp"
#include "crwb/pseudoconcavity.hpp"

using namespace crwb;

namespace {

Vec pt3(double a, double b, double c) {
  Vec p(3);
  p << a, b, c;
  return p;
}

// Re-derive certificate quality from scratch; never trust solver output.
void check_certificate_sound(const CRFrame& frame, const Vec& p,
                             const MetricCertificate& cert) {
  const int n = frame.n;
  CHECK((cert.G - cert.G.adjoint()).norm() <= 1e-12);
  CHECK(std::abs(cert.G.trace().real() - n) <= 1e-9);
  Eigen::SelfAdjointEigenSolver<CMat> eig(cert.G);
  CHECK(eig.eigenvalues().minCoeff() >= 1e-6);
  auto cb = characteristic_basis(frame, p);
  for (const Vec& xi : cb.xi) {
    const CMat A = levi_matrix(frame, p, xi).A;
    CHECK(std::abs((cert.G * A).trace().real()) <= 1e-9);
  }
}

}  // namespace

TEST_CASE("simplex: bounded maximization") {
  LpProblem lp;
  lp.c = Vec(2);
  lp.c << 3, 2;
  lp.eq_A = Mat::Zero(0, 2);
  lp.eq_b = Vec::Zero(0);
  lp.ge_A = Mat(5, 2);
  lp.ge_A << 1, 0, 0, 1, -1, -1, -1, 0, 0, -1;
  lp.ge_b = Vec(5);
  lp.ge_b << 0, 0, -4, -2, -3;
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == doctest::Approx(10.0));
  CHECK(res.x[0] == doctest::Approx(2.0));
  CHECK(res.x[1] == doctest::Approx(2.0));
}

TEST_CASE("simplex: equality system, free variables, infeasible, unbounded") {
  LpProblem lp;
  lp.c = Vec(1);
  lp.c << -1;
  lp.eq_A = Mat::Zero(0, 1);
  lp.eq_b = Vec::Zero(0);
  lp.ge_A = Mat(1, 1);
  lp.ge_A << 1;
  lp.ge_b = Vec(1);
  lp.ge_b << -5;
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[0] == doctest::Approx(-5.0));

  LpProblem bad;
  bad.c = Vec(1);
  bad.c << 1;
  bad.eq_A = Mat(2, 1);
  bad.eq_A << 1, 1;
  bad.eq_b = Vec(2);
  bad.eq_b << 1, 2;
  bad.ge_A = Mat::Zero(0, 1);
  bad.ge_b = Vec::Zero(0);
  CHECK(solve_lp(bad).status == LpStatus::Infeasible);

  LpProblem unb;
  unb.c = Vec(1);
  unb.c << 1;
  unb.eq_A = Mat::Zero(0, 1);
  unb.eq_b = Vec::Zero(0);
  unb.ge_A = Mat(1, 1);
  unb.ge_A << 1;
  unb.ge_b = Vec(1);
  unb.ge_b << 0;
  CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("certify leviflat: identity certificate") {
  auto m = load_gallery("leviflat");
  auto out = certify_metric(m->frame, Vec::Zero(3));
  REQUIRE(out.status == CertifyStatus::Feasible);
  REQUIRE(out.certificate.has_value());
  CHECK(std::abs(out.certificate->G(0, 0) - Complex(1, 0)) <= 1e-12);
  CHECK(out.certificate->lambda_min == doctest::Approx(1.0));
  CHECK(out.certificate->residuals[0] <= 1e-12);
  check_certificate_sound(m->frame, Vec::Zero(3), *out.certificate);
}

TEST_CASE("certify heisenberg: infeasible by the 1x1 positivity argument") {
  auto m = load_gallery("heisenberg");
  auto out = certify_metric(m->frame, Vec::Zero(3));
  CHECK(out.status == CertifyStatus::Infeasible);
  out = certify_metric(m->frame, pt3(0.3, -0.4, 0.2));
  CHECK(out.status == CertifyStatus::Infeasible);
}

TEST_CASE("certify quadric11: identity Gram matrix at the origin") {
  auto m = load_gallery("quadric11");
  auto out = certify_metric(m->frame, Vec::Zero(5));
  REQUIRE(out.status == CertifyStatus::Feasible);
  CHECK((out.certificate->G - CMat::Identity(2, 2)).norm() <= 1e-8);
  check_certificate_sound(m->frame, Vec::Zero(5), *out.certificate);
}

TEST_CASE("cutting planes engage when trace constraints force off-diagonals") {
  // Constraints pin G = [[1, -1/2 + ie], [-1/2 - ie, 1]]; optimum t = 1/2.
  std::vector<CMat> mats;
  CMat A1(2, 2), A2(2, 2);
  A1 << 1, 0, 0, -1;
  A2 << 1, 2, 2, 1;
  mats = {A1, A2};
  auto out = certify_from_matrices(mats);
  REQUIRE(out.status == CertifyStatus::Feasible);
  CHECK(out.iterations >= 2);  // the seed LP alone is not eigenvalue-optimal
  CHECK(out.best_t == doctest::Approx(0.5));
  CHECK(out.certificate->G(0, 1).real() == doctest::Approx(-0.5));
  Eigen::SelfAdjointEigenSolver<CMat> eig(out.certificate->G);
  CHECK(eig.eigenvalues().minCoeff() == doctest::Approx(0.5));
}

TEST_CASE("definite matrices are infeasible at any size") {
  CMat A1(1, 1);
  A1 << 4;
  CHECK(certify_from_matrices({A1}).status == CertifyStatus::Infeasible);

  CMat A2(2, 2);
  A2 << 1, 0, 0, 0.5;
  CHECK(certify_from_matrices({A2}).status == CertifyStatus::Infeasible);
}

TEST_CASE("signature test: gallery verdicts") {
  auto levi = load_gallery("leviflat");
  CHECK(signature_test(levi->frame, Vec::Zero(3), 9).verdict == Signature::AllZero);

  auto heis = load_gallery("heisenberg");
  auto v = signature_test(heis->frame, Vec::Zero(3), 9);
  REQUIRE(v.verdict == Signature::Fails);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->A(0, 0).real() == doctest::Approx(4.0));
  CHECK((v.witness->xi - pt3(0, 0, 1)).norm() <= 1e-10);

  auto quad = load_gallery("quadric11");
  CHECK(signature_test(quad->frame, Vec::Zero(5), 9).verdict ==
        Signature::IndefiniteEverywhere);
}

TEST_CASE("failed signature witnesses have eigenvalues of one strict sign") {
  auto heis = load_gallery("heisenberg");
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    Vec p = rng.point_in(heis->chart.lo, heis->chart.hi, 0.1);
    auto v = signature_test(heis->frame, p, 5);
    REQUIRE(v.verdict == Signature::Fails);
    Eigen::SelfAdjointEigenSolver<CMat> eig(v.witness->A);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    CHECK(std::max(std::abs(lmin), std::abs(lmax)) >= 1e-8);
    CHECK(((lmin >= -1e-8 && lmax > 0) || (lmax <= 1e-8 && lmin < 0)));
  }
}

TEST_CASE("prop-consistency: certified points never fail the signature test") {
  for (const char* name : {"leviflat", "quadric11"}) {
    auto m = load_gallery(name);
    for (const Vec& p : m->chart.probe_points(15, 0.1)) {
      auto cert = certify_metric(m->frame, p);
      REQUIRE(cert.status == CertifyStatus::Feasible);
      CHECK(signature_test(m->frame, p, 2 * m->frame.k + 3).verdict != Signature::Fails);
    }
  }
}

TEST_CASE("scale invariance of verdicts and certificates") {
  for (const char* name : {"heisenberg", "quadric11"}) {
    auto base = load_gallery(name);
    auto scaled = load_gallery(name);
    const CoefficientExpr two = CoefficientExpr::constant(2.0, base->chart.dim);
    std::vector<VectorField> X2, JX2;
    for (const auto& f : scaled->frame.X) X2.push_back(f.scaled(two));
    for (const auto& f : scaled->frame.JX) JX2.push_back(f.scaled(two));
    CRFrame frame2 = build_frame(scaled->chart, scaled->frame.n, scaled->frame.k,
                                 std::move(X2), std::move(JX2));
    Vec p = Vec::Zero(base->chart.dim);
    auto a = certify_metric(base->frame, p);
    auto b = certify_metric(frame2, p);
    CHECK(a.status == b.status);
    if (a.certificate && b.certificate) {
      CHECK((a.certificate->G - b.certificate->G).norm() <= 1e-9);
    }
  }
}

TEST_CASE("certification is deterministic") {
  auto m = load_gallery("quadric11");
  Vec p(5);
  p << 0.21, -0.13, 0.34, 0.05, -0.27;
  auto a = certify_metric(m->frame, p);
  auto b = certify_metric(m->frame, p);
  REQUIRE(a.status == b.status);
  REQUIRE(a.certificate.has_value());
  CHECK((a.certificate->G - b.certificate->G).norm() == 0.0);
  CHECK(a.best_t == b.best_t);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("region certification: gallery grids") {
  auto levi = load_gallery("leviflat");
  RegionGrid g3{Vec::Constant(3, -0.5), Vec::Constant(3, 0.5), {3, 3, 3}};
  auto report = certify_region(levi->frame, g3);
  CHECK(report.all_feasible);
  CHECK(report.lipschitz_constant <= 1e-12);
  CHECK(report.points.size() == 27);

  auto heis = load_gallery("heisenberg");
  report = certify_region(heis->frame, g3);
  CHECK_FALSE(report.all_feasible);
  for (const auto& o : report.outcomes) CHECK(o.status == CertifyStatus::Infeasible);

  auto quad = load_gallery("quadric11");
  RegionGrid g5{Vec::Constant(5, -0.5), Vec::Constant(5, 0.5), {3, 3, 3, 3, 3}};
  auto r5 = certify_region(quad->frame, g5);
  CHECK(r5.all_feasible);
  CHECK(r5.points.size() == 243);
  for (size_t i = 0; i < r5.points.size(); ++i) {
    check_certificate_sound(quad->frame, r5.points[i], *r5.outcomes[i].certificate);
  }
}

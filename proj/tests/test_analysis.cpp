#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <hcrown/hcrown.hpp>

#include "oracles.hpp"

using namespace hcrown;

namespace {

std::mt19937_64 rng(41);
double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

ComplexGroupPoint random_cpoint(const SolvGroup& g, double scale) {
  return {scale * CVec::Random(g.p()), scale * CVec::Random(g.q()), Complex(uni(-scale, scale), uni(-scale, scale))};
}

// Ad(z)X as the derivative of eps -> z exp(eps X) z^{-1}, read in the chart at the identity.
CVec adjoint_by_differences(const SolvGroup& g, const ComplexGroupPoint& z, int k) {
  auto conj = [&](double eps) {
    ComplexGroupPoint e = c_identity(g);
    if (k < g.p()) {
      e.Wv(k) = eps;
    } else if (k < g.p() + g.q()) {
      e.Wz(k - g.p()) = eps;
    } else {
      e.zeta = eps;
    }
    const ComplexGroupPoint c = c_multiply(g, c_multiply(g, z, e), c_inverse(g, z));
    CVec out(g.dim());
    out << c.Wv, c.Wz, c.zeta;
    return out;
  };
  return oracle::derivative(conj);
}

}  // namespace

TEST(Adjoint, RealAIsDiagonal) {
  const SolvGroup g = SolvGroup::build(2, 1);
  const CMat ad = adjoint(g, a_point(g, 0.6));
  CVec d(g.dim());
  d << CVec::Constant(4, std::exp(0.3)), CVec::Constant(2, std::exp(0.6)), 1.0;
  EXPECT_LT((ad - CMat(d.asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Adjoint, ImaginaryNColumnOfH) {
  const SolvGroup g = SolvGroup::build(3, 1);
  const Vec yv = Vec::Random(4), yz = Vec::Random(3);
  const ComplexGroupPoint z{kI * yv.cast<Complex>(), kI * yz.cast<Complex>(), 0.0};
  const CMat ad = adjoint(g, z);
  CVec expected(g.dim());
  expected << -kI * 0.5 * yv.cast<Complex>(), -kI * yz.cast<Complex>(), 1.0;
  EXPECT_LT((ad.col(g.dim() - 1) - expected).norm(), 1e-15);
  // id + i ad(Y) exactly
  const CMat n = ad - CMat::Identity(g.dim(), g.dim());
  EXPECT_LT((n * n).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Adjoint, MatchesConjugationDerivative) {
  for (int q : {1, 3}) {
    const SolvGroup g = SolvGroup::build(q, 1);
    for (int s = 0; s < 10; ++s) {
      const ComplexGroupPoint z = random_cpoint(g, 0.7);
      const CMat ad = adjoint(g, z);
      for (int k = 0; k < g.dim(); ++k) EXPECT_LT((ad.col(k) - adjoint_by_differences(g, z, k)).norm(), 1e-8);
    }
  }
}

TEST(Adjoint, MultiplicativeAndInverse) {
  const SolvGroup g = SolvGroup::build(2, 1);
  for (int k = 0; k < 200; ++k) {
    const ComplexGroupPoint x = random_cpoint(g, 1.0), y = random_cpoint(g, 1.0);
    EXPECT_LT((adjoint(g, c_multiply(g, x, y)) - adjoint(g, x) * adjoint(g, y)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((adjoint(g, c_inverse(g, x)) - adjoint(g, x).inverse()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Ellipticity, IdentityHasMarginOne) {
  for (int q : {1, 3}) {
    const SolvGroup g = SolvGroup::build(q, 1);
    EXPECT_NEAR(ellipticity_margin(g, c_identity(g)), 1.0, 1e-12);
  }
}

TEST(Ellipticity, PureImaginaryA) {
  // Q = e^{it}|xi_v|^2 + e^{2it}|xi_z|^2 + xi_H^2
  const SolvGroup g = SolvGroup::build(1, 1);
  for (double t : {0.3, 1.0, 1.5}) {
    const double m = ellipticity_margin(g, a_point(g, Complex(0.0, t)));
    EXPECT_GT(m, 1e-6) << t;
    const CMat l = symbol_matrix(g, a_point(g, Complex(0.0, t)));
    EXPECT_NEAR(m, oracle::dual_margin(l.real(), l.imag()), 1e-8);
  }
  EXPECT_LT(ellipticity_margin(g, a_point(g, Complex(0.0, 0.5 * kPi))), 1e-8);
}

TEST(Ellipticity, SymbolIsSumOfSquares) {
  const SolvGroup g = SolvGroup::build(1, 1);
  const ComplexGroupPoint z = random_cpoint(g, 0.5);
  const Vec xi = Vec::Random(g.dim());
  const CMat ad = adjoint(g, z);
  // AdAdT: sum over basis X_k of (xi . Ad X_k)^2
  Complex s = 0.0;
  for (int k = 0; k < g.dim(); ++k) s += std::pow(Complex((ad.col(k).transpose() * xi.cast<Complex>())(0)), 2);
  EXPECT_LT(std::abs(symbol(g, z, xi) - s), 1e-13);
  const CVec adxi = ad * xi.cast<Complex>();
  EXPECT_LT(std::abs(symbol(g, z, xi, SymbolForm::AdTAd) - Complex((adxi.transpose() * adxi)(0))), 1e-13);
}

TEST(Ellipticity, MarginMatchesDualOracle) {
  for (int q : {1, 3}) {
    const SolvGroup g = SolvGroup::build(q, 1);
    for (int k = 0; k < 30; ++k) {
      CrownCoords c{Vec::Zero(g.p()), Vec::Zero(g.q()), 0.0, uni(-1.5, 1.5), 0.6 * Vec::Random(g.p()),
                    0.6 * Vec::Random(g.q())};
      const ComplexGroupPoint z = mixed_compose(g, c);
      const CMat l = symbol_matrix(g, z);
      const double m = ellipticity_margin(g, z);
      const double ref = oracle::dual_margin(l.real(), l.imag());
      EXPECT_NEAR(m, ref, 1e-7 + 1e-6 * ref) << "q=" << q;
    }
  }
}

TEST(Ellipticity, NonEllipticInsideDForLargeV) {
  // q = 1, z = exp(iY) with Y = |V| e_1: Z^* is a real isotropic vector once |V| >= 1,
  // although D reaches |V| < sqrt 2 at t = 0.
  const SolvGroup g = SolvGroup::build(1, 1);
  for (double v : {1.0, 1.2, 1.4}) {
    ASSERT_TRUE(in_D(v, 0.0, 0.0));
    const ComplexGroupPoint z = norm_ray_point(g, v, 0.0, 0.0, 1.0);
    Vec xi = Vec::Zero(4);
    xi(2) = 1.0;
    EXPECT_LT(std::abs(symbol(g, z, xi).imag()), 1e-15);
    EXPECT_LT(ellipticity_margin(g, z), 1e-8) << v;
  }
  EXPECT_GT(ellipticity_margin(g, norm_ray_point(g, 0.9, 0.0, 0.0, 1.0)), 1e-3);
}

TEST(Ellipticity, SL2Roots) {
  for (int k = 0; k < 200; ++k) {
    const double x = uni(-2, 2), t = uni(-1.5, 1.5);
    auto roots = sl2_symbol_roots(x, t);
    auto ref = oracle::sl2_roots(x, t);
    const double d1 = std::abs(roots[0] - ref[0]) + std::abs(roots[1] - ref[1]);
    const double d2 = std::abs(roots[0] - ref[1]) + std::abs(roots[1] - ref[0]);
    EXPECT_LT(std::min(d1, d2), 1e-12);
  }
  // real roots exactly at x = -1, 1 or t = +-pi/2
  for (double x : {-1.0, 1.0}) {
    const auto r = sl2_symbol_roots(x, 0.7);
    EXPECT_TRUE(std::abs(r[0].imag()) < 1e-15 || std::abs(r[1].imag()) < 1e-15);
  }
  for (double t : {0.5 * kPi, -0.5 * kPi}) {
    const auto r = sl2_symbol_roots(0.3, t);
    EXPECT_LT(std::abs(r[0].imag()) + std::abs(r[1].imag()), 1e-15);
  }
  const auto r = sl2_symbol_roots(0.3, 0.7);
  EXPECT_GT(std::min(std::abs(r[0].imag()), std::abs(r[1].imag())), 0.1);
}

TEST(Ellipticity, SL2SymbolEntries) {
  const double x = 0.4, t = 0.9;
  const Eigen::Matrix2cd l = sl2_symbol_matrix(x, t);
  EXPECT_LT(std::abs(l(0, 0) - 1.0), 1e-15);
  EXPECT_LT(std::abs(l(0, 1) + kI * x * std::exp(kI * t)), 1e-15);
  EXPECT_LT(std::abs(l(1, 1) - std::exp(2.0 * kI * t) * (1.0 - x * x)), 1e-15);
}

TEST(SphereMin, KnownMinimum) {
  // A = diag(1, -1, 2), B = 0: min |xi^T A xi| = 0 at (1, 1, 0)/sqrt 2.
  Mat a = Eigen::Vector3d(1.0, -1.0, 2.0).asDiagonal();
  const SphereMinResult r = minimize_form_pair(a, Mat::Zero(3, 3));
  EXPECT_LT(r.value, 1e-12);
  EXPECT_NEAR(r.argmin.norm(), 1.0, 1e-14);
  Mat pos = Eigen::Vector3d(1.0, 3.0, 2.0).asDiagonal();
  EXPECT_NEAR(minimize_form_pair(pos, Mat::Zero(3, 3)).value, 1.0, 1e-10);
}

TEST(ALambda, Basics) {
  const SolvGroup g = SolvGroup::build(1, 1);
  const GroupPoint x{Vec::Random(2), Vec::Random(1), 0.8};
  EXPECT_EQ(a_lambda(g, x, {0.0}), Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(a_lambda(g, x, {1.0}) - std::exp(0.8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a_lambda(g, complexify(x), {1.0}) - std::exp(0.8)), 0.0, 1e-15);
  const ComplexGroupPoint inside = a_point(g, Complex(0.2, 0.5));
  EXPECT_NEAR(std::abs(a_lambda(g, inside, {Complex(0.5, 0.7)}) - std::exp(Complex(0.5, 0.7) * Complex(0.2, 0.5))),
              0.0, 1e-15);
  EXPECT_THROW(a_lambda(g, a_point(g, Complex(0.0, 2.0)), {1.0}), std::domain_error);
  EXPECT_TRUE(SpectralParam{Complex(0.5, -3.0)}.positive());
  EXPECT_FALSE(SpectralParam{Complex(0.0, 1.0)}.positive());
}

TEST(ALambda, EigenfunctionIdentity) {
  for (int q : {1, 3}) {
    const SolvGroup g = SolvGroup::build(q, 1);
    for (Complex c : {Complex(1.0), Complex(2.0 * g.rho()), Complex(0.5, 0.7)}) {
      const SpectralParam lambda{c};
      for (int k = 0; k < 20; ++k) {
        const GroupPoint x{0.5 * Vec::Random(g.p()), 0.5 * Vec::Random(g.q()), uni(-1, 1)};
        auto f = [&](const GroupPoint& y) { return a_lambda(g, y, lambda); };
        const Complex lap = apply_laplacian(g, f, x);
        const Complex expected = eigenvalue(g, lambda) * f(x);
        EXPECT_LT(std::abs(lap - expected), 1e-6 * std::max(std::abs(expected), std::abs(f(x))));
      }
    }
  }
}

TEST(Probe, AxisRayFailsAtHalfPi) {
  const SolvGroup g = SolvGroup::build(1, 1);
  ProbeOptions po;
  po.with_margin = false;
  po.overshoot = 0.7;
  const ProbeReport r = boundary_probe(g, Vec::Zero(2), Vec::Zero(1), 1.0, {1.0}, po);
  ASSERT_TRUE(r.membership_exit.has_value());
  EXPECT_NEAR(*r.membership_exit, 0.5 * kPi, 1e-10);
  ASSERT_TRUE(r.degenerate_at.has_value());
  EXPECT_NEAR(*r.degenerate_at, 0.5 * kPi, 2e-3);
  ASSERT_TRUE(r.ball_exit.has_value());
  EXPECT_NEAR(*r.ball_exit, 0.5 * kPi, 1e-10);
}

TEST(Probe, BoundaryRayFlipsAtOne) {
  const SolvGroup g = SolvGroup::build(1, 1);
  ProbeOptions po;
  po.samples = 23;
  const ProbeReport r = boundary_probe(g, Vec::Unit(2, 0), Vec::Zero(1), 1.23096, {Complex(0.5, 0.7)}, po);
  ASSERT_TRUE(r.membership_exit.has_value());
  EXPECT_NEAR(*r.membership_exit, 1.0, 1e-6);
  // the exit solves the boundary equation along the ray
  EXPECT_NEAR(boundary_residual(*r.membership_exit, 0.0, 1.23096 * *r.membership_exit), 0.0, 1e-10);
  ASSERT_TRUE(r.ball_exit.has_value());
  EXPECT_NEAR(*r.ball_exit, *r.membership_exit, 1e-10);
  EXPECT_FALSE(r.degenerate_at.has_value());
  for (const ProbeRow& row : r.rows) {
    EXPECT_EQ(row.a_lambda.has_value(), row.member);
    EXPECT_EQ(*row.ball_member, row.member);
  }
}

TEST(Probe, ExactBoundaryRayFlipsAtOne) {
  const SolvGroup g = SolvGroup::build(1, 1);
  ProbeOptions po;
  po.with_margin = false;
  const ProbeReport r = boundary_probe(g, Vec::Unit(2, 0), Vec::Zero(1), std::acos(1.0 / 3.0), {1.0}, po);
  ASSERT_TRUE(r.membership_exit.has_value());
  EXPECT_NEAR(*r.membership_exit, 1.0, 1e-6);
}

TEST(Probe, InteriorRayReportsNothing) {
  const SolvGroup g = SolvGroup::build(2, 1);
  ProbeOptions po;
  po.with_margin = false;
  Vec yv = Vec::Zero(4), yz = Vec::Zero(2);
  yv(1) = 0.4;
  yz(0) = 0.3;
  const ProbeReport r = boundary_probe(g, yv, yz, 0.5 * t_max(0.4, 0.3), {1.0}, po);
  EXPECT_FALSE(r.membership_exit.has_value());
  EXPECT_FALSE(r.degenerate_at.has_value());
  EXPECT_FALSE(r.ball_exit.has_value());
  EXPECT_FALSE(r.rows.front().ball_member.has_value());
}

TEST(MeshIO, CsvRoundTripsExactly) {
  const BoundaryMesh mesh = boundary_mesh(5);
  std::stringstream ss;
  write_mesh_csv(ss, mesh);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "absV,absZ,t");
  std::size_t i = 0;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string a, b, c;
    std::getline(ls, a, ',');
    std::getline(ls, b, ',');
    std::getline(ls, c, ',');
    ASSERT_LT(i, mesh.vertices.size());
    EXPECT_EQ(std::stod(a), mesh.vertices[i][0]);
    EXPECT_EQ(std::stod(b), mesh.vertices[i][1]);
    EXPECT_EQ(std::stod(c), mesh.vertices[i][2]);
    ++i;
  }
  EXPECT_EQ(i, 25u);
}

TEST(MeshIO, ObjCounts) {
  const BoundaryMesh mesh = boundary_mesh(4);
  std::stringstream ss;
  write_mesh_obj(ss, mesh);
  int v = 0, f = 0;
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, 16);
  EXPECT_EQ(f, 18);
}

TEST(Verify, AllPropertiesHold) {
  for (int q : {1, 2}) {
    VerifyConfig cfg;
    cfg.q = q;
    cfg.samples = 50;
    for (const PropertyResult& r : run_verification(cfg)) {
      EXPECT_TRUE(r.pass) << "q=" << q << " " << r.name << " worst=" << r.worst;
    }
  }
}

TEST(Verify, TightToleranceFails) {
  VerifyConfig cfg;
  cfg.samples = 20;
  cfg.tol.algebra = 1e-30;
  const auto res = run_verification(cfg);
  EXPECT_TRUE(std::any_of(res.begin(), res.end(), [](const PropertyResult& r) { return !r.pass; }));
}

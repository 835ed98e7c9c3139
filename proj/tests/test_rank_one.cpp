#include <gtest/gtest.h>

#include <random>

#include <hcrown/crown.hpp>
#include <hcrown/rank_one.hpp>

#include "oracles.hpp"

using namespace hcrown;

namespace {

std::mt19937_64 rng(31);
double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace

TEST(SL2, RealElementsGiveConjugatePairs) {
  const auto pr = sl2_pair(0.4, -0.3, 0.0, 0.0);
  ASSERT_FALSE(pr.first.infinite);
  EXPECT_NEAR(std::abs(pr.second.z - std::conj(pr.first.z)), 0.0, 1e-14);
  EXPECT_TRUE(sl2_in_crown(pr));
}

TEST(SL2, CrownIsQuarterStrip) {
  // exp(i t diag(1,-1)) i = e^{2it} i stays in the upper half plane iff |t| < pi/4.
  for (int k = 0; k < 200; ++k) {
    const double t = uni(-1.2, 1.2);
    if (std::abs(std::abs(t) - 0.25 * kPi) < 1e-9) continue;
    EXPECT_EQ(sl2_in_crown(sl2_pair(uni(-2, 2), uni(-1, 1), t, 0.0)), std::abs(t) < 0.25 * kPi) << t;
  }
}

TEST(SL2, DeterminantChecked) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(0, 0) = 2.0;
  EXPECT_THROW(Moebius2{m}, std::invalid_argument);
}

TEST(SU21, NClosedForm) {
  for (int k = 0; k < 100; ++k) {
    const double a = uni(-1, 1), b = uni(-1, 1);
    EXPECT_LT((su21_n(a, b) - oracle::n_closed(a, b)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((su21_n(a, b) - oracle::expm(oracle::kI * oracle::z_ab(a, b))).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(SU21, ZIsNilpotentOfOrderThree) {
  const Mat3c z = su21_Z(Complex(0.3, -0.7), 0.4);
  EXPECT_LT((z * z * z).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT((z * z).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(SU21, RealElementsPreserveForm) {
  EXPECT_LT(su21_form_residual(su21_a(0.8)), 1e-14);
  EXPECT_LT(su21_form_residual(nilpotent_exp(su21_Z(Complex(0.3, -0.7), 0.4))), 1e-14);
  EXPECT_LT(su21_form_residual(su21_m(0.9)), 1e-15);
  // n_{a,b} itself is in SU(2,1)_C but not in SU(2,1)
  EXPECT_GT(su21_form_residual(su21_n(0.5, 0.1)), 1e-3);
}

TEST(SU21, MRotatesA) {
  const double theta = 0.37;
  const Complex a(0.3, 0.2);
  const Mat3c m = su21_m(theta);
  const Mat3c rotated = m * su21_Z(a, 0.25) * m.inverse();
  EXPECT_LT((rotated - su21_Z(std::exp(3.0 * kI * theta) * a, 0.25)).cwiseAbs().maxCoeff(), 1e-15);
  const double th = su21_real_a_angle(a);
  const Complex ra = std::exp(3.0 * kI * th) * a;
  EXPECT_NEAR(ra.imag(), 0.0, 1e-15);
  EXPECT_NEAR(ra.real(), std::abs(a), 1e-15);
}

TEST(SU21, BallPointClosedForm) {
  for (int k = 0; k < 50; ++k) {
    const double a = uni(-0.6, 0.6), b = uni(-0.4, 0.4);
    const Vec2c w = su21_action(su21_n(a, b), Vec2c::Zero());
    const double d = 1.0 + b - 0.5 * a * a;
    EXPECT_LT(std::abs(w(0) - (b - 0.5 * a * a) / d), 1e-14);
    EXPECT_LT(std::abs(w(1) - kI * a / d), 1e-14);
    EXPECT_EQ(in_ball(w), su21_first_component_in_lambda(a, b));
  }
}

TEST(SU21, PartnerFlipsB) {
  for (int k = 0; k < 50; ++k) {
    const double a = uni(-0.6, 0.6), b = uni(-0.4, 0.4), phi = uni(-0.7, 0.7);
    const Mat3c h = su21_a(kI * phi) * su21_n(a, b);
    const Mat3c expected = su21_a(kI * phi) * su21_n(a, -b);
    EXPECT_LT((su21_partner(h) - expected).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(SU21, PartnerOfRealElementIsConjugate) {
  const Mat3c g = nilpotent_exp(su21_Z(Complex(0.2, 0.5), -0.3)) * su21_a(0.4);
  const Ball2Pair pr = ball_pair(g);
  EXPECT_LT((pr.second - pr.first.conjugate()).norm(), 1e-14);
}

TEST(SU21, ComponentConditionMatchesBall) {
  int checked = 0;
  for (int k = 0; k < 20000; ++k) {
    const double a = uni(-0.8, 0.8), b = uni(-0.6, 0.6), phi = uni(-0.25 * kPi, 0.25 * kPi);
    const double c = std::cos(2.0 * phi);
    if (std::abs((1.0 + 2.0 * b - 2.0 * a * a) * c - (1.0 - c) * a * a) < 1e-9) continue;
    const Vec2c w = su21_action(su21_a(kI * phi) * su21_n(a, b), Vec2c::Zero());
    EXPECT_EQ(in_ball(w), su21_component_condition(a, b, phi)) << a << " " << b << " " << phi;
    ++checked;
  }
  EXPECT_GT(checked, 19000);
}

TEST(SU21, PairConditionMatchesBall) {
  for (int k = 0; k < 20000; ++k) {
    const double a = uni(-0.71, 0.71), b = uni(-0.5, 0.5), phi = uni(-0.25 * kPi, 0.25 * kPi);
    if (!su21_in_lambda(a, b) || std::abs(su21_condition_gap(a, b, phi)) < 1e-9) continue;
    EXPECT_EQ(ball_pair_in_crown(su21_point(a, b, phi)), su21_condition(a, b, phi)) << a << " " << b << " " << phi;
  }
}

TEST(SU21, BridgeToD) {
  for (int k = 0; k < 10000; ++k) {
    const double a = uni(-0.71, 0.71), b = uni(-0.5, 0.5), phi = uni(-0.25 * kPi, 0.25 * kPi);
    if (std::abs(su21_condition_gap(a, b, phi)) < 1e-12) continue;
    const NormCoords n = bridge(a, b, phi);
    EXPECT_EQ(in_D(n.abs_v, n.abs_z, n.t), su21_condition(a, b, phi));
  }
  // |V| = 1, Z = 0 corresponds to a = 1/2, b = 0.
  EXPECT_NEAR(su21_condition_gap(0.5, 0.0, 0.5 * std::acos(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(Embedding, Homomorphism) {
  const SolvGroup g = SolvGroup::build(1, 1);
  for (int k = 0; k < 100; ++k) {
    const GroupPoint x{Vec::Random(2), Vec::Random(1), uni(-1, 1)}, y{Vec::Random(2), Vec::Random(1), uni(-1, 1)};
    EXPECT_LT((su21_embed(g, s_multiply(g, x, y)) - su21_embed(g, x) * su21_embed(g, y)).cwiseAbs().maxCoeff(),
              1e-13);
    EXPECT_LT(su21_form_residual(su21_embed(g, x)), 1e-13);
    const ComplexGroupPoint u{CVec::Random(2), CVec::Random(1), Complex(uni(-1, 1), uni(-1, 1))};
    const ComplexGroupPoint v{CVec::Random(2), CVec::Random(1), Complex(uni(-1, 1), uni(-1, 1))};
    EXPECT_LT((su21_embed(g, c_multiply(g, u, v)) - su21_embed(g, u) * su21_embed(g, v)).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Embedding, MatchesOracleExponential) {
  const SolvGroup g = SolvGroup::build(1, 1);
  const ComplexGroupPoint z{CVec::Random(2), CVec::Random(1), Complex(0.3, -0.4)};
  const Eigen::Vector2cd w = su21_action(su21_embed(g, z), Vec2c::Zero());
  EXPECT_LT((w - oracle::ball_point(z.Wv(0), z.Wv(1), z.Wz(0), z.zeta)).norm(), 1e-13);
}

TEST(Embedding, CrownPointsMapToBallPairs) {
  // exp(i t H) exp(i Y) in the crown <=> its ball pair lies in X x X.
  const SolvGroup g = SolvGroup::build(1, 1);
  for (int k = 0; k < 5000; ++k) {
    CrownCoords c{Vec::Zero(2), Vec::Zero(1), 0.0, uni(-1.5, 1.5), Vec::Random(2), Vec::Random(1)};
    if (std::abs(boundary_residual(c.Yv.norm(), c.Yz.norm(), c.t_i)) < 1e-9) continue;
    const ComplexGroupPoint z = mixed_compose(g, c);
    bool ball = false;
    try {
      ball = ball_pair_in_crown(ball_pair(su21_embed(g, z)));
    } catch (const VanishingDenominator&) {
    }
    EXPECT_EQ(ball, crown_contains(g, z).inside) << c.Yv.transpose() << " " << c.Yz << " " << c.t_i;
  }
}

TEST(Embedding, OnlyStandardGroup) {
  EXPECT_THROW(su21_embed(SolvGroup::build(2, 1), SolvGroup::build(2, 1).identity()), std::invalid_argument);
  EXPECT_FALSE(is_standard_heisenberg(SolvGroup::build(1, 2)));
}

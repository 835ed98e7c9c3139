#pragma once

#include <cmath>
#include <utility>

#include "complexify.hpp"

namespace hcrown {

// ---------------------------------------------------------------------------
// SL(2): the upper half plane inside P^1 x P^1 via g -> (g(i), g(-i)).
// ---------------------------------------------------------------------------

/// Point of P^1(C) = C u {inf}.
struct P1Point {
  Complex z{0.0, 0.0};
  bool infinite = false;
};

class Moebius2 {
 public:
  explicit Moebius2(const Eigen::Matrix2cd& m, double tol = 1e-12) : m_(m) {
    if (std::abs(m_.determinant() - Complex(1.0, 0.0)) > tol) {
      throw std::invalid_argument("Moebius2: determinant must be 1");
    }
  }

  const Eigen::Matrix2cd& matrix() const { return m_; }

  Moebius2 operator*(const Moebius2& o) const { return Moebius2(m_ * o.m_, 1e-9); }

  P1Point apply(const P1Point& p) const {
    const Complex a = m_(0, 0), b = m_(0, 1), c = m_(1, 0), d = m_(1, 1);
    if (p.infinite) {
      if (c == Complex(0.0, 0.0)) return {{}, true};
      return {a / c, false};
    }
    const Complex den = c * p.z + d;
    if (den == Complex(0.0, 0.0)) return {{}, true};
    return {(a * p.z + b) / den, false};
  }

 private:
  Eigen::Matrix2cd m_;
};

inline Moebius2 sl2_n(Complex x) {
  Eigen::Matrix2cd m;
  m << 1.0, x, 0.0, 1.0;
  return Moebius2(m);
}

/// exp(zeta diag(1,-1)).
inline Moebius2 sl2_a(Complex zeta) {
  Eigen::Matrix2cd m;
  m << std::exp(zeta), 0.0, 0.0, std::exp(-zeta);
  return Moebius2(m);
}

/// n_x a_s exp(i t diag(1,-1)) exp(i y E_12) applied to the base point, as (g(i), g(-i)).
inline std::pair<P1Point, P1Point> sl2_pair(double x, double s, double t, double y) {
  const Moebius2 g = sl2_n(x) * sl2_a(s) * sl2_a(kI * t) * sl2_n(kI * y);
  return {g.apply({kI, false}), g.apply({-kI, false})};
}

/// Cr(X) = X x conj(X): upper half plane times lower half plane.
inline bool sl2_in_crown(const std::pair<P1Point, P1Point>& pair) {
  if (pair.first.infinite || pair.second.infinite) return false;
  return pair.first.z.imag() > 0.0 && pair.second.z.imag() < 0.0;
}

// ---------------------------------------------------------------------------
// SU(2,1) acting on the unit ball of C^2 by (A z + u) / (v^t z + alpha).
// ---------------------------------------------------------------------------

using Mat3c = Eigen::Matrix3cd;
using Vec2c = Eigen::Vector2cd;

/// The Hermitian form diag(1, 1, -1) preserved by SU(2,1).
inline Mat3c su21_form() { return Eigen::Vector3cd(1.0, 1.0, -1.0).asDiagonal(); }

/// Largest entry of g^* J g - J.
inline double su21_form_residual(const Mat3c& g) {
  const Mat3c j = su21_form();
  return (g.adjoint() * j * g - j).cwiseAbs().maxCoeff();
}

/// Generator of A: a_t = exp(t Y) = [[cosh t, 0, sinh t], [0, 1, 0], [sinh t, 0, cosh t]].
inline Mat3c su21_Y() {
  Mat3c y = Mat3c::Zero();
  y(0, 2) = 1.0;
  y(2, 0) = 1.0;
  return y;
}

inline Mat3c su21_a(Complex zeta) {
  Mat3c m = Mat3c::Identity();
  m(0, 0) = m(2, 2) = std::cosh(zeta);
  m(0, 2) = m(2, 0) = std::sinh(zeta);
  return m;
}

/// Z_{a,b} in n.
inline Mat3c su21_Z(Complex a, double b) {
  const Complex ib = kI * b;
  Mat3c z;
  z << ib, a, -ib, -std::conj(a), 0.0, std::conj(a), ib, a, -ib;
  return z;
}

/// exp of a nilpotent 3x3 matrix (X^3 = 0).
inline Mat3c nilpotent_exp(const Mat3c& x) { return Mat3c::Identity() + x + 0.5 * x * x; }

/// n_{a,b} = exp(i Z_{a,b}).
inline Mat3c su21_n(Complex a, double b) { return nilpotent_exp(kI * su21_Z(a, b)); }

/// Element diag(u, conj(u)^2, u) of M = Z_K(A), u = e^{i theta}; Ad(m) Z_{a,b} = Z_{e^{3 i theta} a, b}.
inline Mat3c su21_m(double theta) {
  const Complex u = std::exp(kI * theta);
  return Eigen::Vector3cd(u, std::conj(u) * std::conj(u), u).asDiagonal();
}

/// Angle theta with e^{3 i theta} a real and nonnegative, so Ad(m_theta) rotates a onto |a|.
inline double su21_real_a_angle(Complex a) { return a == Complex(0.0, 0.0) ? 0.0 : -std::arg(a) / 3.0; }

class VanishingDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Vec2c su21_action(const Mat3c& g, const Vec2c& z, double tol = 1e-14) {
  const Complex den = g(2, 0) * z(0) + g(2, 1) * z(1) + g(2, 2);
  if (std::abs(den) < tol) throw VanishingDenominator("SU(2,1) action: v^t z + alpha vanishes");
  return (g.topLeftCorner<2, 2>() * z + g.topRightCorner<2, 1>()) / den;
}

/// Holomorphic extension of g -> conj(g): J (g^{-1})^t J.
inline Mat3c su21_partner(const Mat3c& g) {
  const Mat3c j = su21_form();
  return j * g.inverse().transpose() * j;
}

/// The image of g K_C in X_C = X x X. For real g this is (g(0), conj(g(0))).
struct Ball2Pair {
  Vec2c first;
  Vec2c second;
};

inline Ball2Pair ball_pair(const Mat3c& g) {
  return {su21_action(g, Vec2c::Zero()), su21_action(su21_partner(g), Vec2c::Zero())};
}

inline bool in_ball(const Vec2c& z) { return z.squaredNorm() < 1.0; }
inline bool ball_pair_in_crown(const Ball2Pair& pair) { return in_ball(pair.first) && in_ball(pair.second); }

/// The pair of a_{i phi} n_{a,b}(0), a real. Its partner is a_{i phi} n_{a,-b}(0).
inline Ball2Pair su21_point(double a, double b, double phi) {
  return ball_pair(su21_a(kI * phi) * su21_n(a, b));
}

/// |a|^2 + |b| < 1/2.
inline bool su21_in_lambda(double a, double b) { return a * a + std::abs(b) < 0.5; }

/// Ball membership of n_{a,b}(0) alone: 2 a^2 - 2 b < 1.
inline bool su21_first_component_in_lambda(double a, double b) { return 2.0 * a * a - 2.0 * b < 1.0; }

/// Ball membership of a_{i phi} n_{a,b}(0): (1 + 2b - 2a^2) cos 2phi > (1 - cos 2phi) a^2.
inline bool su21_component_condition(double a, double b, double phi) {
  const double c = std::cos(2.0 * phi);
  return (1.0 + 2.0 * b - 2.0 * a * a) * c > (1.0 - c) * a * a;
}

/// Crown condition for (phi, a, b): (1 - 2|b| - 2a^2) cos 2phi > (1 - cos 2phi) a^2.
inline bool su21_condition(double a, double b, double phi) {
  const double c = std::cos(2.0 * phi);
  return (1.0 - 2.0 * std::abs(b) - 2.0 * a * a) * c > (1.0 - c) * a * a;
}

/// Signed gap of su21_condition; zero on the boundary.
inline double su21_condition_gap(double a, double b, double phi) {
  const double c = std::cos(2.0 * phi);
  return (1.0 - 2.0 * std::abs(b) - 2.0 * a * a) * c - (1.0 - c) * a * a;
}

struct NormCoords {
  double abs_v = 0.0;
  double abs_z = 0.0;
  double t = 0.0;
};

/// (a, b, phi) -> (|V|, |Z|, t) = (2|a|, 2|b|, 2 phi).
inline NormCoords bridge(double a, double b, double phi) {
  return {2.0 * std::abs(a), 2.0 * std::abs(b), 2.0 * phi};
}

// ---------------------------------------------------------------------------
// The q = 1, p = 2 harmonic group as the NA part of SU(2,1).
// ---------------------------------------------------------------------------

/// True when g carries the standard q = 1 module J_1 = [[0,-1],[1,0]] on R^2.
inline bool is_standard_heisenberg(const SolvGroup& g) {
  if (g.q() != 1 || g.p() != 2) return false;
  Mat j(2, 2);
  j << 0, -1, 1, 0;
  return (g.algebra().rep().generator(0) - j).cwiseAbs().maxCoeff() == 0.0;
}

/**
 * Lie algebra embedding s -> su(2,1): V_1 -> Z_{1/2,0}, V_2 -> Z_{i/2,0},
 * Z_1 -> Z_{0,1/2}, H -> Y/2, extended complex-linearly to s_C. It is isometric
 * for the symmetric metric, so S acts on the ball by isometries.
 */
inline Mat3c su21_embed(const SolvGroup& g, const ComplexGroupPoint& z) {
  if (!is_standard_heisenberg(g)) {
    throw std::invalid_argument("su21_embed: needs the standard q=1, p=2 group");
  }
  const Mat3c n = z.Wv(0) * su21_Z(0.5, 0.0) + z.Wv(1) * su21_Z(0.5 * kI, 0.0) + z.Wz(0) * su21_Z(0.0, 0.5);
  return nilpotent_exp(n) * su21_a(0.5 * z.zeta);
}

inline Mat3c su21_embed(const SolvGroup& g, const GroupPoint& x) { return su21_embed(g, complexify(x)); }

}  // namespace hcrown

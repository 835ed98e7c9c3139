#pragma once

#include <cmath>
#include <stdexcept>

#include "solvable.hpp"

namespace hcrown {

/// Shooting did not reach the requested residual.
class ShootingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geodesic length below which geodesic_log is known to converge from a cold start
/// with the default options (checked on random samples for q <= 3).
inline constexpr double kShootingRadius = 3.0;

struct GeodesicOptions {
  int steps = 256;         // fixed RK4 steps on [0, 1]
  double tol = 1e-10;      // boundary-value residual (coordinate norm)
  int max_iter = 40;
  double fd_step = 1e-6;   // central differences for the shooting Jacobian
  int continuation = 16;   // largest number of continuation stages tried on failure
};

namespace detail {

/**
 * Geodesic flow with body velocity xi = (x_v, x_z, a) = (g^{-1} dg/ds):
 *   x_v' = J_{x_z} x_v + (a/2) x_v,  x_z' = a x_z,  a' = -|x_v|^2/2 - |x_z|^2,
 *   V' = e^{t/2} x_v,  Z' = e^t x_z + (1/2) e^{t/2} [V, x_v],  t' = a.
 * State layout: V, Z, t, x_v, x_z, a.
 */
inline Vec geodesic_rhs(const SolvGroup& g, const Vec& y) {
  const int p = g.p();
  const int q = g.q();
  const int n = g.dim();
  const auto V = y.head(p);
  const double t = y(p + q);
  const auto xv = y.segment(n, p);
  const auto xz = y.segment(n + p, q);
  const double a = y(2 * n - 1);
  const double e_half = std::exp(0.5 * t);

  Vec out(2 * n);
  out.head(p) = e_half * xv;
  out.segment(p, q) = std::exp(t) * xz + 0.5 * e_half * g.algebra().bracket(Vec(V), Vec(xv));
  out(p + q) = a;
  Vec jx = 0.5 * a * xv;
  for (int k = 0; k < q; ++k) jx += xz(k) * (g.algebra().rep().generator(k) * xv);
  out.segment(n, p) = jx;
  out.segment(n + p, q) = a * xz;
  out(2 * n - 1) = -0.5 * xv.squaredNorm() - xz.squaredNorm();
  return out;
}

}  // namespace detail

/// exp_e of xi = V + Z + tH in s, integrated with fixed-step RK4.
inline GroupPoint geodesic_exp(const SolvGroup& g, const Vec& xi, const GeodesicOptions& opts = {}) {
  detail::require_size(xi.size(), g.dim(), "geodesic initial velocity");
  if (opts.steps < 1) throw std::invalid_argument("geodesic_exp: steps must be >= 1");
  const int n = g.dim();
  Vec y = Vec::Zero(2 * n);
  y.tail(n) = xi;
  const double h = 1.0 / opts.steps;
  for (int s = 0; s < opts.steps; ++s) {
    const Vec k1 = detail::geodesic_rhs(g, y);
    const Vec k2 = detail::geodesic_rhs(g, y + 0.5 * h * k1);
    const Vec k3 = detail::geodesic_rhs(g, y + 0.5 * h * k2);
    const Vec k4 = detail::geodesic_rhs(g, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g.from_vector(y.head(n));
}

/// Converged shooting data, reusable as a warm start for nearby targets.
struct ShootingState {
  Vec xi;
  Mat jacobian;  // d exp / d xi at xi
};

namespace detail {

inline Vec shooting_residual(const SolvGroup& g, const Vec& xi, const Vec& target, const GeodesicOptions& opts) {
  return g.to_vector(geodesic_exp(g, xi, opts)) - target;
}

inline Mat shooting_jacobian(const SolvGroup& g, const Vec& xi, const GeodesicOptions& opts) {
  const int n = g.dim();
  Mat jac(n, n);
  for (int k = 0; k < n; ++k) {
    Vec e = Vec::Zero(n);
    e(k) = opts.fd_step;
    jac.col(k) = (g.to_vector(geodesic_exp(g, xi + e, opts)) - g.to_vector(geodesic_exp(g, xi - e, opts))) /
                 (2.0 * opts.fd_step);
  }
  return jac;
}

/// Damped Newton from xi; with chord = true the given Jacobian is kept fixed.
inline bool newton_shoot(const SolvGroup& g, const Vec& target, Vec& xi, Mat& jac, bool chord,
                         const GeodesicOptions& opts) {
  Vec res = shooting_residual(g, xi, target, opts);
  int polish = 0;
  const int iters = chord ? 8 : opts.max_iter;
  for (int it = 0; it < iters; ++it) {
    if (!res.allFinite()) return false;
    if (res.norm() < opts.tol) {
      // One extra step past the tolerance keeps the solution smooth in the target.
      if (polish++ > 0) return true;
    }
    if (!chord) jac = shooting_jacobian(g, xi, opts);
    const Vec delta = jac.partialPivLu().solve(res);
    double damp = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 12; ++ls) {
      const Vec trial = xi - damp * delta;
      const Vec tres = shooting_residual(g, trial, target, opts);
      if (tres.allFinite() && (tres.norm() < res.norm() || res.norm() < opts.tol)) {
        xi = trial;
        res = tres;
        improved = true;
        break;
      }
      damp *= 0.5;
    }
    if (!improved) return res.norm() < opts.tol;
  }
  return res.norm() < opts.tol;
}

}  // namespace detail

/**
 * log_e(x) by shooting: solves geodesic_exp(xi) = x with damped Newton and a
 * central-difference Jacobian, starting from the coordinates of x. A warm start
 * is tried first with its Jacobian frozen; on failure the target is approached
 * by continuation along the straight coordinate path.
 */
inline Vec geodesic_log(const SolvGroup& g, const GroupPoint& x, const GeodesicOptions& opts = {},
                        ShootingState* warm = nullptr) {
  g.check(x);
  const Vec target = g.to_vector(x);
  if (target.norm() == 0.0) return Vec::Zero(g.dim());

  if (warm && warm->xi.size() == g.dim() && warm->jacobian.rows() == g.dim()) {
    Vec xi = warm->xi;
    Mat jac = warm->jacobian;
    if (detail::newton_shoot(g, target, xi, jac, true, opts)) return xi;
  }

  Vec xi = target;
  Mat jac;
  bool ok = detail::newton_shoot(g, target, xi, jac, false, opts);
  for (int stages = 2; !ok && stages <= opts.continuation; stages *= 2) {
    xi = target / stages;
    ok = true;
    for (int s = 1; s <= stages && ok; ++s) {
      ok = detail::newton_shoot(g, target * (static_cast<double>(s) / stages), xi, jac, false, opts);
    }
  }
  if (!ok) throw ShootingError("geodesic_log: shooting did not converge");
  if (warm) {
    warm->xi = xi;
    warm->jacobian = detail::shooting_jacobian(g, xi, opts);
  }
  return xi;
}

/// sigma(x) = exp_e(-log_e(x)).
inline GroupPoint geodesic_symmetry(const SolvGroup& g, const GroupPoint& x, const GeodesicOptions& opts = {},
                                    ShootingState* warm = nullptr) {
  return geodesic_exp(g, -geodesic_log(g, x, opts, warm), opts);
}

/// d(e, x) = |log_e(x)| for the left-invariant metric with (V, Z, H) orthonormal.
inline double geodesic_distance(const SolvGroup& g, const GroupPoint& x, const GeodesicOptions& opts = {}) {
  return geodesic_log(g, x, opts).norm();
}

}  // namespace hcrown

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "types.hpp"

namespace hcrown {

struct SphereMinOptions {
  int restarts = 32;
  int max_iter = 300;
  int polish_steps = 20;
  std::uint64_t seed = 0x5eed;
  // Stop all restarts once sqrt(f) drops below this.
  double floor = 1e-13;
};

struct SphereMinResult {
  double value = 0.0;  // min over |xi| = 1 of sqrt((xi^T A xi)^2 + (xi^T B xi)^2)
  Vec argmin;
};

namespace detail {

struct PairForm {
  const Mat& A;
  const Mat& B;

  double f(const Vec& x, double* a = nullptr, double* b = nullptr) const {
    const double ra = x.dot(A * x);
    const double rb = x.dot(B * x);
    if (a) *a = ra;
    if (b) *b = rb;
    return ra * ra + rb * rb;
  }
};

/// Riemannian gradient descent with Armijo backtracking, then Gauss-Newton on (xi^T A xi, xi^T B xi).
inline double descend(const PairForm& form, Vec& x, const SphereMinOptions& opts) {
  x.normalize();
  double a = 0.0, b = 0.0;
  double fx = form.f(x, &a, &b);
  double step = 1.0;
  for (int it = 0; it < opts.max_iter && fx > 0.0; ++it) {
    Vec grad = 4.0 * (a * (form.A * x) + b * (form.B * x));
    grad -= grad.dot(x) * x;
    const double gn2 = grad.squaredNorm();
    if (gn2 < 1e-30) break;
    step = std::min(step * 2.0, 1e3);
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls) {
      Vec y = (x - step * grad).normalized();
      double ya = 0.0, yb = 0.0;
      const double fy = form.f(y, &ya, &yb);
      if (fy <= fx - 1e-4 * step * gn2) {
        x = y;
        a = ya;
        b = yb;
        fx = fy;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }

  // Polish: Riemannian Newton where the reduced Hessian is positive definite (a
  // positive minimum), Gauss-Newton on the residual (a, b) otherwise.
  const Eigen::Index n = x.size();
  for (int it = 0; it < opts.polish_steps && fx > 0.0; ++it) {
    const Vec ax = form.A * x;
    const Vec bx = form.B * x;
    Eigen::Matrix<double, 2, Eigen::Dynamic> jac(2, n);
    jac.row(0) = 2.0 * (ax - ax.dot(x) * x).transpose();
    jac.row(1) = 2.0 * (bx - bx.dot(x) * x).transpose();

    const Mat q = Eigen::HouseholderQR<Mat>(Mat(x)).householderQ();
    const Mat tan = q.rightCols(n - 1);
    const Vec grad = 4.0 * (a * ax + b * bx);
    const Mat hess = 4.0 * (a * form.A + b * form.B) + 8.0 * (ax * ax.transpose() + bx * bx.transpose()) -
                     grad.dot(x) * Mat::Identity(n, n);
    const Eigen::LLT<Mat> llt(tan.transpose() * hess * tan);

    Vec delta;
    if (llt.info() == Eigen::Success) {
      delta = -tan * llt.solve(tan.transpose() * grad);
    } else {
      delta = -jac.completeOrthogonalDecomposition().solve(Eigen::Vector2d(a, b));
    }
    bool moved = false;
    for (int ls = 0; ls < 30 && !moved; ++ls, delta *= 0.5) {
      Vec y = (x + delta).normalized();
      double ya = 0.0, yb = 0.0;
      const double fy = form.f(y, &ya, &yb);
      if (fy < fx) {
        x = y;
        a = ya;
        b = yb;
        fx = fy;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return fx;
}

}  // namespace detail

/**
 * Minimizes (xi^T A xi)^2 + (xi^T B xi)^2 over the unit sphere, A and B real
 * symmetric. Starts from every eigenvector of A and B, then from seeded random
 * points; returns the square root of the best value.
 */
inline SphereMinResult minimize_form_pair(const Mat& A, const Mat& B, const SphereMinOptions& opts = {}) {
  detail::require_size(A.rows(), A.cols(), "form A");
  detail::require_size(B.rows(), A.rows(), "form B rows");
  detail::require_size(B.cols(), A.cols(), "form B cols");
  const Eigen::Index n = A.rows();
  const detail::PairForm form{A, B};

  SphereMinResult best;
  best.value = std::numeric_limits<double>::infinity();
  auto attempt = [&](Vec x) {
    if (x.norm() == 0.0) return;
    const double fx = detail::descend(form, x, opts);
    const double v = std::sqrt(fx);
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
    }
  };

  const Eigen::SelfAdjointEigenSolver<Mat> ea(A);
  const Eigen::SelfAdjointEigenSolver<Mat> eb(B);
  for (Eigen::Index k = 0; k < n && best.value > opts.floor; ++k) attempt(ea.eigenvectors().col(k));
  for (Eigen::Index k = 0; k < n && best.value > opts.floor; ++k) attempt(eb.eigenvectors().col(k));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int r = 0; r < opts.restarts && best.value > opts.floor; ++r) {
    Vec x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = normal(rng);
    attempt(x);
  }
  return best;
}

}  // namespace hcrown

#pragma once

#include <array>

#include "adjoint.hpp"
#include "sphere_min.hpp"

namespace hcrown {

/**
 * Which product of Ad(z) with its bilinear transpose defines the symbol.
 * AdAdT is the principal symbol of sum_k (Ad(z) X_k)^2 and reproduces the
 * SL(2) matrix with entries 1, -i x e^{it}, e^{2it}(1 - x^2); AdTAd is
 * xi -> sum_k (Ad(z) xi)_k^2.
 */
enum class SymbolForm { AdAdT, AdTAd };

/// Complex symmetric matrix L(z) of the symbol quadric (bilinear transpose, no conjugation).
inline CMat symbol_matrix(const SolvGroup& g, const ComplexGroupPoint& z, SymbolForm form = SymbolForm::AdAdT) {
  const AdjointMatrix ad = adjoint(g, z);
  return form == SymbolForm::AdAdT ? CMat(ad * ad.transpose()) : CMat(ad.transpose() * ad);
}

/// xi^T L(z) xi for real xi.
inline Complex symbol(const SolvGroup& g, const ComplexGroupPoint& z, const Vec& xi,
                      SymbolForm form = SymbolForm::AdAdT) {
  detail::require_size(xi.size(), g.dim(), "symbol xi");
  const CVec x = xi.cast<Complex>();
  return (x.transpose() * symbol_matrix(g, z, form) * x)(0);
}

struct EllipticityOptions {
  SymbolForm form = SymbolForm::AdAdT;
  SphereMinOptions search;
  // Margins at or below this count as zero.
  double zero_tol = 1e-8;
};

/// min over real unit xi of |xi^T L(z) xi|; positive exactly when L(z) is elliptic.
inline double ellipticity_margin(const SolvGroup& g, const ComplexGroupPoint& z, const EllipticityOptions& opts = {}) {
  const CMat l = symbol_matrix(g, z, opts.form);
  const Mat re = 0.5 * (l.real() + l.real().transpose());
  const Mat im = 0.5 * (l.imag() + l.imag().transpose());
  return minimize_form_pair(re, im, opts.search).value;
}

inline bool is_elliptic(const SolvGroup& g, const ComplexGroupPoint& z, const EllipticityOptions& opts = {}) {
  return ellipticity_margin(g, z, opts) > opts.zero_tol;
}

// SL(2) model in its own convention: basis (H, V) with [H, V] = V and z = n_x exp(i t H).

/// Columns Ad(z)H = H - i x e^{it} V and Ad(z)V = e^{it} V.
inline Eigen::Matrix2cd sl2_adjoint(double x, double t) {
  const Complex e = std::exp(kI * t);
  Eigen::Matrix2cd ad;
  ad << 1.0, 0.0, -kI * x * e, e;
  return ad;
}

inline Eigen::Matrix2cd sl2_symbol_matrix(double x, double t) {
  const Eigen::Matrix2cd ad = sl2_adjoint(x, t);
  return ad * ad.transpose();
}

/// Roots xi_H / xi_V of xi^T L xi = 0, solved from the matrix entries.
inline std::array<Complex, 2> sl2_symbol_roots(double x, double t) {
  const Eigen::Matrix2cd l = sl2_symbol_matrix(x, t);
  // l00 r^2 + 2 l01 r + l11 = 0
  const Complex disc = std::sqrt(l(0, 1) * l(0, 1) - l(0, 0) * l(1, 1));
  return {(-l(0, 1) + disc) / l(0, 0), (-l(0, 1) - disc) / l(0, 0)};
}

}  // namespace hcrown

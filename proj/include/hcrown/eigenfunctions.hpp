#pragma once

#include <memory>

#include "crown.hpp"
#include "geodesic.hpp"

namespace hcrown {

/// lambda = c beta with beta(H) = 1.
struct SpectralParam {
  Complex c{0.0, 0.0};

  /// Re lambda is a positive multiple of beta.
  bool positive() const { return c.real() > 0.0; }
};

/// Laplace-Beltrami eigenvalue of a^lambda and P_lambda: c^2 - 2 rho c.
inline Complex eigenvalue(const SolvGroup& g, SpectralParam lambda) {
  return lambda.c * lambda.c - 2.0 * g.rho() * lambda.c;
}

inline bool is_real_point(const ComplexGroupPoint& z) {
  return z.zeta.imag() == 0.0 && z.Wv.imag().isZero(0.0) && z.Wz.imag().isZero(0.0);
}

/// a^lambda(z) = e^{c log a(z)}; requires z in the crown or z real.
inline Complex a_lambda(const SolvGroup& g, const ComplexGroupPoint& z, SpectralParam lambda) {
  check_point(g, z);
  if (!is_real_point(z) && !crown_contains(g, z)) {
    throw std::domain_error("a_lambda: point is outside the crown");
  }
  return std::exp(lambda.c * z.zeta);
}

inline Complex a_lambda(const SolvGroup& g, const GroupPoint& x, SpectralParam lambda) {
  g.check(x);
  return std::exp(lambda.c * x.t);
}

/// P_lambda(x) = a^lambda(sigma(x)).
inline Complex poisson_kernel(const SolvGroup& g, const GroupPoint& x, SpectralParam lambda,
                              const GeodesicOptions& opts = {}) {
  return a_lambda(g, geodesic_symmetry(g, x, opts), lambda);
}

/**
 * P_lambda as a function object for finite-difference use. The first evaluation
 * solves the shooting problem cold and keeps it as a warm start for later,
 * nearby evaluations. Copies share the warm start.
 */
class PoissonKernel {
 public:
  PoissonKernel(const SolvGroup& g, SpectralParam lambda, GeodesicOptions opts = {})
      : g_(&g), lambda_(lambda), opts_(opts), warm_(std::make_shared<ShootingState>()) {}

  Complex operator()(const GroupPoint& x) const {
    return a_lambda(*g_, geodesic_symmetry(*g_, x, opts_, warm_.get()), lambda_);
  }

  void reset() { *warm_ = ShootingState{}; }

 private:
  const SolvGroup* g_;
  SpectralParam lambda_;
  GeodesicOptions opts_;
  std::shared_ptr<ShootingState> warm_;
};

}  // namespace hcrown

#pragma once

#include <cmath>
#include <type_traits>
#include <utility>

#include "htype.hpp"

namespace hcrown {

/// exp(V + Z) exp(tH) in S = N x| A.
struct GroupPoint {
  Vec V;
  Vec Z;
  double t = 0.0;
};

/**
 * Harmonic extension S = N x| A of an H-type group, with [H,V] = V/2, [H,Z] = Z
 * and (V, Z, H) orthonormal. Basis order used throughout: V_1..V_p, Z_1..Z_q, H.
 */
class SolvGroup {
 public:
  explicit SolvGroup(HTypeAlgebra alg) : alg_(std::move(alg)) {}

  static SolvGroup build(int q, int multiplicity) { return SolvGroup(HTypeAlgebra::build(q, multiplicity)); }

  const HTypeAlgebra& algebra() const { return alg_; }
  int p() const { return alg_.p(); }
  int q() const { return alg_.q(); }
  int dim() const { return p() + q() + 1; }

  /// Half the trace of ad(H) on n: p/4 + q/2.
  double rho() const { return 0.25 * p() + 0.5 * q(); }

  GroupPoint identity() const { return {Vec::Zero(p()), Vec::Zero(q()), 0.0}; }

  void check(const GroupPoint& x) const {
    detail::require_size(x.V.size(), p(), "group point V");
    detail::require_size(x.Z.size(), q(), "group point Z");
  }

  /// exp(eps * E_k) for the k-th orthonormal basis vector of s.
  GroupPoint basis_exp(int k, double eps) const {
    GroupPoint g = identity();
    if (k < p()) {
      g.V(k) = eps;
    } else if (k < p() + q()) {
      g.Z(k - p()) = eps;
    } else {
      g.t = eps;
    }
    return g;
  }

  /// Coordinates of a point of S read as an element V + Z + tH of s.
  Vec to_vector(const GroupPoint& x) const {
    Vec out(dim());
    out << x.V, x.Z, x.t;
    return out;
  }

  GroupPoint from_vector(const Vec& v) const {
    detail::require_size(v.size(), dim(), "group point vector");
    return {v.head(p()), v.segment(p(), q()), v(dim() - 1)};
  }

  bool same_shape(const SolvGroup& other) const { return alg_.same_shape(other.alg_); }

 private:
  HTypeAlgebra alg_;
};

inline GroupPoint s_multiply(const SolvGroup& g, const GroupPoint& x, const GroupPoint& y) {
  g.check(x);
  g.check(y);
  const double half = std::exp(0.5 * x.t);
  return {x.V + half * y.V, x.Z + std::exp(x.t) * y.Z + 0.5 * half * g.algebra().bracket(x.V, y.V),
          x.t + y.t};
}

inline GroupPoint s_inverse(const SolvGroup& g, const GroupPoint& x) {
  g.check(x);
  return {-std::exp(-0.5 * x.t) * x.V, -std::exp(-x.t) * x.Z, -x.t};
}

/// a_t (V, Z, 0) a_{-t}.
inline GroupPoint dilate(const GroupPoint& x, double t) {
  return {std::exp(0.5 * t) * x.V, std::exp(t) * x.Z, x.t};
}

struct LaplacianOptions {
  double h = 1e-3;
  bool richardson = true;
};

/**
 * Laplace-Beltrami operator sum V_j^2 + sum Z_i^2 + H^2 - 2 rho H applied to f at x,
 * with each left-invariant field differentiated along eps -> x exp(eps X) by
 * central differences. With one Richardson level the error is O(h^4).
 */
template <class F>
auto apply_laplacian(const SolvGroup& g, F&& f, const GroupPoint& x, LaplacianOptions opts = {})
    -> std::decay_t<decltype(f(x))> {
  using R = std::decay_t<decltype(f(x))>;
  if (!(opts.h > 0.0)) throw std::invalid_argument("apply_laplacian: h must be positive");
  g.check(x);

  auto eval = [&](const GroupPoint& y) -> R {
    R v = f(y);
    if (!std::isfinite(std::abs(v))) throw std::domain_error("apply_laplacian: non-finite value of f");
    return v;
  };
  const R center = eval(x);

  auto estimate = [&](double h) -> R {
    R acc = R(0);
    for (int k = 0; k < g.dim(); ++k) {
      const R fp = eval(s_multiply(g, x, g.basis_exp(k, h)));
      const R fm = eval(s_multiply(g, x, g.basis_exp(k, -h)));
      acc += (fp - 2.0 * center + fm) / (h * h);
      if (k == g.dim() - 1) acc -= 2.0 * g.rho() * (fp - fm) / (2.0 * h);
    }
    return acc;
  };

  const R coarse = estimate(opts.h);
  if (!opts.richardson) return coarse;
  const R fine = estimate(0.5 * opts.h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace hcrown

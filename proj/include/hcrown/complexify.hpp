#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "solvable.hpp"

namespace hcrown {

/**
 * exp(W) exp(zeta H) in S_C. The A_C parameter zeta is kept in C rather than as
 * e^{zeta/2} in C^*, so this is the universal cover of A_C and log a(z) is single valued.
 */
struct ComplexGroupPoint {
  CVec Wv;
  CVec Wz;
  Complex zeta{0.0, 0.0};
};

inline ComplexGroupPoint complexify(const GroupPoint& x) {
  return {x.V.cast<Complex>(), x.Z.cast<Complex>(), Complex(x.t, 0.0)};
}

inline void check_point(const SolvGroup& g, const ComplexGroupPoint& z) {
  detail::require_size(z.Wv.size(), g.p(), "complex point W_v");
  detail::require_size(z.Wz.size(), g.q(), "complex point W_z");
}

inline ComplexGroupPoint c_identity(const SolvGroup& g) {
  return {CVec::Zero(g.p()), CVec::Zero(g.q()), Complex(0.0, 0.0)};
}

inline ComplexGroupPoint c_multiply(const SolvGroup& g, const ComplexGroupPoint& x,
                                    const ComplexGroupPoint& y) {
  check_point(g, x);
  check_point(g, y);
  const Complex half = std::exp(0.5 * x.zeta);
  return {x.Wv + half * y.Wv, x.Wz + std::exp(x.zeta) * y.Wz + 0.5 * half * g.algebra().bracket(x.Wv, y.Wv),
          x.zeta + y.zeta};
}

inline ComplexGroupPoint c_inverse(const SolvGroup& g, const ComplexGroupPoint& x) {
  check_point(g, x);
  return {-std::exp(-0.5 * x.zeta) * x.Wv, -std::exp(-x.zeta) * x.Wz, -x.zeta};
}

/// exp(zeta H) exp(W) exp(-zeta H) = exp(e^{zeta/2} W_v + e^{zeta} W_z).
inline ComplexGroupPoint c_dilate(const ComplexGroupPoint& x, Complex zeta) {
  return {std::exp(0.5 * zeta) * x.Wv, std::exp(zeta) * x.Wz, x.zeta};
}

/// exp(zeta H).
inline ComplexGroupPoint a_point(const SolvGroup& g, Complex zeta) {
  ComplexGroupPoint out = c_identity(g);
  out.zeta = zeta;
  return out;
}

struct NADecomposition {
  CVec nv;  // N_C part, v component
  CVec nz;  // N_C part, z component
  Complex log_a;
};

inline NADecomposition na_decompose(const ComplexGroupPoint& z) { return {z.Wv, z.Wz, z.zeta}; }

inline ComplexGroupPoint na_compose(const NADecomposition& d) { return {d.nv, d.nz, d.log_a}; }

/// Mixed-model coordinates of n a_{t_r} exp(i t_i H) exp(i (Y_v + Y_z)), n = exp(U_v + U_z).
struct CrownCoords {
  Vec Uv;
  Vec Uz;
  double t_r = 0.0;
  double t_i = 0.0;
  Vec Yv;
  Vec Yz;
};

class DegenerateDecomposition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline ComplexGroupPoint mixed_compose(const SolvGroup& g, const CrownCoords& c) {
  detail::require_size(c.Uv.size(), g.p(), "crown coords U_v");
  detail::require_size(c.Yv.size(), g.p(), "crown coords Y_v");
  detail::require_size(c.Uz.size(), g.q(), "crown coords U_z");
  detail::require_size(c.Yz.size(), g.q(), "crown coords Y_z");
  const ComplexGroupPoint n{c.Uv.cast<Complex>(), c.Uz.cast<Complex>(), Complex(0.0, 0.0)};
  const ComplexGroupPoint a = a_point(g, Complex(c.t_r, c.t_i));
  const ComplexGroupPoint y{kI * c.Yv.cast<Complex>(), kI * c.Yz.cast<Complex>(), Complex(0.0, 0.0)};
  return c_multiply(g, c_multiply(g, n, a), y);
}

/// Condition number of the real 2x2 system (U_v, Y_v) -> W_v = U_v + i e^{zeta/2} Y_v.
inline double mixed_split_condition(Complex zeta) {
  const Complex s = kI * std::exp(0.5 * zeta);
  Eigen::Matrix2d m;
  m << 1.0, s.real(), 0.0, s.imag();
  const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(m).singularValues();
  return sv(1) == 0.0 ? std::numeric_limits<double>::infinity() : sv(0) / sv(1);
}

/// Smaller of the two pivots |cos(t_i/2)|, |cos(t_i)| of mixed_decompose.
inline double mixed_pivot(Complex zeta) {
  return std::min(std::abs(std::cos(0.5 * zeta.imag())), std::abs(std::cos(zeta.imag())));
}

struct MixedOptions {
  // Smallest admissible |cos(t_i/2)| and |cos(t_i)|, the pivots of the two real solves.
  double pivot_tol = 1e-3;
};

/**
 * Inverts mixed_compose. With e^{zeta/2} = r e^{i t_i/2} the v-part splits as
 * Re W_v = U_v - r sin(t_i/2) Y_v, Im W_v = r cos(t_i/2) Y_v; the z-part then
 * absorbs the correction (i/2) e^{zeta/2} [U_v, Y_v] and splits with pivot cos(t_i).
 */
inline CrownCoords mixed_decompose(const SolvGroup& g, const ComplexGroupPoint& z, MixedOptions opts = {}) {
  check_point(g, z);
  const double t_r = z.zeta.real();
  const double t_i = z.zeta.imag();
  const double cv = std::cos(0.5 * t_i);
  const double cz = std::cos(t_i);
  if (mixed_pivot(z.zeta) < opts.pivot_tol) {
    throw DegenerateDecomposition("mixed decomposition is singular at t_i = " + std::to_string(t_i));
  }
  const double rv = std::exp(0.5 * t_r);
  const double rz = std::exp(t_r);

  CrownCoords out;
  out.t_r = t_r;
  out.t_i = t_i;
  out.Yv = z.Wv.imag() / (rv * cv);
  out.Uv = z.Wv.real() + rv * std::sin(0.5 * t_i) * out.Yv;

  const CVec correction =
      (0.5 * kI * std::exp(0.5 * z.zeta)) * g.algebra().bracket(out.Uv, out.Yv).cast<Complex>();
  const CVec rest = z.Wz - correction;
  out.Yz = rest.imag() / (rz * cz);
  out.Uz = rest.real() + rz * std::sin(t_i) * out.Yz;
  return out;
}

}  // namespace hcrown

#pragma once

#include "complexify.hpp"

namespace hcrown {

/// Complex (p+q+1)x(p+q+1) matrix in the basis V_1..V_p, Z_1..Z_q, H; column j is the image of basis vector j.
using AdjointMatrix = CMat;

/**
 * ad(W) for W = W_v + W_z in n_C: ad(W)H = -(W_v/2 + W_z), ad(W)V' = [W_v, V'],
 * ad(W)Z' = 0. Nilpotent of order two.
 */
inline CMat ad_nilpotent(const SolvGroup& g, const CVec& Wv, const CVec& Wz) {
  detail::require_size(Wv.size(), g.p(), "ad W_v");
  detail::require_size(Wz.size(), g.q(), "ad W_z");
  const int p = g.p();
  const int q = g.q();
  CMat ad = CMat::Zero(g.dim(), g.dim());
  for (int k = 0; k < q; ++k) {
    // [W_v, e_j]_k = <J_k W_v, e_j>
    const CVec jw = g.algebra().rep().generator(k).cast<Complex>() * Wv;
    for (int j = 0; j < p; ++j) ad(p + k, j) = jw(j);
  }
  ad.col(p + q).head(p) = -0.5 * Wv;
  ad.col(p + q).segment(p, q) = -Wz;
  return ad;
}

/// Ad(exp(zeta H)) = diag(e^{zeta/2} on v, e^{zeta} on z, 1 on a).
inline CMat ad_a(const SolvGroup& g, Complex zeta) {
  CVec d(g.dim());
  d.head(g.p()).setConstant(std::exp(0.5 * zeta));
  d.segment(g.p(), g.q()).setConstant(std::exp(zeta));
  d(g.dim() - 1) = 1.0;
  return d.asDiagonal();
}

/// Ad(exp(W) exp(zeta H)) = (id + ad W) Ad(exp(zeta H)).
inline AdjointMatrix adjoint(const SolvGroup& g, const ComplexGroupPoint& z) {
  check_point(g, z);
  CMat n = ad_nilpotent(g, z.Wv, z.Wz);
  n.diagonal().array() += 1.0;
  return n * ad_a(g, z.zeta);
}

inline AdjointMatrix adjoint(const SolvGroup& g, const GroupPoint& x) { return adjoint(g, complexify(x)); }

}  // namespace hcrown

#pragma once

#include <utility>

#include "clifford.hpp"

namespace hcrown {

/// H-type algebra n = v (+) z built from a Clifford module: [V,V']_k = <J_k V, V'>.
class HTypeAlgebra {
 public:
  explicit HTypeAlgebra(CliffordRep rep) : rep_(std::move(rep)) {}

  static HTypeAlgebra build(int q, int multiplicity) {
    return HTypeAlgebra(CliffordRep::build(q, multiplicity));
  }

  int p() const { return rep_.p(); }
  int q() const { return rep_.q(); }
  const CliffordRep& rep() const { return rep_; }

  /// Structure constant c_{ij}^k = <J_k e_i, e_j>, the Z_k coefficient of [e_i, e_j].
  double structure_constant(int i, int j, int k) const { return rep_.generator(k)(j, i); }

  Vec bracket(const Vec& V, const Vec& W) const {
    detail::require_size(V.size(), p(), "bracket V");
    detail::require_size(W.size(), p(), "bracket V'");
    Vec out(q());
    for (int k = 0; k < q(); ++k) out(k) = (rep_.generator(k) * V).dot(W);
    return out;
  }

  /// Complex-bilinear extension of the bracket to n_C (no conjugation).
  CVec bracket(const CVec& V, const CVec& W) const {
    detail::require_size(V.size(), p(), "bracket V");
    detail::require_size(W.size(), p(), "bracket V'");
    CVec out(q());
    for (int k = 0; k < q(); ++k) {
      out(k) = (rep_.generator(k).cast<Complex>() * V).transpose() * W;
    }
    return out;
  }

  Vec j_map(const Vec& Z, const Vec& V) const { return rep_.j_map(Z, V); }

  /// Rank of the linear map v (x) v -> z; equals q exactly when [v,v] = z.
  int bracket_rank() const {
    Mat collected(q(), p() * p());
    for (int k = 0; k < q(); ++k) {
      for (int i = 0; i < p(); ++i) {
        for (int j = 0; j < p(); ++j) collected(k, i * p() + j) = structure_constant(i, j, k);
      }
    }
    return static_cast<int>(Eigen::FullPivLU<Mat>(collected).rank());
  }

  bool same_shape(const HTypeAlgebra& other) const { return p() == other.p() && q() == other.q(); }

 private:
  CliffordRep rep_;
};

/// Element exp(V + Z) of N in the exponential chart.
struct NPoint {
  Vec V;
  Vec Z;
};

inline NPoint n_identity(const HTypeAlgebra& alg) { return {Vec::Zero(alg.p()), Vec::Zero(alg.q())}; }

inline NPoint n_multiply(const HTypeAlgebra& alg, const NPoint& x, const NPoint& y) {
  detail::require_size(x.Z.size(), alg.q(), "n_multiply Z");
  detail::require_size(y.Z.size(), alg.q(), "n_multiply Z'");
  return {x.V + y.V, x.Z + y.Z + 0.5 * alg.bracket(x.V, y.V)};
}

inline NPoint n_inverse(const NPoint& x) { return {-x.V, -x.Z}; }

}  // namespace hcrown

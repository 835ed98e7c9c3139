#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "types.hpp"

namespace hcrown {

/// Dimension of the smallest real module of the Clifford algebra Cl_q
/// (generators squaring to -1). Periodic with d_{q+8} = 16 d_q.
inline int min_module_dim(int q) {
  if (q <= 0) throw std::invalid_argument("q must be >= 1");
  static constexpr std::array<int, 9> base{0, 2, 4, 4, 8, 8, 8, 8, 16};
  int factor = 1;
  while (q > 8) {
    q -= 8;
    factor *= 16;
  }
  return factor * base[static_cast<std::size_t>(q)];
}

/**
 * A real representation of Cl_q on R^p: q skew-symmetric orthogonal matrices
 * J_1..J_q with J_j J_k + J_k J_j = -2 delta_jk.
 *
 * Generators produced by build() use these conventions:
 *  - q = 1: J_1 = [[0,-1],[1,0]], so J_1 e_1 = e_2.
 *  - q = 2, 3: left multiplication by i, j, k on the quaternions, basis (1,i,j,k).
 *  - q = 4..7: left multiplication by e_1..e_7 on the octonions, with
 *    e_i e_j = e_k for the cyclic triples (123)(145)(176)(246)(257)(347)(365).
 *  - q = 8: the octonion module doubled, Gamma_k = [[0,L_k],[L_k,0]] and
 *    Gamma_8 = [[0,-I],[I,0]].
 *  - q > 8: from a rep of Cl_{q-8} on R^d and the Cl_8 generators E_a on R^16,
 *    the generators E_a (x) I_d and omega (x) J_k, omega = E_1...E_8.
 * A multiplicity m > 1 repeats the module block-diagonally.
 */
class CliffordRep {
 public:
  static CliffordRep build(int q, int multiplicity) {
    if (q <= 0) throw std::invalid_argument("q must be >= 1");
    if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be >= 1");
    std::vector<Mat> gens = minimal_generators(q);
    if (multiplicity > 1) {
      const Mat eye = Mat::Identity(multiplicity, multiplicity);
      for (auto& g : gens) g = detail::kron(eye, g);
    }
    return CliffordRep(std::move(gens));
  }

  /// Wraps user-supplied generators after checking the Clifford relations.
  static CliffordRep from_generators(std::vector<Mat> generators, double tol = 1e-10) {
    if (generators.empty()) throw std::invalid_argument("q must be >= 1");
    const Eigen::Index p = generators.front().rows();
    for (const auto& g : generators) {
      if (g.rows() != p || g.cols() != p) throw DimensionError("generators must be square of equal size");
    }
    CliffordRep rep(std::move(generators));
    if (rep.max_relation_residual() > tol) {
      throw std::invalid_argument("generators violate the Clifford relations");
    }
    return rep;
  }

  int q() const { return static_cast<int>(gens_.size()); }
  int p() const { return static_cast<int>(gens_.front().rows()); }

  const Mat& generator(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
  const std::vector<Mat>& generators() const { return gens_; }

  /// J_Z = sum_k Z_k J_k.
  Mat j_matrix(const Vec& Z) const {
    detail::require_size(Z.size(), q(), "j_matrix Z");
    Mat out = Mat::Zero(p(), p());
    for (int k = 0; k < q(); ++k) out += Z(k) * gens_[static_cast<std::size_t>(k)];
    return out;
  }

  Vec j_map(const Vec& Z, const Vec& V) const {
    detail::require_size(Z.size(), q(), "j_map Z");
    detail::require_size(V.size(), p(), "j_map V");
    Vec out = Vec::Zero(p());
    for (int k = 0; k < q(); ++k) out.noalias() += Z(k) * (gens_[static_cast<std::size_t>(k)] * V);
    return out;
  }

  /// Largest entry of J_k^T J_k - I, J_k^T + J_k and J_j J_k + J_k J_j + 2 delta_jk I.
  double max_relation_residual() const {
    const Mat eye = Mat::Identity(p(), p());
    double worst = 0.0;
    for (int j = 0; j < q(); ++j) {
      const Mat& a = generator(j);
      worst = std::max(worst, (a.transpose() * a - eye).cwiseAbs().maxCoeff());
      worst = std::max(worst, (a.transpose() + a).cwiseAbs().maxCoeff());
      for (int k = j; k < q(); ++k) {
        const Mat& b = generator(k);
        Mat anti = a * b + b * a;
        if (j == k) anti += 2.0 * eye;
        worst = std::max(worst, anti.cwiseAbs().maxCoeff());
      }
    }
    return worst;
  }

 private:
  explicit CliffordRep(std::vector<Mat> gens) : gens_(std::move(gens)) {}

  // Left multiplication by e_a on the octonions, a = 1..7.
  static std::vector<Mat> octonion_left_mult() {
    static constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                          {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    // prod[a][b] = (sign, index) of e_a e_b
    std::array<std::array<std::pair<int, int>, 8>, 8> prod{};
    for (int a = 0; a < 8; ++a) {
      prod[0][a] = {1, a};
      prod[a][0] = {1, a};
    }
    for (int a = 1; a < 8; ++a) prod[a][a] = {-1, 0};
    for (const auto& t : triples) {
      for (int r = 0; r < 3; ++r) {
        const int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
        prod[x][y] = {1, z};
        prod[y][x] = {-1, z};
      }
    }
    std::vector<Mat> out;
    for (int a = 1; a < 8; ++a) {
      Mat m = Mat::Zero(8, 8);
      for (int b = 0; b < 8; ++b) m(prod[a][b].second, b) = prod[a][b].first;
      out.push_back(std::move(m));
    }
    return out;
  }

  static std::vector<Mat> cl8_generators() {
    std::vector<Mat> out;
    const Mat zero = Mat::Zero(8, 8);
    for (const auto& l : octonion_left_mult()) {
      Mat g(16, 16);
      g << zero, l, l, zero;
      out.push_back(std::move(g));
    }
    Mat last(16, 16);
    last << zero, -Mat::Identity(8, 8), Mat::Identity(8, 8), zero;
    out.push_back(std::move(last));
    return out;
  }

  static std::vector<Mat> minimal_generators(int q) {
    if (q == 1) {
      Mat j(2, 2);
      j << 0, -1, 1, 0;
      return {j};
    }
    if (q <= 3) {
      std::vector<Mat> out;
      const auto oct = octonion_left_mult();
      for (int a = 0; a < q; ++a) out.push_back(oct[static_cast<std::size_t>(a)].topLeftCorner(4, 4));
      return out;
    }
    if (q <= 7) {
      auto oct = octonion_left_mult();
      oct.resize(static_cast<std::size_t>(q));
      return oct;
    }
    if (q == 8) return cl8_generators();

    const std::vector<Mat> inner = minimal_generators(q - 8);
    const std::vector<Mat> e = cl8_generators();
    Mat omega = Mat::Identity(16, 16);
    for (const auto& g : e) omega = omega * g;
    const Eigen::Index d = inner.front().rows();
    std::vector<Mat> out;
    for (const auto& g : e) out.push_back(detail::kron(g, Mat::Identity(d, d)));
    for (const auto& j : inner) out.push_back(detail::kron(omega, j));
    return out;
  }

  std::vector<Mat> gens_;
};

inline CliffordRep build_clifford_rep(int q, int multiplicity) {
  return CliffordRep::build(q, multiplicity);
}

}  // namespace hcrown

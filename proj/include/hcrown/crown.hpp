#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "complexify.hpp"

namespace hcrown {

// Omega: |t| < pi/2.
inline bool in_omega(double t) { return std::abs(t) < 0.5 * kPi; }

// Lambda: |V|^2/2 + |Z| < 1.
inline bool in_lambda(double abs_v, double abs_z) { return 0.5 * abs_v * abs_v + abs_z < 1.0; }
inline bool in_lambda(const Vec& V, const Vec& Z) { return in_lambda(V.norm(), Z.norm()); }

/// cos t (1 - |V|^2/2 - |Z|) - (1 - cos t) |V|^2 / 4; zero on the boundary hypersurface.
inline double boundary_residual(double abs_v, double abs_z, double t) {
  const double c = std::cos(t);
  const double v2 = abs_v * abs_v;
  return c * (1.0 - 0.5 * v2 - abs_z) - 0.25 * (1.0 - c) * v2;
}

/**
 * Membership in the domain D of (V, Z, t). The defining inequality is taken
 * together with |t| < pi/2; that set is already connected (it is
 * {(V,Z) in Lambda, |t| < t_max(V,Z)}), so it coincides with the component of 0.
 */
inline bool in_D(double abs_v, double abs_z, double t) {
  return in_omega(t) && boundary_residual(abs_v, abs_z, t) > 0.0;
}
inline bool in_D(const Vec& V, const Vec& Z, double t) { return in_D(V.norm(), Z.norm(), t); }

/// Positive t on the boundary over (V, Z): 2 arctan sqrt(1 - |V|^2 / (2 (1 - |Z|))).
inline double t_max(double abs_v, double abs_z) {
  if (!(abs_z < 1.0) || !in_lambda(abs_v, abs_z)) {
    throw std::domain_error("t_max: (V, Z) must lie in Lambda");
  }
  return 2.0 * std::atan(std::sqrt(1.0 - abs_v * abs_v / (2.0 * (1.0 - abs_z))));
}
inline double t_max(const Vec& V, const Vec& Z) { return t_max(V.norm(), Z.norm()); }

enum class MembershipReason { Inside, OutsideOmega, DegenerateChart, OutsideD };

inline const char* to_string(MembershipReason r) {
  switch (r) {
    case MembershipReason::Inside: return "inside";
    case MembershipReason::OutsideOmega: return "imaginary A-part outside Omega";
    case MembershipReason::DegenerateChart: return "mixed decomposition degenerate";
    case MembershipReason::OutsideD: return "imaginary part outside D";
  }
  return "unknown";
}

struct CrownMembership {
  bool inside = false;
  MembershipReason reason = MembershipReason::OutsideD;
  std::optional<CrownCoords> coords;

  explicit operator bool() const { return inside; }
};

/// z in Cr(S) = N A D, decided through the mixed decomposition.
inline CrownMembership crown_contains(const SolvGroup& g, const ComplexGroupPoint& z) {
  CrownMembership out;
  if (!in_omega(z.zeta.imag())) {
    out.reason = MembershipReason::OutsideOmega;
    return out;
  }
  try {
    // The pivots are bounded away from zero once |t_i| < pi/2, so only exact
    // singularity is rejected here.
    out.coords = mixed_decompose(g, z, MixedOptions{1e-15});
  } catch (const DegenerateDecomposition&) {
    out.reason = MembershipReason::DegenerateChart;
    return out;
  }
  out.inside = in_D(out.coords->Yv, out.coords->Yz, out.coords->t_i);
  out.reason = out.inside ? MembershipReason::Inside : MembershipReason::OutsideD;
  return out;
}

/**
 * Boundary surface of D over norm coordinates (|V|, |Z|, t). Vertex (i, j) sits at
 * index i * resolution + j with |Z| = i / (n-1) and t = -pi/2 + pi j / (n-1);
 * |V| is solved from the boundary equation, |V|^2 = 2 (1 - |Z|) cos t / cos^2(t/2).
 * Both sheets t = +-t_max are covered by a single grid.
 */
struct BoundaryMesh {
  int resolution = 0;
  std::vector<std::array<double, 3>> vertices;  // (|V|, |Z|, t)
  std::vector<std::array<int, 3>> faces;        // zero-based triangles
};

inline BoundaryMesh boundary_mesh(int resolution) {
  if (resolution < 2) throw std::invalid_argument("boundary_mesh: resolution must be >= 2");
  const int n = resolution;
  BoundaryMesh mesh;
  mesh.resolution = n;
  mesh.vertices.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double abs_z = static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      double t = -0.5 * kPi + kPi * static_cast<double>(j) / (n - 1);
      double abs_v = 0.0;
      if (j == n - 1) {
        t = 0.5 * kPi;
      } else if (j > 0) {
        const double c = std::cos(t);
        const double h = std::cos(0.5 * t);
        abs_v = std::sqrt(std::max(0.0, 2.0 * (1.0 - abs_z) * c / (h * h)));
      }
      mesh.vertices.push_back({abs_v, abs_z, t});
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const int a = i * n + j;
      const int b = a + 1;
      const int c = a + n;
      const int d = c + 1;
      mesh.faces.push_back({a, c, b});
      mesh.faces.push_back({b, c, d});
    }
  }
  return mesh;
}

/**
 * Reduction S -> S_1 along a unit vector Z1 of z: n_1 = n / Z1^perp is the
 * Heisenberg algebra with J = J_{Z1}, and (V, Z, t) -> (V, <Z1, Z>, t) is a
 * homomorphism that extends complex-linearly to S_C.
 */
struct Reduction {
  SolvGroup target;
  Vec z1;

  GroupPoint project(const GroupPoint& x) const { return {x.V, Vec::Constant(1, z1.dot(x.Z)), x.t}; }

  ComplexGroupPoint project(const ComplexGroupPoint& x) const {
    return {x.Wv, CVec::Constant(1, (z1.cast<Complex>().transpose() * x.Wz)(0)), x.zeta};
  }

  /// Preimage with vanishing Z1^perp components.
  GroupPoint lift(const GroupPoint& x1) const { return {x1.V, z1 * x1.Z(0), x1.t}; }
  ComplexGroupPoint lift(const ComplexGroupPoint& x1) const {
    return {x1.Wv, z1.cast<Complex>() * x1.Wz(0), x1.zeta};
  }

  /// Zero-padded mixed coordinates; the composed point lies in Cr(S) whenever c1 describes a point of Cr(S_1).
  CrownCoords lift(const CrownCoords& c1) const { return {c1.Uv, z1 * c1.Uz(0), c1.t_r, c1.t_i, c1.Yv, z1 * c1.Yz(0)}; }
};

inline Reduction reduce(const SolvGroup& g, const Vec& z1, double tol = 1e-12) {
  detail::require_size(z1.size(), g.q(), "reduce Z1");
  if (std::abs(z1.norm() - 1.0) > tol) throw std::invalid_argument("reduce: Z1 must be a unit vector");
  const Mat j1 = g.algebra().rep().j_matrix(z1);
  return Reduction{SolvGroup(HTypeAlgebra(CliffordRep::from_generators({j1}))), z1};
}

}  // namespace hcrown

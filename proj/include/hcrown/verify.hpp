#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eigenfunctions.hpp"
#include "ellipticity.hpp"
#include "probe.hpp"
#include "rank_one.hpp"

namespace hcrown {

/// Seeded samplers for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Vec normal_vec(int n, double scale = 1.0) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = scale * normal();
    return v;
  }

  CVec normal_cvec(int n, double scale = 1.0) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(scale * normal(), scale * normal());
    return v;
  }

  Vec unit_vec(int n) {
    Vec v;
    do v = normal_vec(n);
    while (v.norm() < 1e-8);
    return v.normalized();
  }

  GroupPoint group_point(const SolvGroup& g, double scale = 1.0) {
    return {normal_vec(g.p(), scale), normal_vec(g.q(), scale), scale * normal()};
  }

  ComplexGroupPoint complex_point(const SolvGroup& g, double scale = 1.0) {
    return {normal_cvec(g.p(), scale), normal_cvec(g.q(), scale), Complex(scale * normal(), scale * normal())};
  }

  /// Crown coordinates with |t_i| <= t_i_bound.
  CrownCoords crown_coords(const SolvGroup& g, double t_i_bound, double scale = 1.0) {
    return {normal_vec(g.p(), scale), normal_vec(g.q(), scale), scale * normal(),
            uniform(-t_i_bound, t_i_bound), normal_vec(g.p(), scale), normal_vec(g.q(), scale)};
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline double max_abs_diff(const GroupPoint& a, const GroupPoint& b) {
  return std::max({(a.V - b.V).cwiseAbs().maxCoeff(), (a.Z - b.Z).cwiseAbs().maxCoeff(), std::abs(a.t - b.t)});
}

inline double max_abs_diff(const ComplexGroupPoint& a, const ComplexGroupPoint& b) {
  return std::max({(a.Wv - b.Wv).cwiseAbs().maxCoeff(), (a.Wz - b.Wz).cwiseAbs().maxCoeff(), std::abs(a.zeta - b.zeta)});
}

struct VerifyTolerances {
  double algebra = 1e-12;     // Clifford relations, group laws, homomorphisms
  double roundtrip = 1e-10;   // mixed decomposition and adjoint identities
  double mesh = 1e-10;        // boundary equation on mesh vertices
  double margin = 1e-8;       // ellipticity margin must exceed this
  double laplacian = 1e-6;    // relative error of the a^lambda eigen-identity
  double poisson = 1e-4;      // relative error of the P_lambda eigen-identity
  double symmetry = 1e-6;     // sigma o sigma = id
};

struct VerifyConfig {
  int q = 1;
  int multiplicity = 1;
  std::uint64_t seed = 1;
  int samples = 200;
  VerifyTolerances tol;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;      // worst residual, or smallest margin for lower-bound checks
  double tolerance = 0.0;
};

namespace detail {

inline PropertyResult upper(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, worst, tol};
}

inline PropertyResult lower(std::string name, double worst, double tol) {
  return {std::move(name), worst > tol, worst, tol};
}

}  // namespace detail

/**
 * Runs the invariant checks of every module for one group and returns one entry
 * per property. Geodesic and Poisson checks use a handful of points since each
 * needs a shooting solve; the rest use config.samples samples.
 */
inline std::vector<PropertyResult> run_verification(const VerifyConfig& cfg) {
  const SolvGroup g = SolvGroup::build(cfg.q, cfg.multiplicity);
  const VerifyTolerances& tol = cfg.tol;
  const int n = cfg.samples;
  Sampler rs(cfg.seed);
  std::vector<PropertyResult> out;

  out.push_back(detail::upper("clifford relations", g.algebra().rep().max_relation_residual(), tol.algebra));

  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec z = rs.normal_vec(g.q());
    const Mat j = g.algebra().rep().j_matrix(z);
    worst = std::max(worst, (j * j + z.squaredNorm() * Mat::Identity(g.p(), g.p())).cwiseAbs().maxCoeff());
  }
  out.push_back(detail::upper("H-type identity J_Z^2 = -|Z|^2", worst, tol.algebra));
  out.push_back(detail::upper("bracket onto z (q - rank)", g.q() - g.algebra().bracket_rank(), 0.0));

  double wn = 0.0, ws = 0.0, wc = 0.0, winv = 0.0, wdil = 0.0;
  const HTypeAlgebra& alg = g.algebra();
  for (int k = 0; k < n; ++k) {
    const NPoint a{rs.normal_vec(g.p()), rs.normal_vec(g.q())};
    const NPoint b{rs.normal_vec(g.p()), rs.normal_vec(g.q())};
    const NPoint c{rs.normal_vec(g.p()), rs.normal_vec(g.q())};
    const NPoint l = n_multiply(alg, n_multiply(alg, a, b), c);
    const NPoint r = n_multiply(alg, a, n_multiply(alg, b, c));
    wn = std::max({wn, (l.V - r.V).cwiseAbs().maxCoeff(), (l.Z - r.Z).cwiseAbs().maxCoeff()});

    const GroupPoint x = rs.group_point(g), y = rs.group_point(g), w = rs.group_point(g);
    ws = std::max(ws, max_abs_diff(s_multiply(g, s_multiply(g, x, y), w), s_multiply(g, x, s_multiply(g, y, w))));
    winv = std::max(winv, max_abs_diff(s_multiply(g, x, s_inverse(g, x)), g.identity()));

    const double t = rs.normal();
    const GroupPoint a_t = g.basis_exp(g.dim() - 1, t);
    const GroupPoint conj = s_multiply(g, s_multiply(g, a_t, x), g.basis_exp(g.dim() - 1, -t));
    wdil = std::max(wdil, max_abs_diff(conj, dilate(x, t)));

    const ComplexGroupPoint u = rs.complex_point(g), v = rs.complex_point(g), s = rs.complex_point(g);
    wc = std::max(wc, max_abs_diff(c_multiply(g, c_multiply(g, u, v), s), c_multiply(g, u, c_multiply(g, v, s))));
  }
  out.push_back(detail::upper("N associativity", wn, tol.algebra));
  out.push_back(detail::upper("S associativity", ws, tol.algebra));
  out.push_back(detail::upper("S inverse", winv, tol.algebra));
  out.push_back(detail::upper("dilation a_t x a_-t", wdil, tol.algebra));
  out.push_back(detail::upper("S_C associativity", wc, tol.algebra));

  worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const CrownCoords c = rs.crown_coords(g, 0.5 * kPi - 0.05);
    const CrownCoords d = mixed_decompose(g, mixed_compose(g, c));
    worst = std::max({worst, (c.Uv - d.Uv).cwiseAbs().maxCoeff(), (c.Uz - d.Uz).cwiseAbs().maxCoeff(),
                      (c.Yv - d.Yv).cwiseAbs().maxCoeff(), (c.Yz - d.Yz).cwiseAbs().maxCoeff(),
                      std::abs(c.t_r - d.t_r), std::abs(c.t_i - d.t_i)});
  }
  out.push_back(detail::upper("mixed decomposition round trip", worst, tol.roundtrip));

  int disagreements = 0;
  for (int k = 0; k < n; ++k) {
    const double av = rs.uniform(0.0, std::sqrt(2.0));
    const double az = rs.uniform(0.0, 1.0);
    const double t = rs.uniform(-0.5 * kPi, 0.5 * kPi);
    const bool by_tmax = in_lambda(av, az) && std::abs(t) < t_max(av, az);
    if (by_tmax != in_D(av, az, t)) ++disagreements;
  }
  out.push_back(detail::upper("D equals {|t| < t_max} (disagreements)", disagreements, 0.0));

  worst = 0.0;
  for (const auto& v : boundary_mesh(32).vertices) worst = std::max(worst, std::abs(boundary_residual(v[0], v[1], v[2])));
  out.push_back(detail::upper("boundary mesh residual", worst, tol.mesh));

  double wmul = 0.0, winvad = 0.0;
  for (int k = 0; k < n; ++k) {
    const ComplexGroupPoint x = rs.complex_point(g, 0.5), y = rs.complex_point(g, 0.5);
    const CMat ax = adjoint(g, x);
    wmul = std::max(wmul, (adjoint(g, c_multiply(g, x, y)) - ax * adjoint(g, y)).cwiseAbs().maxCoeff());
    winvad = std::max(winvad, (adjoint(g, c_inverse(g, x)) * ax - CMat::Identity(g.dim(), g.dim())).cwiseAbs().maxCoeff());
  }
  out.push_back(detail::upper("Ad multiplicative", wmul, tol.roundtrip));
  out.push_back(detail::upper("Ad(z^-1) = Ad(z)^-1", winvad, tol.roundtrip));

  // Ellipticity on 0.5 D: rays through boundary mesh vertices.
  double min_margin = std::numeric_limits<double>::infinity();
  const BoundaryMesh coarse = boundary_mesh(6);
  for (const auto& v : coarse.vertices) {
    for (double s : {0.25, 0.5}) {
      min_margin = std::min(min_margin, ellipticity_margin(g, norm_ray_point(g, v[0], v[1], v[2], s)));
    }
  }
  out.push_back(detail::lower("ellipticity margin on 0.5 D (min)", min_margin, tol.margin));

  worst = 0.0;
  for (const Complex c : {Complex(1.0, 0.0), Complex(2.0 * g.rho(), 0.0), Complex(0.5, 0.7)}) {
    const SpectralParam lambda{c};
    const Complex mu = eigenvalue(g, lambda);
    for (int k = 0; k < 5; ++k) {
      const GroupPoint x = rs.group_point(g, 0.5);
      auto f = [&](const GroupPoint& y) { return a_lambda(g, y, lambda); };
      const Complex lap = apply_laplacian(g, f, x);
      const Complex val = f(x);
      worst = std::max(worst, std::abs(lap - mu * val) / std::max(std::abs(mu * val), std::abs(val)));
    }
  }
  out.push_back(detail::upper("Laplacian of a^lambda (relative)", worst, tol.laplacian));

  double winvol = 0.0, wdist = 0.0, wpois = 0.0;
  for (int k = 0; k < 3; ++k) {
    const GroupPoint x = rs.group_point(g, 0.4);
    const GroupPoint sx = geodesic_symmetry(g, x);
    winvol = std::max(winvol, max_abs_diff(geodesic_symmetry(g, sx), x));
    wdist = std::max(wdist, std::abs(geodesic_distance(g, x) - geodesic_distance(g, sx)));

    const SpectralParam lambda{Complex(0.5, 0.7)};
    const PoissonKernel pk(g, lambda);
    const Complex val = pk(x);
    const Complex mu = eigenvalue(g, lambda);
    wpois = std::max(wpois, std::abs(apply_laplacian(g, pk, x) - mu * val) / std::abs(mu * val));
  }
  out.push_back(detail::upper("geodesic symmetry involution", winvol, tol.symmetry));
  out.push_back(detail::upper("d(e, x) = d(e, sigma x)", wdist, tol.symmetry));
  out.push_back(detail::upper("Laplacian of P_lambda (relative)", wpois, tol.poisson));

  const Reduction red = reduce(g, rs.unit_vec(g.q()));
  worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const ComplexGroupPoint x = rs.complex_point(g), y = rs.complex_point(g);
    worst = std::max(worst, max_abs_diff(red.project(c_multiply(g, x, y)),
                                         c_multiply(red.target, red.project(x), red.project(y))));
  }
  out.push_back(detail::upper("reduction homomorphism", worst, tol.algebra));

  if (is_standard_heisenberg(g)) {
    disagreements = 0;
    for (int k = 0; k < n; ++k) {
      const double a = rs.uniform(-0.7, 0.7);
      const double b = rs.uniform(-0.5, 0.5);
      const double phi = rs.uniform(-0.25 * kPi, 0.25 * kPi);
      if (!su21_in_lambda(a, b) || std::abs(su21_condition_gap(a, b, phi)) < 1e-9) continue;
      if (ball_pair_in_crown(su21_point(a, b, phi)) != su21_condition(a, b, phi)) ++disagreements;
    }
    out.push_back(detail::upper("SU(2,1) ball pair vs crown inequality (disagreements)", disagreements, 0.0));

    worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const GroupPoint x = rs.group_point(g, 0.4);
      const Vec2c w = su21_action(su21_embed(g, x), Vec2c::Zero());
      const Vec2c ws2 = su21_action(su21_embed(g, geodesic_symmetry(g, x)), Vec2c::Zero());
      worst = std::max(worst, (w + ws2).cwiseAbs().maxCoeff());
    }
    out.push_back(detail::upper("sigma vs ball model z -> -z", worst, 1e-5));
  }
  return out;
}

}  // namespace hcrown

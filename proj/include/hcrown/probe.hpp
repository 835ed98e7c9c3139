#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eigenfunctions.hpp"
#include "ellipticity.hpp"
#include "rank_one.hpp"

namespace hcrown {

struct ProbeOptions {
  int samples = 41;        // sample points on [0, 1 + overshoot]
  double overshoot = 0.1;
  double bisect_tol = 1e-12;
  bool with_margin = true;
  EllipticityOptions ellipticity;
  MixedOptions mixed;      // pivot used for the degeneracy report
};

struct ProbeRow {
  double s = 0.0;
  double margin = 0.0;  // NaN when margins are skipped
  bool member = false;
  bool degenerate = false;
  std::optional<Complex> a_lambda;  // only inside the crown
  std::optional<bool> ball_member;  // only for the standard q = 1, p = 2 group
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::optional<double> membership_exit;  // first s where crown membership fails
  std::optional<double> degenerate_at;    // first s where the mixed decomposition degenerates
  std::optional<double> ball_exit;        // first s where the ball-model pair leaves X x X
};

/// exp(i s t H) exp(i s Y): the point s (Y, t) of the mixed model at n = e, t_r = 0.
inline ComplexGroupPoint ray_point(const SolvGroup& g, const Vec& Yv, const Vec& Yz, double t, double s) {
  CrownCoords c{Vec::Zero(g.p()), Vec::Zero(g.q()), 0.0, s * t, s * Yv, s * Yz};
  return mixed_compose(g, c);
}

/// ray_point with Y_v = |V| e_1 and Y_z = |Z| e_1.
inline ComplexGroupPoint norm_ray_point(const SolvGroup& g, double abs_v, double abs_z, double t, double s) {
  Vec yv = Vec::Zero(g.p());
  Vec yz = Vec::Zero(g.q());
  yv(0) = abs_v;
  yz(0) = abs_z;
  return ray_point(g, yv, yz, t, s);
}

namespace detail {

/// Smallest s in (lo, hi] with pred false, given pred(lo) true and pred(hi) false.
inline double bisect_exit(const std::function<bool(double)>& pred, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace detail

/**
 * Walks the ray s -> s (Y, t), s in [0, 1 + overshoot], and reports where crown
 * membership is lost, where the mixed decomposition degenerates and, for the
 * q = 1, p = 2 group, where the SU(2,1) ball-model pair leaves X x X. Each exit
 * is refined by bisection between the bracketing samples.
 */
inline ProbeReport boundary_probe(const SolvGroup& g, const Vec& Yv, const Vec& Yz, double t, SpectralParam lambda,
                                  const ProbeOptions& opts = {}) {
  detail::require_size(Yv.size(), g.p(), "probe Y_v");
  detail::require_size(Yz.size(), g.q(), "probe Y_z");
  if (opts.samples < 2) throw std::invalid_argument("boundary_probe: need at least 2 samples");
  const bool ball = is_standard_heisenberg(g);

  auto member = [&](double s) { return crown_contains(g, ray_point(g, Yv, Yz, t, s)).inside; };
  auto decomposes = [&](double s) {
    try {
      mixed_decompose(g, ray_point(g, Yv, Yz, t, s), opts.mixed);
      return true;
    } catch (const DegenerateDecomposition&) {
      return false;
    }
  };
  // The singular set of the decomposition is a thin band around cos(t_i) = 0, which
  // samples can step over; a sign change of cos(s t) marks the crossing.
  auto regular = [&](double s) { return std::cos(s * t) > 0.0 && decomposes(s); };
  auto in_ball_pair = [&](double s) {
    try {
      return ball_pair_in_crown(ball_pair(su21_embed(g, ray_point(g, Yv, Yz, t, s))));
    } catch (const VanishingDenominator&) {
      return false;
    }
  };

  ProbeReport report;
  const double s_max = 1.0 + opts.overshoot;
  for (int k = 0; k < opts.samples; ++k) {
    ProbeRow row;
    row.s = s_max * k / (opts.samples - 1);
    const ComplexGroupPoint z = ray_point(g, Yv, Yz, t, row.s);
    row.member = member(row.s);
    row.degenerate = !decomposes(row.s);
    row.margin = opts.with_margin ? ellipticity_margin(g, z, opts.ellipticity) : std::nan("");
    if (row.member) row.a_lambda = a_lambda(g, z, lambda);
    if (ball) row.ball_member = in_ball_pair(row.s);
    report.rows.push_back(row);
  }

  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    const ProbeRow& prev = report.rows[k - 1];
    const ProbeRow& cur = report.rows[k];
    if (!report.membership_exit && prev.member && !cur.member) {
      report.membership_exit = detail::bisect_exit(member, prev.s, cur.s, opts.bisect_tol);
    }
    if (!report.degenerate_at && regular(prev.s) && !regular(cur.s)) {
      report.degenerate_at = detail::bisect_exit(regular, prev.s, cur.s, opts.bisect_tol);
    }
    if (ball && !report.ball_exit && *prev.ball_member && !*cur.ball_member) {
      report.ball_exit = detail::bisect_exit(in_ball_pair, prev.s, cur.s, opts.bisect_tol);
    }
  }
  return report;
}

}  // namespace hcrown

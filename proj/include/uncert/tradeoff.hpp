/**
 * @file tradeoff.hpp
 * @brief Tradeoff curves: t-sweeps of ground-state variance pairs, Legendre
 *        lower bounds and distances between minimizer families.
 */

#ifndef UNCERT_TRADEOFF_HPP_
#define UNCERT_TRADEOFF_HPP_

#include <utility>
#include <vector>

#include "uncert/metrics.hpp"
#include "uncert/spectral.hpp"

namespace uncert {

/// One sample of the lower boundary: slope parameter t, angle variance
/// x = <psi|V|psi>, number variance y = sum |psi_n|^2 d(n,0)^beta, and the
/// two lowest energies. y + t*x = E0 by construction.
struct CurvePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double E0 = 0.0;
  double E1 = 0.0;
  int n_max = 0;
};

struct TradeoffCurve {
  MetricSpec spec;
  std::vector<CurvePoint> points;
  std::vector<std::vector<double>> states;  // ground-state psi_hat per point
};

struct SweepOptions {
  SolveOptions solve;
  bool store_states = true;
};

/// n log-spaced values covering [tmin, tmax].
std::vector<double> log_spaced(double tmin, double tmax, int n);

/// (x, y) for a solved ground state.
std::pair<double, double> variance_pair(const SpectralResult& r, const MetricSpec& spec);

/// One curve point per t, truncation certified per point.
TradeoffCurve sweep(const MetricSpec& spec, const std::vector<double>& t_grid,
                    const SweepOptions& opts = {});

/// max over sampled t of E0(t) - t*x: a certified lower bound for y at
/// abscissa x in [0, v_0].
double legendre_lower_bound(const TradeoffCurve& curve, double x);

/// max over t of ||psi_A(t) - psi_B(t)|| for two sweeps on the same t-grid
/// with the standard number metric and arc vs chordal angle metrics.
double family_norm_distance(const TradeoffCurve& a, const TradeoffCurve& b);

/// Symmetric Hausdorff distance between the two ground-state families,
/// minimizing over the other family's t-samples.
double hausdorff_orbit_distance(const TradeoffCurve& a, const TradeoffCurve& b);

}  // namespace uncert

#endif  // UNCERT_TRADEOFF_HPP_

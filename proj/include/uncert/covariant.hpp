/**
 * @file covariant.hpp
 * @brief Margins of covariant phase-space observables as convolutions with
 *        noise margins, and the worst-case / calibration error estimates
 *        that make the three uncertainty regions coincide.
 */

#ifndef UNCERT_COVARIANT_HPP_
#define UNCERT_COVARIANT_HPP_

#include <utility>
#include <vector>

#include "uncert/dist.hpp"
#include "uncert/metrics.hpp"

namespace uncert {

/// Margins of the generating density operator of a covariant observable,
/// acting as independent convolution noise on both outputs.
struct NoiseMargins {
  CircleDist sigma_theta;
  IntDist sigma_n;
};

/// (rho_Theta * sigma_Theta, rho_N * sigma_N).
std::pair<CircleDist, IntDist> joint_margins(const CircleDist& rho_theta, const IntDist& rho_n,
                                             const NoiseMargins& noise);

/// max over probes rho of transport(rho * sigma, rho): a lower estimate of
/// the worst-case error, never exceeding deviation(sigma, reference).
double metric_error_estimate(const IntDist& sigma, MetricZ m, double alpha,
                             const std::vector<IntDist>& probes);
double metric_error_estimate(const CircleDist& sigma, MetricT m, double alpha,
                             const std::vector<CircleDist>& probes);

struct CalibrationEstimate {
  double last_value = 0.0;     // value at the sharpest probe in the schedule
  double extrapolated = 0.0;   // Richardson-style limit estimate
  double error_bar = 0.0;      // |extrapolated - last_value|
  std::vector<std::pair<double, double>> schedule;  // (eps_actual, value)
};

/// For each eps in the decreasing schedule, the deviation about the probe
/// center of probe * sigma, where the probe is eps-sharp at the center;
/// eps = 0 uses an exact point probe. The limit is extrapolated in eps^2.
CalibrationEstimate calibration_error_estimate(const IntDist& sigma, MetricZ m, double alpha,
                                               const std::vector<double>& eps_schedule);
CalibrationEstimate calibration_error_estimate(const CircleDist& sigma, MetricT m, double alpha,
                                               const std::vector<double>& eps_schedule);

/// Wrapped peaked probe ((1 + cos(theta - c))/2)^exponent centered on the
/// reference atom, normalized on the grid.
CircleDist peaked_probe(int grid_size, double exponent);

/// Smallest-exponent peaked probe whose deviation about the reference atom
/// is at most eps (eps = 0 gives the point probe).
CircleDist probe_for_eps(int grid_size, MetricT m, double alpha, double eps);

/// Narrowing probe family for the metric-error schedule: one probe per eps,
/// ending in the exact point probe.
std::vector<CircleDist> probes_for_schedule(int grid_size, MetricT m, double alpha,
                                            const std::vector<double>& eps_schedule);

}  // namespace uncert

#endif  // UNCERT_COVARIANT_HPP_

#include "uncert/covariant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uncert {

namespace {

void check_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw std::invalid_argument("calibration: empty eps schedule");
  for (size_t i = 0; i + 1 < eps.size(); ++i) {
    if (!(eps[i + 1] < eps[i])) {
      throw std::invalid_argument("calibration: eps schedule must decrease");
    }
  }
  if (eps.back() < 0.0) throw std::invalid_argument("calibration: eps must be nonnegative");
}

// Limit estimate assuming value(eps) = limit + C eps^2, from the last two
// schedule entries with distinct eps.
CalibrationEstimate finish_estimate(std::vector<std::pair<double, double>> schedule) {
  CalibrationEstimate out;
  out.schedule = std::move(schedule);
  out.last_value = out.schedule.back().second;
  const size_t n = out.schedule.size();
  if (out.schedule.back().first == 0.0 || n < 2) {
    out.extrapolated = out.last_value;
    out.error_bar = 0.0;
    return out;
  }
  const auto [e1, c1] = out.schedule[n - 2];
  const auto [e2, c2] = out.schedule[n - 1];
  const double d = e1 * e1 - e2 * e2;
  if (d <= 0.0) {
    out.extrapolated = out.last_value;
    out.error_bar = std::abs(c2 - c1);
    return out;
  }
  out.extrapolated = (c2 * e1 * e1 - c1 * e2 * e2) / d;
  out.error_bar = std::abs(out.extrapolated - out.last_value);
  return out;
}

// Symmetric three-atom probe {0: 1-p, +-1: p/2} on Z with deviation eps
// about 0: p = eps^alpha.
IntDist z_probe_for_eps(double eps, double alpha) {
  if (eps == 0.0) return IntDist::point_mass(0);
  const double p = std::pow(eps, alpha);
  if (!(p < 1.0)) throw std::invalid_argument("calibration: eps too large for the probe family");
  return IntDist::from_atoms({{-1, 0.5 * p}, {0, 1.0 - p}, {1, 0.5 * p}});
}

}  // namespace

std::pair<CircleDist, IntDist> joint_margins(const CircleDist& rho_theta, const IntDist& rho_n,
                                             const NoiseMargins& noise) {
  if (rho_theta.grid_size != noise.sigma_theta.grid_size) {
    throw std::invalid_argument("joint_margins: circle grids do not match");
  }
  return {convolve(rho_theta, noise.sigma_theta), convolve(rho_n, noise.sigma_n)};
}

double metric_error_estimate(const IntDist& sigma, MetricZ m, double alpha,
                             const std::vector<IntDist>& probes) {
  if (probes.empty()) throw std::invalid_argument("metric_error_estimate: no probes");
  double worst = 0.0;
  for (const IntDist& rho : probes) {
    IntDist blurred = convolve(rho, sigma);
    blurred.trim();
    worst = std::max(worst, transport_distance(blurred, rho, m, alpha).distance);
  }
  return worst;
}

double metric_error_estimate(const CircleDist& sigma, MetricT m, double alpha,
                             const std::vector<CircleDist>& probes) {
  if (probes.empty()) throw std::invalid_argument("metric_error_estimate: no probes");
  double worst = 0.0;
  for (const CircleDist& rho : probes) {
    const CircleDist blurred = convolve(rho, sigma);
    worst = std::max(worst, transport_distance(blurred, rho, m, alpha).distance);
  }
  return worst;
}

CalibrationEstimate calibration_error_estimate(const IntDist& sigma, MetricZ m, double alpha,
                                               const std::vector<double>& eps_schedule) {
  check_schedule(eps_schedule);
  std::vector<std::pair<double, double>> schedule;
  for (double eps : eps_schedule) {
    const IntDist rho = z_probe_for_eps(eps, alpha);
    const double eps_actual = deviation(rho, m, alpha, 0.0);
    IntDist blurred = convolve(rho, sigma);
    blurred.trim();
    schedule.emplace_back(eps_actual, deviation(blurred, m, alpha, 0.0));
  }
  return finish_estimate(std::move(schedule));
}

CalibrationEstimate calibration_error_estimate(const CircleDist& sigma, MetricT m, double alpha,
                                               const std::vector<double>& eps_schedule) {
  check_schedule(eps_schedule);
  const int G = sigma.grid_size;
  const double center = reference_angle(G);
  std::vector<std::pair<double, double>> schedule;
  for (double eps : eps_schedule) {
    const CircleDist rho = probe_for_eps(G, m, alpha, eps);
    const double eps_actual = deviation(rho, m, alpha, center);
    const CircleDist blurred = convolve(rho, sigma);
    schedule.emplace_back(eps_actual, deviation(blurred, m, alpha, center));
  }
  return finish_estimate(std::move(schedule));
}

CircleDist peaked_probe(int grid_size, double exponent) {
  if (exponent < 0.0) throw std::invalid_argument("peaked_probe: exponent >= 0 required");
  const int c = reference_atom(grid_size);
  CircleDist rho;
  rho.grid_size = grid_size;
  rho.atoms.resize(static_cast<size_t>(grid_size));
  const double center = reference_angle(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    const double base = 0.5 * (1.0 + std::cos(rho.angle(j) - center));
    rho.atoms[static_cast<size_t>(j)] = std::pow(base, exponent);
  }
  rho.atoms[static_cast<size_t>(c)] = 1.0;  // base == 1 exactly at the center
  rho.normalize();
  return rho;
}

CircleDist probe_for_eps(int grid_size, MetricT m, double alpha, double eps) {
  if (eps == 0.0) return CircleDist::point_mass(grid_size, reference_atom(grid_size));
  const double center = reference_angle(grid_size);
  auto dev_of = [&](double expo) {
    return deviation(peaked_probe(grid_size, expo), m, alpha, center);
  };
  double lo = 0.0, hi = 1.0;
  while (dev_of(hi) > eps) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) return CircleDist::point_mass(grid_size, reference_atom(grid_size));
  }
  for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dev_of(mid) > eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return peaked_probe(grid_size, hi);
}

std::vector<CircleDist> probes_for_schedule(int grid_size, MetricT m, double alpha,
                                            const std::vector<double>& eps_schedule) {
  check_schedule(eps_schedule);
  std::vector<CircleDist> probes;
  probes.reserve(eps_schedule.size());
  for (double eps : eps_schedule) probes.push_back(probe_for_eps(grid_size, m, alpha, eps));
  return probes;
}

}  // namespace uncert

#include "uncert/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;

void check_mu(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("closedform: mu > 0 required");
}

}  // namespace

double i1(MetricT m, double mu) {
  check_mu(mu);
  if (m == MetricT::Arc) {
    const double s = std::sqrt(mu);
    return 2.0 / s * std::atan(kPi / s);
  }
  return 2.0 * kPi / std::sqrt(mu * (mu + 4.0));
}

double i2(MetricT m, double mu) {
  check_mu(mu);
  if (m == MetricT::Arc) {
    const double s = std::sqrt(mu);
    return std::atan(kPi / s) / (mu * s) + kPi / (mu * (mu + kPi * kPi));
  }
  const double p = mu * (mu + 4.0);
  return 2.0 * kPi * (mu + 2.0) / (p * std::sqrt(p));
}

double i3(MetricT m, double mu) { return i1(m, mu) - mu * i2(m, mu); }

std::pair<double, double> discrete_pair(MetricT m, double mu) {
  const double I1 = i1(m, mu);
  const double I2 = i2(m, mu);
  const double I3 = i3(m, mu);
  const double y = 1.0 - I1 * I1 / (2.0 * kPi * I2);
  const double x = I3 / I2;
  return {x, y};
}

double dischord_curve(double x) {
  if (!(x >= 0.0) || !(x <= 2.0)) {
    throw std::invalid_argument("dischord_curve: x must lie in [0, 2]");
  }
  return 1.0 - 0.5 * std::sqrt(x * (4.0 - x));
}

ResolventState resolvent_state(MetricT m, double mu, int grid_size) {
  check_mu(mu);
  if (grid_size < 2) throw std::invalid_argument("resolvent_state: grid_size >= 2 required");

  ResolventState out;
  out.density.grid_size = grid_size;
  out.density.atoms.resize(static_cast<size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const double V = potential_value(m, 2.0, out.density.angle(j));
    const double psi = 1.0 / (mu + V);
    out.density.atoms[static_cast<size_t>(j)] = psi * psi;
  }
  out.density.normalize();

  // Fourier coefficients on a fine midpoint grid; the integrand is smooth
  // away from the wrap point so the periodic trapezoid rule converges fast.
  const int fine = std::max(1 << 14, 8 * grid_size);
  out.n_max = grid_size / 2;
  std::vector<double> psi_fine(static_cast<size_t>(fine));
  double norm2 = 0.0;
  for (int j = 0; j < fine; ++j) {
    const double theta = -kPi + 2.0 * kPi * (j + 0.5) / fine;
    psi_fine[static_cast<size_t>(j)] = 1.0 / (mu + potential_value(m, 2.0, theta));
    norm2 += psi_fine[static_cast<size_t>(j)] * psi_fine[static_cast<size_t>(j)];
  }
  norm2 *= 2.0 * kPi / fine;
  const double amp = 1.0 / std::sqrt(norm2);
  out.psi_hat.assign(static_cast<size_t>(2 * out.n_max + 1), 0.0);
  for (int n = -out.n_max; n <= out.n_max; ++n) {
    double acc = 0.0;
    for (int j = 0; j < fine; ++j) {
      const double theta = -kPi + 2.0 * kPi * (j + 0.5) / fine;
      acc += psi_fine[static_cast<size_t>(j)] * std::cos(n * theta);
    }
    acc *= 2.0 * kPi / fine;
    out.psi_hat[static_cast<size_t>(n + out.n_max)] = amp * acc / std::sqrt(2.0 * kPi);
  }
  return out;
}

double consistency_residual(MetricT m, double t, double c) {
  if (!(t > 0.0)) throw std::invalid_argument("consistency_residual: t > 0 required");
  if (!(c < 1.0)) throw std::invalid_argument("consistency_residual: c < 1 required");
  return i1(m, (1.0 - c) / t) - 2.0 * kPi * t;
}

double discrete_ground_energy(MetricT m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("discrete_ground_energy: t > 0 required");
  const double eps = 1e-12;
  double lo = eps, hi = 1.0 - eps;
  double flo = consistency_residual(m, t, lo);
  double fhi = consistency_residual(m, t, hi);
  if (flo > 0.0 || fhi < 0.0) {
    throw SolverFailure("discrete_ground_energy: root not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (consistency_residual(m, t, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace uncert

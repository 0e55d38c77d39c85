#include "uncert/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uncert/errors.hpp"
#include "uncert/spectral.hpp"

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;

// Lowest eigenvalue of the symmetric tridiagonal recurrence matrix for the
// even period-pi Mathieu solutions, truncated to size m_cut:
//   diag (0, 4, 16, ..., (2m)^2), first off-diagonal sqrt(2) q, then q.
// The eigenvalue count below x is the classic scalar LDL^T sign recurrence.
double mathieu_lowest(double q, int m_cut) {
  auto count_below = [&](double x) {
    int count = 0;
    double d = 0.0 - x;
    if (d < 0.0) ++count;
    for (int m = 1; m < m_cut; ++m) {
      const double beta = (m == 1) ? std::sqrt(2.0) * q : q;
      double denom = d;
      if (denom == 0.0) denom = 1e-300;
      d = (4.0 * static_cast<double>(m) * m - x) - beta * beta / denom;
      if (d < 0.0) ++count;
    }
    return count;
  };
  const double w = std::abs(q) * (std::sqrt(2.0) + 1.0) + 1.0;
  double lo = -w;
  double hi = 4.0 * static_cast<double>(m_cut) * m_cut + w;
  const double scale = std::max(1.0, std::abs(q));
  for (int it = 0; it < 200 && hi - lo > 1e-15 * scale; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double hyp1f1(double a, double b, double z) {
  if (b <= 0.0 && b == std::floor(b)) {
    throw std::invalid_argument("hyp1f1: b must not be a non-positive integer");
  }
  if (std::abs(z) > 200.0) {
    throw std::invalid_argument("hyp1f1: |z| > 200 is outside the validated series regime");
  }
  // Neumaier compensated summation of the term recurrence.
  double sum = 1.0, comp = 0.0;
  double term = 1.0;
  int small_streak = 0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1.0));
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    if (std::abs(term) <= 1e-17 * (std::abs(sum) + std::abs(comp)) + 1e-300) {
      if (++small_streak >= 4 && k > std::abs(z)) return sum + comp;
    } else {
      small_streak = 0;
    }
  }
  throw SolverFailure("hyp1f1: series did not converge");
}

double arc_boundary_residual(double t, double lambda) {
  if (!(t > 0.0)) throw std::invalid_argument("arc_boundary_residual: t > 0 required");
  const double s = std::sqrt(t);
  const double w = 1.0 - lambda / s;
  const double z = kPi * kPi * s;
  return w * hyp1f1(1.0 + 0.25 * w, 1.5, z) - hyp1f1(0.25 * w, 0.5, z);
}

double arc_ground_energy(double t, double bracket_lo, double bracket_hi) {
  double lo = bracket_lo, hi = bracket_hi;
  double flo = arc_boundary_residual(t, lo);
  double fhi = arc_boundary_residual(t, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw SolverFailure("arc_ground_energy: no sign change in bracket");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = arc_boundary_residual(t, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double arc_ground_energy(double t) {
  if (!(t >= 1e-3) || !(t <= 50.0)) {
    throw std::invalid_argument("arc_ground_energy: t outside validated range [1e-3, 50]");
  }
  MetricSpec spec;
  spec.metric_z = MetricZ::Std;
  spec.metric_t = MetricT::Arc;
  const SpectralResult r = ground_state_adequate(spec, t);
  const double half_gap = 0.5 * (r.E1 - r.E0);
  return arc_ground_energy(t, r.E0 - half_gap, r.E0 + half_gap);
}

double mathieu_a0(double q) {
  if (!(std::abs(q) <= 400.0)) {
    throw std::invalid_argument("mathieu_a0: |q| must not exceed 400");
  }
  // Truncation grows until the value settles; the coefficient decay is
  // superexponential once 4 m^2 dominates |q|.
  int m_cut = 16;
  double prev = mathieu_lowest(q, m_cut);
  while (m_cut <= 4096) {
    m_cut *= 2;
    const double next = mathieu_lowest(q, m_cut);
    if (std::abs(next - prev) <= 1e-13 * std::max(1.0, std::abs(next))) {
      return next;
    }
    prev = next;
  }
  throw SolverFailure("mathieu_a0: truncation not converged");
}

}  // namespace uncert

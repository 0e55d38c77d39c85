/**
 * @file closedform.hpp
 * @brief Exact solutions for the discrete number metric: the resolvent-form
 *        ground states, the I1/I2/I3 integral calculus, the parametric
 *        tradeoff and the explicit chord curve. All formulas are for the
 *        quadratic angle exponent.
 */

#ifndef UNCERT_CLOSEDFORM_HPP_
#define UNCERT_CLOSEDFORM_HPP_

#include <utility>
#include <vector>

#include "uncert/dist.hpp"
#include "uncert/metrics.hpp"

namespace uncert {

/// I1(mu) = Integral_{-pi}^{pi} dtheta / (mu + V(theta)) in closed form.
double i1(MetricT m, double mu);
/// I2 = -dI1/dmu, differentiated analytically.
double i2(MetricT m, double mu);
/// I3 = I1 - mu I2.
double i3(MetricT m, double mu);

/// Variance pair (x, y) = (Delta^2(Theta), Delta_dis(N)) of the resolvent
/// state with parameter mu; the point lies on the tradeoff curve.
std::pair<double, double> discrete_pair(MetricT m, double mu);

/// The explicit chord-metric curve y = 1 - sqrt(x (4 - x))/2 on [0, 2].
double dischord_curve(double x);

/// Normalized resolvent state psi(theta) = A / (mu + V(theta)).
struct ResolventState {
  CircleDist density;           // |psi|^2 sampled on the circle grid
  std::vector<double> psi_hat;  // Fourier coefficients, n in [-N, N]
  int n_max = 0;
};
ResolventState resolvent_state(MetricT m, double mu, int grid_size);

/// I1((1 - c)/t) - 2 pi t; its root in c is the ground energy c(t).
double consistency_residual(MetricT m, double t, double c);

/// Root of the consistency condition by bisection on c in (0, 1).
double discrete_ground_energy(MetricT m, double t);

}  // namespace uncert

#endif  // UNCERT_CLOSEDFORM_HPP_

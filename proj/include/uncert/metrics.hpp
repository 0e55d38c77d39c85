/**
 * @file metrics.hpp
 * @brief Translation-invariant metrics on the integers and on the circle,
 *        and Fourier coefficients of their powers used as periodic potentials.
 */

#ifndef UNCERT_METRICS_HPP_
#define UNCERT_METRICS_HPP_

#include <string>
#include <vector>

namespace uncert {

/// Metric on the integers: standard distance |n-m| or the discrete metric.
enum class MetricZ { Std, Disc };

/// Metric on the circle: geodesic (arc) distance or chordal distance.
enum class MetricT { Arc, Cho };

/// Selects the problem family: a metric on Z, a metric on T and the
/// error exponents (alpha for the angle side, beta for the number side).
struct MetricSpec {
  MetricZ metric_z = MetricZ::Std;
  MetricT metric_t = MetricT::Arc;
  double alpha = 2.0;
  double beta = 2.0;
};

std::string to_string(MetricZ m);
std::string to_string(MetricT m);
MetricZ metric_z_from_string(const std::string& s);
MetricT metric_t_from_string(const std::string& s);

/// Reduce an angle to the representative in (-pi, pi].
double wrap_angle(double theta);

/// Metric value d(n, k) on Z.
double metric_z_eval(MetricZ m, long long n, long long k);

/// Metric value d(theta, theta_p) on T; inputs are arbitrary reals
/// interpreted mod 2*pi. Range is [0, pi] for Arc and [0, 2] for Cho.
double metric_t_eval(MetricT m, double theta, double theta_p);

/// d_T(theta, 0)^alpha, the periodic potential entering the Hamiltonians.
double potential_value(MetricT m, double alpha, double theta);

/// Cosine Fourier coefficients v_0..v_K of the potential d_T(theta,0)^alpha,
///   v_k = (1/2pi) Integral_{-pi}^{pi} d(theta,0)^alpha cos(k theta) dtheta,
/// so that the multiplication operator is Toeplitz with entry v_{|m-n|}.
/// alpha = 2 uses closed forms; other exponents are integrated numerically.
std::vector<double> potential_fourier_coeffs(MetricT m, double alpha, int K);

}  // namespace uncert

#endif  // UNCERT_METRICS_HPP_

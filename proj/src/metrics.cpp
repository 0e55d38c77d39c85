#include "uncert/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1, 1], tabulated as the positive
// half-nodes; the rule is symmetric.
constexpr int kGaussHalf = 8;
constexpr double kGaussNode[kGaussHalf] = {
    0.09501250983763744018531934, 0.28160355077925891323046050,
    0.45801677765722738634241944, 0.61787624440264374844667176,
    0.75540440835500303389510119, 0.86563120238783174388046790,
    0.94457502307323257607798842, 0.98940093499164993259615417};
constexpr double kGaussWeight[kGaussHalf] = {
    0.18945061045506849628539672, 0.18260341504492358886676366,
    0.16915651939500253818931208, 0.14959598881657673208150173,
    0.12462897125553387205247628, 0.09515851168249278480992510,
    0.06225352393864789286284384, 0.02715245941175409485178057};

template <typename F>
double gauss_panel(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kGaussHalf; ++i) {
    const double dx = half * kGaussNode[i];
    acc += kGaussWeight[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

// Integral_0^pi f(theta) dtheta with panels sized to resolve cos(k theta)
// and a geometrically graded stack towards 0 where d^alpha may lose
// smoothness for non-integer exponents.
template <typename F>
double integrate_zero_pi(const F& f, int k, int refine) {
  const int panels = std::max(8, 2 * (k + 1)) * refine;
  const double h = kPi / panels;
  double acc = 0.0;
  // graded subdivision of the first panel [0, h]
  double hi = h;
  for (int level = 0; level < 72; ++level) {
    const double lo = hi * 0.5;
    acc += gauss_panel(f, lo, hi);
    hi = lo;
    if (hi < 1e-18) break;
  }
  acc += gauss_panel(f, 0.0, hi);
  for (int p = 1; p < panels; ++p) {
    acc += gauss_panel(f, p * h, (p + 1) * h);
  }
  return acc;
}

}  // namespace

std::string to_string(MetricZ m) { return m == MetricZ::Std ? "std" : "disc"; }
std::string to_string(MetricT m) { return m == MetricT::Arc ? "arc" : "cho"; }

MetricZ metric_z_from_string(const std::string& s) {
  if (s == "std") return MetricZ::Std;
  if (s == "disc") return MetricZ::Disc;
  throw std::invalid_argument("unknown metric on Z: " + s);
}

MetricT metric_t_from_string(const std::string& s) {
  if (s == "arc") return MetricT::Arc;
  if (s == "cho") return MetricT::Cho;
  throw std::invalid_argument("unknown metric on T: " + s);
}

double wrap_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);  // in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double metric_z_eval(MetricZ m, long long n, long long k) {
  switch (m) {
    case MetricZ::Std:
      return static_cast<double>(n >= k ? n - k : k - n);
    case MetricZ::Disc:
      return n == k ? 0.0 : 1.0;
  }
  throw std::logic_error("unreachable");
}

double metric_t_eval(MetricT m, double theta, double theta_p) {
  const double d = theta - theta_p;
  switch (m) {
    case MetricT::Arc:
      return std::abs(wrap_angle(d));
    case MetricT::Cho:
      return 2.0 * std::abs(std::sin(0.5 * d));
  }
  throw std::logic_error("unreachable");
}

double potential_value(MetricT m, double alpha, double theta) {
  return std::pow(metric_t_eval(m, theta, 0.0), alpha);
}

std::vector<double> potential_fourier_coeffs(MetricT m, double alpha, int K) {
  if (K < 1) throw std::invalid_argument("potential_fourier_coeffs: K >= 1 required");
  if (alpha < 1.0) throw std::invalid_argument("potential_fourier_coeffs: alpha >= 1 required");

  std::vector<double> v(static_cast<size_t>(K) + 1, 0.0);

  if (alpha == 2.0) {
    if (m == MetricT::Cho) {
      // 2(1 - cos theta): only the constant and first harmonic survive
      v[0] = 2.0;
      v[1] = -1.0;
      return v;
    }
    // theta^2 on (-pi, pi]
    v[0] = kPi * kPi / 3.0;
    for (int k = 1; k <= K; ++k) {
      const double s = (k % 2 == 0) ? 1.0 : -1.0;
      v[static_cast<size_t>(k)] = 2.0 * s / (static_cast<double>(k) * k);
    }
    return v;
  }

  // General exponent: the potential is even, so
  //   v_k = (1/pi) Integral_0^pi d(theta)^alpha cos(k theta) dtheta.
  for (int k = 0; k <= K; ++k) {
    auto f = [&](double th) { return potential_value(m, alpha, th) * std::cos(k * th); };
    const double coarse = integrate_zero_pi(f, k, 1);
    const double fine = integrate_zero_pi(f, k, 2);
    if (std::abs(fine - coarse) > 1e-12) {
      throw std::runtime_error("potential_fourier_coeffs: quadrature did not converge");
    }
    v[static_cast<size_t>(k)] = fine / kPi;
  }
  return v;
}

}  // namespace uncert

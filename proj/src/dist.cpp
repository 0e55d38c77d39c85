#include "uncert/dist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMassTol = 1e-12;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// Golden-section minimization of a unimodal function on [a, b].
template <typename F>
double golden_min(const F& f, double a, double b, int iters = 120) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-15; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

void check_alpha(double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("deviation exponent must satisfy alpha >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// IntDist

IntDist IntDist::point_mass(long long n) { return IntDist{n, {1.0}}; }

IntDist IntDist::from_atoms(const std::vector<std::pair<long long, double>>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("IntDist: empty atom list");
  long long lo = atoms.front().first, hi = atoms.front().first;
  for (const auto& [n, p] : atoms) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  IntDist d;
  d.offset = lo;
  d.weights.assign(static_cast<size_t>(hi - lo + 1), 0.0);
  for (const auto& [n, p] : atoms) d.weights[static_cast<size_t>(n - lo)] += p;
  return d;
}

double IntDist::at(long long n) const {
  if (n < lo() || n > hi()) return 0.0;
  return weights[static_cast<size_t>(n - offset)];
}

double IntDist::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void IntDist::trim() {
  size_t a = 0, b = weights.size();
  while (a < b && weights[a] == 0.0) ++a;
  while (b > a && weights[b - 1] == 0.0) --b;
  weights = std::vector<double>(weights.begin() + static_cast<long>(a),
                                weights.begin() + static_cast<long>(b));
  offset += static_cast<long long>(a);
  if (weights.empty()) {
    weights = {0.0};
  }
}

void IntDist::normalize() {
  const double s = total_mass();
  if (s <= 0.0) throw std::invalid_argument("IntDist: cannot normalize zero mass");
  for (double& w : weights) w /= s;
}

void IntDist::validate() const {
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) throw std::invalid_argument("IntDist: negative weight");
  }
  if (std::abs(total_mass() - 1.0) > kMassTol) {
    throw std::invalid_argument("IntDist: mass differs from 1 beyond 1e-12");
  }
}

// ---------------------------------------------------------------------------
// CircleDist

CircleDist CircleDist::equidistribution(int grid_size) {
  if (grid_size < 1) throw std::invalid_argument("CircleDist: grid_size >= 1 required");
  CircleDist d;
  d.grid_size = grid_size;
  d.atoms.assign(static_cast<size_t>(grid_size), 1.0 / grid_size);
  return d;
}

CircleDist CircleDist::point_mass(int grid_size, int index) {
  if (index < 0 || index >= grid_size) throw std::invalid_argument("CircleDist: index out of range");
  CircleDist d;
  d.grid_size = grid_size;
  d.atoms.assign(static_cast<size_t>(grid_size), 0.0);
  d.atoms[static_cast<size_t>(index)] = 1.0;
  return d;
}

double CircleDist::angle(int index) const {
  return -kPi + 2.0 * kPi * (index + 0.5) / grid_size;
}

double CircleDist::total_mass() const {
  double s = 0.0;
  for (double a : atoms) s += a;
  return s;
}

void CircleDist::normalize() {
  const double s = total_mass();
  if (s <= 0.0) throw std::invalid_argument("CircleDist: cannot normalize zero mass");
  for (double& a : atoms) a /= s;
}

void CircleDist::validate() const {
  if (grid_size < 1 || atoms.size() != static_cast<size_t>(grid_size)) {
    throw std::invalid_argument("CircleDist: atom count does not match grid");
  }
  for (double a : atoms) {
    if (a < 0.0 || !std::isfinite(a)) throw std::invalid_argument("CircleDist: negative atom");
  }
  if (std::abs(total_mass() - 1.0) > kMassTol) {
    throw std::invalid_argument("CircleDist: mass differs from 1 beyond 1e-12");
  }
}

int reference_atom(int grid_size) {
  if (grid_size < 2 || grid_size % 2 != 0) {
    throw std::invalid_argument("reference_atom: even grid required");
  }
  return grid_size / 2;
}

double reference_angle(int grid_size) { return kPi / grid_size; }

// ---------------------------------------------------------------------------
// Deviation measures

double deviation(const IntDist& mu, MetricZ m, double alpha, double x) {
  check_alpha(alpha);
  double acc = 0.0;
  for (size_t i = 0; i < mu.weights.size(); ++i) {
    const double w = mu.weights[i];
    if (w == 0.0) continue;
    const double n = static_cast<double>(mu.offset + static_cast<long long>(i));
    const double d = (m == MetricZ::Std) ? std::abs(n - x) : (n == x ? 0.0 : 1.0);
    acc += w * std::pow(d, alpha);
  }
  return std::pow(acc, 1.0 / alpha);
}

double deviation(const CircleDist& mu, MetricT m, double alpha, double x) {
  check_alpha(alpha);
  double acc = 0.0;
  for (int j = 0; j < mu.grid_size; ++j) {
    const double w = mu.atoms[static_cast<size_t>(j)];
    if (w == 0.0) continue;
    acc += w * std::pow(metric_t_eval(m, mu.angle(j), x), alpha);
  }
  return std::pow(acc, 1.0 / alpha);
}

MinDeviationZ min_deviation(const IntDist& mu, MetricZ m, double alpha) {
  check_alpha(alpha);
  MinDeviationZ best{std::numeric_limits<double>::infinity(), 0};
  for (long long n = mu.lo() - 1; n <= mu.hi() + 1; ++n) {
    const double v = deviation(mu, m, alpha, static_cast<double>(n));
    if (v < best.value) {  // ascending scan: ties keep the smaller integer
      best = {v, n};
    }
  }
  return best;
}

MinDeviationT min_deviation_real(const IntDist& mu, MetricZ m, double alpha) {
  check_alpha(alpha);
  if (m == MetricZ::Disc) {
    // No real reference beats the best atom for the discrete metric.
    const auto z = min_deviation(mu, m, alpha);
    return {z.value, static_cast<double>(z.argmin)};
  }
  const double lo = static_cast<double>(mu.lo()) - 1.0;
  const double hi = static_cast<double>(mu.hi()) + 1.0;
  auto f = [&](double x) { return deviation(mu, m, alpha, x); };
  const double x = golden_min(f, lo, hi, 200);
  return {f(x), x};
}

MinDeviationT min_deviation(const CircleDist& mu, MetricT m, double alpha) {
  check_alpha(alpha);
  mu.validate();
  const int G = mu.grid_size;
  auto f = [&](double x) { return deviation(mu, m, alpha, x); };

  int best_j = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int j = 0; j < G; ++j) {
    const double v = f(mu.angle(j));
    if (v < best_v) {  // ascending angles: ties keep the smaller representative
      best_v = v;
      best_j = j;
    }
  }
  const double h = 2.0 * kPi / G;
  const double x = golden_min(f, mu.angle(best_j) - h, mu.angle(best_j) + h);
  double xr = wrap_angle(x);
  double vr = f(xr);
  if (vr > best_v) {
    xr = mu.angle(best_j);
    vr = best_v;
  }
  return {vr, xr};
}

double circular_variance(const CircleDist& mu) {
  mu.validate();
  std::complex<double> r{0.0, 0.0};
  for (int j = 0; j < mu.grid_size; ++j) {
    r += mu.atoms[static_cast<size_t>(j)] * std::polar(1.0, mu.angle(j));
  }
  return 2.0 * (1.0 - std::abs(r));
}

// ---------------------------------------------------------------------------
// Convolution

IntDist convolve(const IntDist& mu, const IntDist& nu) {
  IntDist out;
  out.offset = mu.offset + nu.offset;
  out.weights.assign(mu.weights.size() + nu.weights.size() - 1, 0.0);
  for (size_t i = 0; i < mu.weights.size(); ++i) {
    const double wi = mu.weights[i];
    if (wi == 0.0) continue;
    for (size_t j = 0; j < nu.weights.size(); ++j) {
      out.weights[i + j] += wi * nu.weights[j];
    }
  }
  return out;
}

CircleDist convolve(const CircleDist& mu, const CircleDist& nu) {
  if (mu.grid_size != nu.grid_size) {
    throw std::invalid_argument("convolve: circle grids do not match");
  }
  const int G = mu.grid_size;
  const int z0 = reference_atom(G);
  CircleDist out;
  out.grid_size = G;
  out.atoms.assign(static_cast<size_t>(G), 0.0);
  for (int i = 0; i < G; ++i) {
    const double wi = mu.atoms[static_cast<size_t>(i)];
    if (wi == 0.0) continue;
    for (int j = 0; j < G; ++j) {
      const double wj = nu.atoms[static_cast<size_t>(j)];
      if (wj == 0.0) continue;
      const int k = static_cast<int>((static_cast<long long>(i) + j - z0 + 2LL * G) % G);
      out.atoms[static_cast<size_t>(k)] += wi * wj;
    }
  }
  return out;
}

}  // namespace uncert

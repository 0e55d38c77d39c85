#include "uncert/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

// <psi|V|psi> via the Toeplitz coefficients: v_0 + 2 sum_k v_k s_k with
// s_k the k-shifted overlap of the coefficient vector.
double quadratic_form_toeplitz(const std::vector<double>& psi, const std::vector<double>& v) {
  const size_t dim = psi.size();
  double acc = v[0];  // sum psi^2 = 1
  for (size_t k = 1; k < v.size() && k < dim; ++k) {
    if (v[k] == 0.0) continue;
    double s = 0.0;
    for (size_t n = 0; n + k < dim; ++n) s += psi[n] * psi[n + k];
    acc += 2.0 * v[k] * s;
  }
  return acc;
}

double norm_distance_padded(const std::vector<double>& a, int na, const std::vector<double>& b,
                            int nb) {
  const int n = std::max(na, nb);
  double acc = 0.0;
  for (int k = -n; k <= n; ++k) {
    const double ca = (k >= -na && k <= na) ? a[static_cast<size_t>(k + na)] : 0.0;
    const double cb = (k >= -nb && k <= nb) ? b[static_cast<size_t>(k + nb)] : 0.0;
    acc += (ca - cb) * (ca - cb);
  }
  return std::sqrt(acc);
}

double directed_hausdorff(const TradeoffCurve& a, const TradeoffCurve& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.states.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < b.states.size(); ++j) {
      best = std::min(best, norm_distance_padded(a.states[i], a.points[i].n_max, b.states[j],
                                                 b.points[j].n_max));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

void require_states(const TradeoffCurve& c, const char* who) {
  if (c.states.size() != c.points.size()) {
    throw std::invalid_argument(std::string(who) + ": curve was swept without stored states");
  }
}

}  // namespace

std::vector<double> log_spaced(double tmin, double tmax, int n) {
  if (!(tmin > 0.0) || !(tmax >= tmin) || n < 1) {
    throw std::invalid_argument("log_spaced: need 0 < tmin <= tmax and n >= 1");
  }
  std::vector<double> grid(static_cast<size_t>(n));
  if (n == 1) {
    grid[0] = tmin;
    return grid;
  }
  const double l0 = std::log(tmin), l1 = std::log(tmax);
  for (int i = 0; i < n; ++i) {
    grid[static_cast<size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  }
  return grid;
}

std::pair<double, double> variance_pair(const SpectralResult& r, const MetricSpec& spec) {
  const std::vector<double> v = potential_fourier_coeffs(spec.metric_t, spec.alpha, 2 * r.n_max);
  const double x = quadratic_form_toeplitz(r.psi_hat, v);
  double y = 0.0;
  for (int n = -r.n_max; n <= r.n_max; ++n) {
    const double c = r.coeff(n);
    const double d = metric_z_eval(spec.metric_z, n, 0);
    y += c * c * (spec.beta == 2.0 ? d * d : (spec.beta == 1.0 ? d : std::pow(d, spec.beta)));
  }
  return {x, y};
}

TradeoffCurve sweep(const MetricSpec& spec, const std::vector<double>& t_grid,
                    const SweepOptions& opts) {
  for (size_t i = 0; i + 1 < t_grid.size(); ++i) {
    if (!(t_grid[i] < t_grid[i + 1])) {
      throw std::invalid_argument("sweep: t grid must be positive and strictly increasing");
    }
  }
  if (!t_grid.empty() && !(t_grid.front() > 0.0)) {
    throw std::invalid_argument("sweep: t grid must be positive");
  }

  TradeoffCurve curve;
  curve.spec = spec;
  curve.points.reserve(t_grid.size());
  for (double t : t_grid) {
    SpectralResult r = ground_state_adequate(spec, t, opts.solve);
    const auto [x, y] = variance_pair(r, spec);
    if (std::abs(y + t * x - r.E0) > 1e-9 * std::max(1.0, std::abs(r.E0))) {
      throw SolverFailure("sweep: ground-state expectation identity violated");
    }
    curve.points.push_back({t, x, y, r.E0, r.E1, r.n_max});
    if (opts.store_states) curve.states.push_back(std::move(r.psi_hat));
  }
  return curve;
}

double legendre_lower_bound(const TradeoffCurve& curve, double x) {
  if (curve.points.empty()) throw std::invalid_argument("legendre_lower_bound: empty curve");
  const double v0 = potential_fourier_coeffs(curve.spec.metric_t, curve.spec.alpha, 1)[0];
  if (!(x >= 0.0) || !(x <= v0)) {
    throw std::invalid_argument("legendre_lower_bound: x outside [0, v0]");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const CurvePoint& p : curve.points) {
    best = std::max(best, p.E0 - p.t * x);
  }
  return best;
}

double family_norm_distance(const TradeoffCurve& a, const TradeoffCurve& b) {
  require_states(a, "family_norm_distance");
  require_states(b, "family_norm_distance");
  if (a.points.size() != b.points.size()) {
    throw std::invalid_argument("family_norm_distance: t grids differ");
  }
  if (a.spec.metric_z != MetricZ::Std || b.spec.metric_z != MetricZ::Std) {
    throw std::invalid_argument("family_norm_distance: expects the Std number metric");
  }
  double worst = 0.0;
  for (size_t i = 0; i < a.points.size(); ++i) {
    if (std::abs(a.points[i].t - b.points[i].t) > 1e-12 * a.points[i].t) {
      throw std::invalid_argument("family_norm_distance: t grids differ");
    }
    worst = std::max(worst, norm_distance_padded(a.states[i], a.points[i].n_max, b.states[i],
                                                 b.points[i].n_max));
  }
  return worst;
}

double hausdorff_orbit_distance(const TradeoffCurve& a, const TradeoffCurve& b) {
  require_states(a, "hausdorff_orbit_distance");
  require_states(b, "hausdorff_orbit_distance");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace uncert

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uncert/closedform.hpp"
#include "uncert/errors.hpp"
#include "uncert/spectral.hpp"
#include "uncert/tradeoff.hpp"

using namespace uncert;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference quadrature: composite Simpson over [-pi, pi] for the resolvent
// integrals (smooth interior; corners only at the endpoints).
template <typename F>
double simpson(const F& f) {
  const int n = 1 << 17;
  const double h = 2.0 * kPi / n;
  double acc = f(-kPi) + f(kPi);
  for (int i = 1; i < n; ++i) {
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f(-kPi + i * h);
  }
  return acc * h / 3.0;
}

double quad_i1(MetricT m, double mu) {
  return simpson([&](double th) { return 1.0 / (mu + potential_value(m, 2.0, th)); });
}

double quad_i2(MetricT m, double mu) {
  return simpson([&](double th) {
    const double d = mu + potential_value(m, 2.0, th);
    return 1.0 / (d * d);
  });
}

double quad_i3(MetricT m, double mu) {
  return simpson([&](double th) {
    const double V = potential_value(m, 2.0, th);
    const double d = mu + V;
    return V / (d * d);
  });
}

MetricSpec disc_spec(MetricT m) {
  MetricSpec s;
  s.metric_z = MetricZ::Disc;
  s.metric_t = m;
  return s;
}

// Disc/Arc states carry 1/n^2 coefficient tails (the resolvent profile has a
// derivative jump at the cut point), so the sup-norm tail gate is relaxed to
// 1e-6 there; the energy error stays quadratically small.
SolveOptions disc_arc_options() {
  SolveOptions o;
  o.tail_tol = 1e-6;
  return o;
}

}  // namespace

TEST_CASE("closed-form I1 values") {
  CHECK(i1(MetricT::Arc, kPi * kPi) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(i1(MetricT::Cho, 1.0) == doctest::Approx(2.0 * kPi / std::sqrt(5.0)).epsilon(1e-15));
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    for (double mu : {0.3, 1.0, kPi * kPi, 10.0}) {
      CHECK(i1(m, mu) == doctest::Approx(quad_i1(m, mu)).epsilon(1e-10));
    }
    const double mu = 1e6;
    CHECK(i1(m, mu) * mu == doctest::Approx(2.0 * kPi).epsilon(1e-5));
  }
  CHECK_THROWS_AS(i1(MetricT::Arc, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(i1(MetricT::Cho, -1.0), std::invalid_argument);
}

TEST_CASE("I2 and I3 match quadrature and the derivative identity") {
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    for (double mu : {0.3, 1.0, 5.0}) {
      CHECK(i2(m, mu) == doctest::Approx(quad_i2(m, mu)).epsilon(1e-10));
      CHECK(i3(m, mu) == doctest::Approx(quad_i3(m, mu)).epsilon(1e-10));
      const double h = 1e-5;
      const double fd = -(i1(m, mu + h) - i1(m, mu - h)) / (2.0 * h);
      CHECK(i2(m, mu) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("chord pair eliminates mu onto the explicit curve") {
  for (double mu : {0.01, 0.1, 1.0, 3.0, 30.0}) {
    const auto [x, y] = discrete_pair(MetricT::Cho, mu);
    CHECK(y == doctest::Approx(dischord_curve(x)).epsilon(1e-12));
  }
}

TEST_CASE("parametric limits of the discrete pair") {
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    const double v0 = potential_fourier_coeffs(m, 2.0, 1)[0];
    // mu large enough to sit near the limit but clear of the I1 - mu I2
    // cancellation floor
    const auto big = discrete_pair(m, 1e8);
    CHECK(big.first == doctest::Approx(v0).epsilon(1e-5));
    CHECK(std::abs(big.second) <= 1e-5);
    const auto small = discrete_pair(m, 1e-10);
    CHECK(small.first == doctest::Approx(0.0).epsilon(1e-4));
    CHECK(small.second == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("dischord curve values") {
  CHECK(dischord_curve(2.0) == doctest::Approx(0.0));
  CHECK(dischord_curve(0.0) == doctest::Approx(1.0));
  const double x = 2.0 - std::sqrt(2.0);
  CHECK(dischord_curve(x) == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(dischord_curve(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(dischord_curve(2.1), std::invalid_argument);
}

TEST_CASE("resolvent state is consistent with the pair and stays positive") {
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    for (double mu : {0.2, 1.0, 5.0}) {
      const ResolventState st = resolvent_state(m, mu, 512);
      for (double a : st.density.atoms) CHECK(a > 0.0);
      // <psi|V|psi> against the closed-form x, by quadrature
      const double num = quad_i3(m, mu);
      const double den = quad_i2(m, mu);
      const auto [x, y] = discrete_pair(m, mu);
      CHECK(num / den == doctest::Approx(x).epsilon(1e-8));
      // Fourier coefficients are normalized
      double norm2 = 0.0;
      for (double c : st.psi_hat) norm2 += c * c;
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("resolvent state matches the eigensolver ground state") {
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    const double t = 1.0;
    const SpectralResult r = ground_state_adequate(
        disc_spec(m), t, m == MetricT::Arc ? disc_arc_options() : SolveOptions{});
    const double mu = (1.0 - r.E0) / t;
    const ResolventState st = resolvent_state(m, mu, 512);
    double overlap = 0.0;
    for (int n = -r.n_max; n <= r.n_max; ++n) {
      if (n >= -st.n_max && n <= st.n_max) {
        overlap += r.coeff(n) * st.psi_hat[static_cast<size_t>(n + st.n_max)];
      }
    }
    CHECK(overlap >= 1.0 - 1e-6);
  }
}

TEST_CASE("consistency condition reproduces the sweep energy") {
  SUBCASE("chord") {
    for (double t : {0.1, 1.0, 10.0}) {
      const double root = discrete_ground_energy(MetricT::Cho, t);
      const SpectralResult r = ground_state_adequate(disc_spec(MetricT::Cho), t);
      CHECK(root == doctest::Approx(r.E0).epsilon(1e-8));
    }
  }
  SUBCASE("arc") {
    for (double t : {0.1, 1.0}) {
      const double root = discrete_ground_energy(MetricT::Arc, t);
      const SpectralResult r = ground_state_adequate(disc_spec(MetricT::Arc), t, disc_arc_options());
      CHECK(root == doctest::Approx(r.E0).epsilon(1e-8));
    }
  }
  SUBCASE("residual is monotone in c") {
    for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
      double prev = consistency_residual(m, 0.7, 0.001);
      for (double c : {0.2, 0.4, 0.6, 0.8, 0.99}) {
        const double cur = consistency_residual(m, 0.7, c);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
  SUBCASE("small-t root vanishes") {
    CHECK(discrete_ground_energy(MetricT::Cho, 1e-4) < 1e-3);
    CHECK(discrete_ground_energy(MetricT::Arc, 1e-4) < 1e-3);
  }
}

TEST_CASE("parametric curve matches the spectral sweep pointwise") {
  SUBCASE("chord, wide t-range") {
    const auto grid = log_spaced(1e-3, 50.0, 12);
    SweepOptions opts;
    opts.store_states = false;
    const TradeoffCurve curve = sweep(disc_spec(MetricT::Cho), grid, opts);
    for (const CurvePoint& p : curve.points) {
      const double mu = (1.0 - p.E0) / p.t;
      const auto [x, y] = discrete_pair(MetricT::Cho, mu);
      CHECK(std::abs(x - p.x) < 1e-6);
      CHECK(std::abs(y - p.y) < 1e-6);
    }
  }
  SUBCASE("arc, dense path range") {
    const auto grid = log_spaced(1e-3, 4.0, 8);
    SweepOptions opts;
    opts.solve = disc_arc_options();
    opts.store_states = false;
    const TradeoffCurve curve = sweep(disc_spec(MetricT::Arc), grid, opts);
    for (const CurvePoint& p : curve.points) {
      const double mu = (1.0 - p.E0) / p.t;
      const auto [x, y] = discrete_pair(MetricT::Arc, mu);
      CHECK(std::abs(x - p.x) < 1e-6);
      CHECK(std::abs(y - p.y) < 1e-6);
    }
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uncert/metrics.hpp"
#include "uncert/special.hpp"
#include "uncert/spectral.hpp"

using namespace uncert;

namespace {

constexpr double kPi = std::numbers::pi;

MetricSpec std_arc() {
  MetricSpec s;
  s.metric_z = MetricZ::Std;
  s.metric_t = MetricT::Arc;
  return s;
}

MetricSpec std_cho() {
  MetricSpec s;
  s.metric_z = MetricZ::Std;
  s.metric_t = MetricT::Cho;
  return s;
}

}  // namespace

TEST_CASE("series reductions of 1F1") {
  CHECK(hyp1f1(0.3, 0.7, 0.0) == doctest::Approx(1.0));
  for (double z : {-3.0, 0.5, 10.0, 50.0}) {
    CHECK(hyp1f1(0.5, 0.5, z) == doctest::Approx(std::exp(z)).epsilon(1e-12));
    CHECK(hyp1f1(1.0, 2.0, z) == doctest::Approx((std::exp(z) - 1.0) / z).epsilon(1e-12));
  }
}

TEST_CASE("1F1 differentiation formula holds against finite differences") {
  // d/dz 1F1(a;b;z) = (a/b) 1F1(a+1;b+1;z), the relation behind the
  // boundary condition
  for (double a : {-0.7, 0.25, 1.5}) {
    for (double z : {0.3, 2.0, 9.8696}) {
      const double h = 1e-6;
      const double fd = (hyp1f1(a, 0.5, z + h) - hyp1f1(a, 0.5, z - h)) / (2.0 * h);
      const double exact = a / 0.5 * hyp1f1(a + 1.0, 1.5, z);
      CHECK(fd == doctest::Approx(exact).epsilon(1e-8));
    }
  }
}

TEST_CASE("1F1 preconditions") {
  CHECK_THROWS_AS(hyp1f1(0.3, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hyp1f1(0.3, -2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hyp1f1(0.3, 0.7, 201.0), std::invalid_argument);
}

TEST_CASE("boundary residual vanishes at the spectral ground energy") {
  const SpectralResult r = ground_state_adequate(std_arc(), 1.0);
  const double res = arc_boundary_residual(1.0, r.E0);
  const double s = std::sqrt(1.0);
  const double w = 1.0 - r.E0 / s;
  const double scale = std::abs(w * hyp1f1(1.0 + 0.25 * w, 1.5, kPi * kPi * s)) +
                       std::abs(hyp1f1(0.25 * w, 0.5, kPi * kPi * s));
  CHECK(std::abs(res) / scale <= 1e-6);

  // the sign changes across the lowest root
  const double half_gap = 0.5 * (r.E1 - r.E0);
  const double lo = arc_boundary_residual(1.0, r.E0 - half_gap);
  const double hi = arc_boundary_residual(1.0, r.E0 + half_gap);
  CHECK(((lo < 0.0) != (hi < 0.0)));
}

TEST_CASE("arc ground energy oracle") {
  SUBCASE("agrees with the eigensolver at t = 1") {
    const SpectralResult r = ground_state_adequate(std_arc(), 1.0);
    CHECK(std::abs(arc_ground_energy(1.0) - r.E0) < 1e-8);
  }
  SUBCASE("small t follows first-order perturbation theory") {
    const double t = 1e-3;
    CHECK(arc_ground_energy(t) == doctest::Approx(kPi * kPi / 3.0 * t).epsilon(2e-2));
  }
  SUBCASE("monotone and concave on a grid") {
    std::vector<double> ts, cs;
    for (int i = 0; i < 8; ++i) {
      ts.push_back(0.1 * std::pow(10.0, 2.0 * i / 7.0));
      cs.push_back(arc_ground_energy(ts.back()));
    }
    for (size_t i = 0; i + 1 < ts.size(); ++i) CHECK(cs[i + 1] > cs[i]);
    for (size_t i = 0; i + 2 < ts.size(); ++i) {
      const double s01 = (cs[i + 1] - cs[i]) / (ts[i + 1] - ts[i]);
      const double s12 = (cs[i + 2] - cs[i + 1]) / (ts[i + 2] - ts[i + 1]);
      CHECK(s12 <= s01 + 1e-10);
    }
  }
  SUBCASE("range validation") {
    CHECK_THROWS_AS(arc_ground_energy(1e-4), std::invalid_argument);
    CHECK_THROWS_AS(arc_ground_energy(60.0), std::invalid_argument);
  }
}

TEST_CASE("Mathieu characteristic value") {
  SUBCASE("a0(0) = 0") { CHECK(std::abs(mathieu_a0(0.0)) <= 1e-12); }
  SUBCASE("second-order expansion at small q") {
    for (double q : {-0.01, -0.1}) {
      CHECK(std::abs(mathieu_a0(q) - (-0.5 * q * q)) <= std::pow(q, 4.0));
    }
  }
  SUBCASE("even in q near zero") {
    for (double q : {0.05, 0.2}) {
      CHECK(mathieu_a0(q) == doctest::Approx(mathieu_a0(-q)).epsilon(1e-11));
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(mathieu_a0(-401.0), std::invalid_argument);
    CHECK_THROWS_AS(mathieu_a0(401.0), std::invalid_argument);
  }
}

TEST_CASE("Mathieu identity c(t) = 2t + a0(-4t)/4 against the eigensolver") {
  for (double t : {0.1, 1.0, 10.0}) {
    const SpectralResult r = ground_state_adequate(std_cho(), t);
    const double c = 2.0 * t + mathieu_a0(-4.0 * t) / 4.0;
    CHECK(std::abs(c - r.E0) < 1e-8);
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "test_util.hpp"
#include "uncert/dist.hpp"

using namespace uncert;
using uncert_test::make_rng;
using uncert_test::random_circle_dist;
using uncert_test::random_dense_circle_dist;
using uncert_test::random_int_dist;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("deviation of a point mass is the metric value") {
  const IntDist pm = IntDist::point_mass(3);
  CHECK(deviation(pm, MetricZ::Std, 2.0, 0.0) == doctest::Approx(3.0));
  CHECK(deviation(pm, MetricZ::Std, 1.0, 5.0) == doctest::Approx(2.0));
  CHECK(deviation(pm, MetricZ::Disc, 2.0, 3.0) == 0.0);
  CHECK(deviation(pm, MetricZ::Disc, 2.0, 2.0) == doctest::Approx(1.0));

  const CircleDist cp = CircleDist::point_mass(64, 10);
  const double th = cp.angle(10);
  for (double alpha : {1.0, 2.0, 3.0}) {
    CHECK(deviation(cp, MetricT::Arc, alpha, 0.3) ==
          doctest::Approx(metric_t_eval(MetricT::Arc, th, 0.3)).epsilon(1e-13));
    CHECK(deviation(cp, MetricT::Cho, alpha, 0.3) ==
          doctest::Approx(metric_t_eval(MetricT::Cho, th, 0.3)).epsilon(1e-13));
  }
}

TEST_CASE("equidistribution deviations reproduce the closed values") {
  const CircleDist eq = CircleDist::equidistribution(512);
  // exact grid sum as the independent reference
  double exact = 0.0;
  for (int j = 0; j < 512; ++j) exact += eq.atoms[static_cast<size_t>(j)] *
                                         std::pow(std::abs(eq.angle(j)), 2.0);
  CHECK(deviation(eq, MetricT::Arc, 2.0, 0.0) == doctest::Approx(std::sqrt(exact)).epsilon(1e-14));
  CHECK(deviation(eq, MetricT::Arc, 2.0, 0.0) ==
        doctest::Approx(std::sqrt(kPi * kPi / 3.0)).epsilon(1e-4));
  CHECK(deviation(eq, MetricT::Cho, 2.0, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("min_deviation on Z restricts the reference to integers") {
  const IntDist d = IntDist::from_atoms({{0, 0.5}, {1, 0.5}});
  const auto z = min_deviation(d, MetricZ::Std, 2.0);
  CHECK(z.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(z.argmin == 0);  // tie with 1 broken towards the smaller integer

  const auto r = min_deviation_real(d, MetricZ::Std, 2.0);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r.argmin == doctest::Approx(0.5).epsilon(1e-6));

  const auto pm = min_deviation(IntDist::point_mass(-4), MetricZ::Std, 2.0);
  CHECK(pm.value == 0.0);
  CHECK(pm.argmin == -4);
}

TEST_CASE("integer-restricted deviation dominates the usual standard deviation") {
  auto rng = make_rng(11);
  for (int i = 0; i < 50; ++i) {
    const IntDist d = random_int_dist(rng, 6, 8);
    const auto z = min_deviation(d, MetricZ::Std, 2.0);
    const auto r = min_deviation_real(d, MetricZ::Std, 2.0);
    CHECK(z.value >= r.value - 1e-12);
  }
}

TEST_CASE("min_deviation on the circle lands on the symmetry center") {
  CircleDist d;
  d.grid_size = 64;
  d.atoms.assign(64, 0.0);
  d.atoms[34] = 0.5;  // angle(34) = -angle(29): symmetric pair about 0
  d.atoms[29] = 0.5;
  d.validate();
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    const auto r = min_deviation(d, m, 2.0);
    CHECK(std::abs(r.argmin) < 1e-7);
  }
  const auto pm = min_deviation(CircleDist::point_mass(64, 7), MetricT::Arc, 2.0);
  CHECK(pm.value <= 1e-12);
  CHECK(pm.argmin == doctest::Approx(CircleDist::point_mass(64, 7).angle(7)).epsilon(1e-9));
}

TEST_CASE("circular variance") {
  CHECK(circular_variance(CircleDist::point_mass(128, 5)) == doctest::Approx(0.0));
  CHECK(circular_variance(CircleDist::equidistribution(128)) == doctest::Approx(2.0).epsilon(1e-13));
  CircleDist anti;
  anti.grid_size = 128;
  anti.atoms.assign(128, 0.0);
  anti.atoms[10] = 0.5;
  anti.atoms[10 + 64] = 0.5;
  CHECK(circular_variance(anti) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("circular variance equals the squared chordal min-deviation") {
  auto rng = make_rng(12);
  for (int i = 0; i < 20; ++i) {
    const CircleDist d = random_dense_circle_dist(rng, 128);
    const auto r = min_deviation(d, MetricT::Cho, 2.0);
    CHECK(circular_variance(d) == doctest::Approx(r.value * r.value).epsilon(1e-10));
  }
}

TEST_CASE("convolution on Z") {
  const IntDist mu = IntDist::from_atoms({{0, 0.5}, {1, 0.5}});
  SUBCASE("identity") {
    const IntDist out = convolve(IntDist::point_mass(0), mu);
    CHECK(out.at(0) == doctest::Approx(0.5));
    CHECK(out.at(1) == doctest::Approx(0.5));
  }
  SUBCASE("point masses add") {
    const IntDist out = convolve(IntDist::point_mass(4), IntDist::point_mass(-7));
    CHECK(out.at(-3) == doctest::Approx(1.0));
    CHECK(out.weights.size() == 1);
  }
  SUBCASE("coin convolution") {
    const IntDist out = convolve(mu, mu);
    CHECK(out.at(0) == doctest::Approx(0.25));
    CHECK(out.at(1) == doctest::Approx(0.5));
    CHECK(out.at(2) == doctest::Approx(0.25));
  }
}

TEST_CASE("convolution on the circle grid") {
  auto rng = make_rng(13);
  const int G = 64;
  const CircleDist mu = random_dense_circle_dist(rng, G);

  SUBCASE("reference atom is the exact identity") {
    const CircleDist out = convolve(CircleDist::point_mass(G, reference_atom(G)), mu);
    for (int j = 0; j < G; ++j) {
      CHECK(out.atoms[static_cast<size_t>(j)] == mu.atoms[static_cast<size_t>(j)]);
    }
  }
  SUBCASE("mass preserved, commutative") {
    const CircleDist nu = random_dense_circle_dist(rng, G);
    const CircleDist ab = convolve(mu, nu);
    const CircleDist ba = convolve(nu, mu);
    CHECK(ab.total_mass() == doctest::Approx(1.0).epsilon(1e-13));
    for (int j = 0; j < G; ++j) {
      CHECK(ab.atoms[static_cast<size_t>(j)] ==
            doctest::Approx(ba.atoms[static_cast<size_t>(j)]).epsilon(1e-12));
    }
  }
  SUBCASE("point masses compose as rotations") {
    const CircleDist out = convolve(CircleDist::point_mass(G, 10), CircleDist::point_mass(G, 20));
    const int expect = (10 + 20 - reference_atom(G) + G) % G;
    CHECK(out.atoms[static_cast<size_t>(expect)] == doctest::Approx(1.0));
  }
  SUBCASE("grid mismatch throws") {
    CHECK_THROWS_AS(convolve(mu, random_dense_circle_dist(rng, 32)), std::invalid_argument);
  }
}

TEST_CASE("equidistribution maximizes the min-deviation power") {
  auto rng = make_rng(14);
  const int G = 64;
  const CircleDist eq = CircleDist::equidistribution(G);
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    for (double alpha : {1.0, 2.0}) {
      const double cap = std::pow(min_deviation(eq, m, alpha).value, alpha);
      for (int i = 0; i < 15; ++i) {
        const CircleDist d = random_dense_circle_dist(rng, G);
        CHECK(std::pow(min_deviation(d, m, alpha).value, alpha) <= cap + 1e-10);
      }
    }
  }
}

TEST_CASE("adding independent noise never decreases the min-deviation") {
  auto rng = make_rng(15);
  for (int i = 0; i < 25; ++i) {
    const IntDist mu = random_int_dist(rng, 4, 5);
    const IntDist nu = random_int_dist(rng, 3, 3);
    for (MetricZ m : {MetricZ::Std, MetricZ::Disc}) {
      CHECK(min_deviation(convolve(mu, nu), m, 2.0).value >=
            min_deviation(mu, m, 2.0).value - 1e-12);
    }
  }
  const int G = 64;
  for (int i = 0; i < 10; ++i) {
    const CircleDist mu = random_dense_circle_dist(rng, G);
    const CircleDist nu = random_circle_dist(rng, G, 3);
    CHECK(min_deviation(convolve(mu, nu), MetricT::Cho, 2.0).value >=
          min_deviation(mu, MetricT::Cho, 2.0).value - 1e-12);
  }
}

TEST_CASE("validation catches malformed distributions") {
  IntDist bad = IntDist::from_atoms({{0, 0.7}, {1, 0.7}});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CircleDist neg;
  neg.grid_size = 4;
  neg.atoms = {0.5, 0.6, -0.1, 0.0};
  CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(deviation(IntDist::point_mass(0), MetricZ::Std, 0.5, 0.0),
                  std::invalid_argument);
}

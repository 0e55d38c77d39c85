/**
 * @file dist.hpp
 * @brief Probability distributions on Z and on the circle grid, with
 *        deviation measures, generalized standard deviation, circular
 *        variance, convolution and exact transport distance.
 */

#ifndef UNCERT_DIST_HPP_
#define UNCERT_DIST_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "uncert/metrics.hpp"

namespace uncert {

/// Finitely supported probability distribution on the integers, stored as a
/// dense window [offset, offset + weights.size()).
struct IntDist {
  long long offset = 0;
  std::vector<double> weights;

  static IntDist point_mass(long long n);
  static IntDist from_atoms(const std::vector<std::pair<long long, double>>& atoms);

  long long lo() const { return offset; }
  long long hi() const { return offset + static_cast<long long>(weights.size()) - 1; }
  double at(long long n) const;
  double total_mass() const;
  /// Drops zero weights at the window edges.
  void trim();
  /// Rescales to unit mass.
  void normalize();
  /// Throws unless weights are nonnegative and sum to 1 within 1e-12.
  void validate() const;
};

/// Probability distribution on the circle with atoms on the uniform grid
/// theta_j = -pi + 2*pi*(j + 1/2)/G. The grid avoids the cut point +-pi
/// and the origin; the atom at index G/2 (angle pi/G) is the reference atom
/// used as the zero element for convolution.
struct CircleDist {
  int grid_size = 0;
  std::vector<double> atoms;

  static CircleDist equidistribution(int grid_size);
  static CircleDist point_mass(int grid_size, int index);

  double angle(int index) const;
  double total_mass() const;
  void normalize();
  /// Throws unless atoms are nonnegative and sum to 1 within 1e-12.
  void validate() const;
};

/// Index of the reference atom (nearest to angle 0 from above).
int reference_atom(int grid_size);
/// Angle of the reference atom, pi/G.
double reference_angle(int grid_size);

/// Mean alpha-distance of mu from the point x:
///   (sum_y mu(y) d(y, x)^alpha)^(1/alpha).
double deviation(const IntDist& mu, MetricZ m, double alpha, double x);
double deviation(const CircleDist& mu, MetricT m, double alpha, double x);

struct MinDeviationZ {
  double value;
  long long argmin;
};
struct MinDeviationT {
  double value;
  double argmin;
};

/// Generalized standard deviation: minimum of deviation() over reference
/// points. On Z the reference ranges over the integers; ties are broken by
/// the smallest integer.
MinDeviationZ min_deviation(const IntDist& mu, MetricZ m, double alpha);

/// Variant minimizing over real-valued references (the usual standard
/// deviation when m = Std and alpha = 2).
MinDeviationT min_deviation_real(const IntDist& mu, MetricZ m, double alpha);

/// Minimum over the atom grid refined by local golden-section search;
/// ties broken by the smallest representative in (-pi, pi].
MinDeviationT min_deviation(const CircleDist& mu, MetricT m, double alpha);

/// Von Mises circular variance 2(1 - |<e^{i theta}>|); equals the squared
/// chordal min-deviation at alpha = 2.
double circular_variance(const CircleDist& mu);

/// Convolution of finitely supported distributions on Z.
IntDist convolve(const IntDist& mu, const IntDist& nu);

/// Cyclic convolution on the circle grid. Atoms are composed as rotations
/// relative to the reference atom, so the reference point mass is the exact
/// identity: convolve(point_mass(G, G/2), mu) == mu. Requires matching even
/// grids.
CircleDist convolve(const CircleDist& mu, const CircleDist& nu);

/// Joint coupling over support(mu) x support(nu), row sums mu, column sums nu.
struct Coupling {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> mass;              // row-major, rows*cols entries
  std::vector<double> row_points;        // outcome labels (integers or angles)
  std::vector<double> col_points;

  double at(std::size_t i, std::size_t j) const { return mass[i * cols + j]; }
};

struct TransportResult {
  double distance;
  Coupling plan;
};

/// Exact transport (Wasserstein-type) distance
///   inf_gamma (sum gamma(x,y) d(x,y)^alpha)^(1/alpha)
/// over couplings of mu and nu, solved as an exact linear program on the
/// dense coupling formulation. Supports up to 400 atoms in total.
TransportResult transport_distance(const IntDist& mu, const IntDist& nu, MetricZ m, double alpha);
TransportResult transport_distance(const CircleDist& mu, const CircleDist& nu, MetricT m,
                                   double alpha);

}  // namespace uncert

#endif  // UNCERT_DIST_HPP_

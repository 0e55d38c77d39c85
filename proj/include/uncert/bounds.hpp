/**
 * @file bounds.hpp
 * @brief Certified analytic lower bounds: the variational ground-energy
 *        lemma for positive trial functions and the named bound curves.
 */

#ifndef UNCERT_BOUNDS_HPP_
#define UNCERT_BOUNDS_HPP_

#include <functional>
#include <string>
#include <utility>

namespace uncert {

/// Log-profile f of a positive trial function phi = exp(f), with analytic
/// first and second derivatives. phi must be 2*pi-periodic.
struct TrialFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> ddf;

  /// Throws unless f and f' are periodic across +-pi (numerical check).
  void validate() const;
};

/// Certified lower bound on the ground energy of -psi'' + V:
///   min_theta { V(theta) - f''(theta) - f'(theta)^2 },
/// minimized on a dense grid with golden-section refinement around the
/// lowest grid values.
double lemma_energy_bound(const std::function<double(double)>& V, const TrialFunction& trial,
                          int grid_size = 1 << 14);

/// y = (1 - 3x/pi^2)^2 / (4x) on (0, pi^2/3]: the optimal-constant arc bound
/// in variance form.
double judge_arc(double x);

/// y = (2 - x)^2 / (16 x) on (0, 2]: the chord version of the same bound.
double judge_cho(double x);

/// y = (1 - x/2)^2 / (4 x (1 - x/4)) on (0, 2): the squared product bound
/// from the sine/cosine commutator pair.
double cn_bound(double x);

/// Coefficient g(a) = a (8a^2 + 5a + 2) / (8a + 4) of the second-order chord
/// bound y + g(a) x >= a, and its derivative.
double second_order_g(double a);
double second_order_g_prime(double a);

/// Parametric point (x, y) = (1/g'(a), a - g(a)/g'(a)) of the second-order
/// chord bound curve; each point satisfies y + g(a) x = a.
std::pair<double, double> second_order_cho(double a);

/// y on the second-order chord bound curve at abscissa x in (0, 2),
/// inverting the strictly monotone map a -> 1/g'(a).
double second_order_cho_at(double x);

enum class BoundKind { JudgeArc, JudgeCho, CN, SecondOrderCho };

std::string to_string(BoundKind k);

}  // namespace uncert

#endif  // UNCERT_BOUNDS_HPP_

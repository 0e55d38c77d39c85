/**
 * @file special.hpp
 * @brief Independent special-function oracles for the standard number
 *        metric: the confluent hypergeometric boundary-value solution for
 *        the arc potential and the Mathieu characteristic value for the
 *        chord potential.
 */

#ifndef UNCERT_SPECIAL_HPP_
#define UNCERT_SPECIAL_HPP_

namespace uncert {

/// Confluent hypergeometric series 1F1(a; b; z) = sum (a)_k z^k / ((b)_k k!)
/// with compensated summation; validated for |z| <= 200.
double hyp1f1(double a, double b, double z);

/// Residual of the even-solution boundary condition at theta = pi:
///   (1 - lambda/sqrt(t)) 1F1(1 + (1 - lambda/sqrt(t))/4; 3/2; pi^2 sqrt(t))
///   - 1F1((1 - lambda/sqrt(t))/4; 1/2; pi^2 sqrt(t)).
/// Vanishes exactly at the eigenvalues of -psi'' + t theta^2.
double arc_boundary_residual(double t, double lambda);

/// Smallest root of the boundary condition, bisected inside an explicit
/// bracket. Throws when the residual does not change sign over the bracket.
double arc_ground_energy(double t, double bracket_lo, double bracket_hi);

/// Convenience overload: brackets the root around the truncated-basis
/// estimate (ground energy +- half the spectral gap). Valid for
/// t in [1e-3, 50], the validated series regime.
double arc_ground_energy(double t);

/// Lowest characteristic value a_0(q) of the even period-pi Mathieu problem,
/// from the three-term Fourier recurrence as the lowest eigenvalue of its
/// truncated tridiagonal system, with its own scalar-recurrence eigenvalue
/// count and its own truncation certificate. Validated for |q| <= 400; the
/// lowest branch is even in q.
double mathieu_a0(double q);

}  // namespace uncert

#endif  // UNCERT_SPECIAL_HPP_

/**
 * @file spectral.hpp
 * @brief Truncated Hamiltonians H(t) = d_Z(N)^beta + t d_T(Theta)^alpha in the
 *        number basis and their two lowest eigenpairs with truncation
 *        diagnostics.
 */

#ifndef UNCERT_SPECTRAL_HPP_
#define UNCERT_SPECTRAL_HPP_

#include <vector>

#include "uncert/metrics.hpp"

namespace uncert {

/// Real symmetric matrix indexed by m, n in [-n_max, n_max] with entries
///   H_{mn} = d_Z(n,0)^beta [m=n] + t v_{|m-n|},
/// stored as the diagonal metric part plus the Toeplitz potential
/// coefficients.
struct TruncatedHamiltonian {
  int n_max = 0;
  double t = 0.0;
  MetricSpec spec;
  std::vector<double> diag;  // d_Z(n,0)^beta, index n + n_max
  std::vector<double> v;     // v_0 .. v_{2 n_max}
  bool tridiag = false;      // v_k == 0 for all k >= 2

  int dim() const { return 2 * n_max + 1; }
  double entry(int row, int col) const;
};

/// Two lowest eigenpairs; psi_hat holds the Fourier coefficients of the
/// ground state with the sign fixed by a positive coefficient sum, and tail
/// is max |psi_hat_n| over |n| >= n_max - 2.
struct SpectralResult {
  double E0 = 0.0;
  double E1 = 0.0;
  std::vector<double> psi_hat;  // index n + n_max
  double tail = 0.0;
  int n_max = 0;
  double t = 0.0;
  MetricSpec spec;

  double coeff(int n) const { return psi_hat[static_cast<size_t>(n + n_max)]; }
};

TruncatedHamiltonian build_hamiltonian(const MetricSpec& spec, double t, int n_max);

/// Computes the two lowest eigenpairs to residual ||H psi - E psi|| <= tol
/// (relative to the matrix scale). Throws SolverFailure on non-convergence,
/// on a spectral gap below 1e-10, or if the ground state fails the
/// position-space positivity check.
SpectralResult ground_and_first(const TruncatedHamiltonian& h, double tol = 1e-10);

/// True iff the tail diagnostic is at or below tail_tol.
bool truncation_adequate(const SpectralResult& r, double tail_tol = 1e-8);

/// Lower bound (E1 - E_phi)/(E1 - E0) on |<phi|psi>|^2 for any state phi with
/// energy E_phi in [E0, E1).
double fidelity_floor(double E0, double E1, double E_phi);

struct SolveOptions {
  int n_max_start = 80;
  int cap_dense = 1280;        // dense Toeplitz problems
  int cap_tridiagonal = 65536; // tridiagonal problems solve in O(n)
  double tail_tol = 1e-8;
  double residual_tol = 1e-10;
};

/// Solves with automatic doubling of n_max until truncation_adequate holds.
/// Throws TruncationCapExceeded when the structure-dependent cap is reached.
SpectralResult ground_state_adequate(const MetricSpec& spec, double t,
                                     const SolveOptions& opts = {});

}  // namespace uncert

#endif  // UNCERT_SPECTRAL_HPP_

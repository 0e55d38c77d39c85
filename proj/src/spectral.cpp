#include "uncert/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;

// Adequacy default for the coefficient-tail diagnostic. The energy error is
// quadratic in the tail amplitude, so 1e-8 tails keep E0 doubling-invariant
// to 1e-10 while n_max = 80 stays adequate across the whole t-range of the
// standard-metric family.
constexpr double kDefaultTailTol = 1e-8;

double matrix_scale(const TruncatedHamiltonian& h) {
  double dmax = 0.0;
  for (double d : h.diag) dmax = std::max(dmax, std::abs(d));
  double vsum = std::abs(h.v[0]);
  for (size_t k = 1; k < h.v.size(); ++k) vsum += 2.0 * std::abs(h.v[k]);
  return dmax + h.t * vsum;
}

void fix_sign(std::vector<double>& psi) {
  double s = 0.0;
  for (double c : psi) s += c;
  if (s < 0.0) {
    for (double& c : psi) c = -c;
  }
}

double tail_diagnostic(const std::vector<double>& psi, int n_max) {
  double tail = 0.0;
  const int dim = 2 * n_max + 1;
  for (int k = 0; k < 3; ++k) {
    tail = std::max(tail, std::abs(psi[static_cast<size_t>(k)]));
    tail = std::max(tail, std::abs(psi[static_cast<size_t>(dim - 1 - k)]));
  }
  return tail;
}

// Position-space positivity of the ground state on a uniform grid, the
// cosine evaluated by the Chebyshev recurrence. Values below the
// floating-point noise floor of the coefficient sum cannot be
// sign-certified, hence the small negative allowance.
void check_positivity(const std::vector<double>& psi, int n_max, int grid) {
  double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
  for (int g = 0; g < grid; ++g) {
    const double theta = -kPi + 2.0 * kPi * (g + 0.5) / grid;
    const double c1 = std::cos(theta);
    double val = psi[static_cast<size_t>(n_max)];
    double ck_prev = 1.0, ck = c1;
    for (int n = 1; n <= n_max; ++n) {
      val += (psi[static_cast<size_t>(n_max + n)] + psi[static_cast<size_t>(n_max - n)]) * ck;
      const double next = 2.0 * c1 * ck - ck_prev;
      ck_prev = ck;
      ck = next;
    }
    vmax = std::max(vmax, std::abs(val));
    vmin = std::min(vmin, val);
  }
  const double allowance = (1e-12 + 2e-16 * n_max) * vmax;  // includes recurrence drift
  if (vmin <= -allowance) {
    throw SolverFailure("ground state not positive in position representation");
  }
}

void solve_dense(const TruncatedHamiltonian& h, double tol, SpectralResult& out) {
  const int dim = h.dim();
  Eigen::MatrixXd H(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) H(r, c) = h.entry(r, c);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success) throw SolverFailure("dense eigensolver failed");
  out.E0 = es.eigenvalues()(0);
  out.E1 = es.eigenvalues()(1);
  Eigen::VectorXd psi = es.eigenvectors().col(0);
  const double residual = (H * psi - out.E0 * psi).norm();
  if (residual > tol * std::max(1.0, matrix_scale(h))) {
    throw SolverFailure("dense eigensolver residual above tolerance");
  }
  out.psi_hat.assign(psi.data(), psi.data() + dim);
}

// --- tridiagonal path -------------------------------------------------------

// Number of eigenvalues of the symmetric tridiagonal (alpha, beta) strictly
// below x, by the LDL^T sign count.
int sturm_count(const std::vector<double>& alpha, const std::vector<double>& beta, double x) {
  int count = 0;
  double d = alpha[0] - x;
  if (d < 0.0) ++count;
  for (size_t i = 1; i < alpha.size(); ++i) {
    double denom = d;
    if (denom == 0.0) denom = 1e-300;
    d = (alpha[i] - x) - beta[i - 1] * beta[i - 1] / denom;
    if (d < 0.0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (k = 0, 1, ...) by Sturm bisection.
double sturm_eigenvalue(const std::vector<double>& alpha, const std::vector<double>& beta, int k) {
  double lo = alpha[0], hi = alpha[0];
  for (size_t i = 0; i < alpha.size(); ++i) {
    const double bl = i > 0 ? std::abs(beta[i - 1]) : 0.0;
    const double br = i < beta.size() ? std::abs(beta[i]) : 0.0;
    lo = std::min(lo, alpha[i] - bl - br);
    hi = std::max(hi, alpha[i] + bl + br);
  }
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  for (int it = 0; it < 200 && hi - lo > 1e-15 * scale; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(alpha, beta, mid) >= k + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Solves (T - sigma I) x = rhs with partial pivoting; T tridiagonal.
std::vector<double> shifted_tridiag_solve(const std::vector<double>& alpha,
                                          const std::vector<double>& beta, double sigma,
                                          std::vector<double> rhs) {
  const size_t n = alpha.size();
  std::vector<double> dl(n, 0.0), dm(n, 0.0), du(n, 0.0), du2(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    dm[i] = alpha[i] - sigma;
    if (i + 1 < n) {
      dl[i] = beta[i];  // subdiagonal entry (i+1, i)
      du[i] = beta[i];  // superdiagonal entry (i, i+1)
    }
  }
  // band LU with row swaps; du2 holds fill-in two above the diagonal
  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(dl[i]) > std::abs(dm[i])) {
      std::swap(dm[i], dl[i]);
      std::swap(du[i], dm[i + 1]);
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = 0.0;
      }
      std::swap(rhs[i], rhs[i + 1]);
    }
    double piv = dm[i];
    if (piv == 0.0) piv = 1e-300;
    const double f = dl[i] / piv;
    dm[i + 1] -= f * du[i];
    if (i + 2 < n) du[i + 1] -= f * du2[i];
    rhs[i + 1] -= f * rhs[i];
  }
  std::vector<double> x(n, 0.0);
  for (size_t ii = n; ii-- > 0;) {
    double s = rhs[ii];
    if (ii + 1 < n) s -= du[ii] * x[ii + 1];
    if (ii + 2 < n) s -= du2[ii] * x[ii + 2];
    double piv = dm[ii];
    if (piv == 0.0) piv = 1e-300;
    x[ii] = s / piv;
  }
  return x;
}

void solve_tridiagonal(const TruncatedHamiltonian& h, double tol, SpectralResult& out) {
  const int dim = h.dim();
  std::vector<double> alpha(static_cast<size_t>(dim));
  std::vector<double> beta(static_cast<size_t>(dim) - 1, h.t * h.v[1]);
  for (int i = 0; i < dim; ++i) {
    alpha[static_cast<size_t>(i)] = h.diag[static_cast<size_t>(i)] + h.t * h.v[0];
  }
  const double e0 = sturm_eigenvalue(alpha, beta, 0);
  const double e1 = sturm_eigenvalue(alpha, beta, 1);

  // inverse iteration for the ground vector
  std::vector<double> x(static_cast<size_t>(dim), 1.0 / std::sqrt(static_cast<double>(dim)));
  for (int pass = 0; pass < 4; ++pass) {
    x = shifted_tridiag_solve(alpha, beta, e0, std::move(x));
    double norm = 0.0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw SolverFailure("tridiagonal inverse iteration broke down");
    }
    for (double& c : x) c /= norm;
  }
  // Rayleigh quotient sharpens the bisected eigenvalue
  double rq = 0.0;
  for (int i = 0; i < dim; ++i) {
    double hx = alpha[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    if (i > 0) hx += beta[static_cast<size_t>(i - 1)] * x[static_cast<size_t>(i - 1)];
    if (i + 1 < dim) hx += beta[static_cast<size_t>(i)] * x[static_cast<size_t>(i + 1)];
    rq += x[static_cast<size_t>(i)] * hx;
  }
  double res = 0.0;
  for (int i = 0; i < dim; ++i) {
    double hx = alpha[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    if (i > 0) hx += beta[static_cast<size_t>(i - 1)] * x[static_cast<size_t>(i - 1)];
    if (i + 1 < dim) hx += beta[static_cast<size_t>(i)] * x[static_cast<size_t>(i + 1)];
    const double r = hx - rq * x[static_cast<size_t>(i)];
    res += r * r;
  }
  if (std::sqrt(res) > tol * std::max(1.0, matrix_scale(h))) {
    throw SolverFailure("tridiagonal eigensolver residual above tolerance");
  }
  out.E0 = rq;
  out.E1 = e1;
  out.psi_hat = std::move(x);
}

}  // namespace

double TruncatedHamiltonian::entry(int row, int col) const {
  const int k = row >= col ? row - col : col - row;
  double val = t * v[static_cast<size_t>(k)];
  if (row == col) val += diag[static_cast<size_t>(row)];
  return val;
}

TruncatedHamiltonian build_hamiltonian(const MetricSpec& spec, double t, int n_max) {
  if (!(t > 0.0)) throw std::invalid_argument("build_hamiltonian: t > 0 required");
  if (n_max < 8) throw std::invalid_argument("build_hamiltonian: n_max >= 8 required");
  TruncatedHamiltonian h;
  h.n_max = n_max;
  h.t = t;
  h.spec = spec;
  h.diag.resize(static_cast<size_t>(h.dim()));
  for (int n = -n_max; n <= n_max; ++n) {
    const double d = metric_z_eval(spec.metric_z, n, 0);
    h.diag[static_cast<size_t>(n + n_max)] =
        spec.beta == 2.0 ? d * d : (spec.beta == 1.0 ? d : std::pow(d, spec.beta));
  }
  h.v = potential_fourier_coeffs(spec.metric_t, spec.alpha, 2 * n_max);
  h.tridiag = true;
  for (size_t k = 2; k < h.v.size(); ++k) {
    if (h.v[k] != 0.0) {
      h.tridiag = false;
      break;
    }
  }
  return h;
}

SpectralResult ground_and_first(const TruncatedHamiltonian& h, double tol) {
  SpectralResult out;
  out.n_max = h.n_max;
  out.t = h.t;
  out.spec = h.spec;
  if (h.tridiag) {
    solve_tridiagonal(h, tol, out);
  } else {
    solve_dense(h, tol, out);
  }
  if (out.E1 - out.E0 < 1e-10) {
    throw SolverFailure("spectral gap below 1e-10 (near-degeneracy)");
  }
  fix_sign(out.psi_hat);
  out.tail = tail_diagnostic(out.psi_hat, h.n_max);
  // A heavily truncated expansion rings negative near the cut point, which
  // says nothing about the solver; certify positivity only for states whose
  // tails claim convergence.
  if (out.tail <= 1e-5) {
    check_positivity(out.psi_hat, h.n_max, h.n_max > 2000 ? 128 : 512);
  }
  return out;
}

bool truncation_adequate(const SpectralResult& r, double tail_tol) {
  return r.tail <= tail_tol;
}

double fidelity_floor(double E0, double E1, double E_phi) {
  if (!(E1 > E0)) throw std::invalid_argument("fidelity_floor: E1 > E0 required");
  if (!(E_phi >= E0) || !(E_phi < E1)) {
    throw std::invalid_argument("fidelity_floor: E_phi must lie in [E0, E1)");
  }
  return (E1 - E_phi) / (E1 - E0);
}

SpectralResult ground_state_adequate(const MetricSpec& spec, double t, const SolveOptions& opts) {
  int n_max = opts.n_max_start;
  while (true) {
    const TruncatedHamiltonian h = build_hamiltonian(spec, t, n_max);
    const int cap = h.tridiag ? opts.cap_tridiagonal : opts.cap_dense;
    if (n_max > cap) {
      throw TruncationCapExceeded("ground_state_adequate: escalation cap exceeded");
    }
    SpectralResult r = ground_and_first(h, opts.residual_tol);
    if (truncation_adequate(r, opts.tail_tol)) return r;
    if (n_max >= cap) {
      throw TruncationCapExceeded("ground_state_adequate: escalation cap exceeded");
    }
    n_max = std::min(2 * n_max, cap);
  }
}

}  // namespace uncert

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "uncert/dist.hpp"
#include "uncert/errors.hpp"

namespace uncert {

namespace {

constexpr size_t kSupportCap = 400;

// Exact minimum-cost transportation plan between positive masses a (rows)
// and b (columns) with dense costs, by the simplex method on the coupling
// polytope: the basis is a spanning tree of basic cells, entered by the most
// negative reduced cost with a Bland fallback against degenerate cycling.
class TransportationSimplex {
 public:
  TransportationSimplex(std::vector<double> a, std::vector<double> b, std::vector<double> cost)
      : m_(a.size()), n_(b.size()), a_(std::move(a)), b_(std::move(b)), c_(std::move(cost)) {
    x_.assign(m_ * n_, 0.0);
    basic_.assign(m_ * n_, false);
    double cmax = 0.0;
    for (double v : c_) cmax = std::max(cmax, std::abs(v));
    rc_tol_ = 1e-11 * std::max(1.0, cmax);
  }

  void solve() {
    northwest_corner();
    const size_t bland_after = 40 * (m_ + n_);
    const size_t hard_cap = 4000 * (m_ + n_) + 10000;
    for (size_t iter = 0; iter < hard_cap; ++iter) {
      compute_potentials();
      size_t ei = 0, ej = 0;
      if (!find_entering(iter >= bland_after, ei, ej)) return;
      pivot(ei, ej);
    }
    throw SolverFailure("transport: simplex iteration cap exceeded");
  }

  double objective() const {
    double s = 0.0;
    for (size_t k = 0; k < x_.size(); ++k) s += x_[k] * c_[k];
    return std::max(s, 0.0);
  }

  const std::vector<double>& plan() const { return x_; }

 private:
  size_t idx(size_t i, size_t j) const { return i * n_ + j; }

  void northwest_corner() {
    std::vector<double> ar = a_, br = b_;
    size_t i = 0, j = 0;
    while (true) {
      const double q = std::max(0.0, std::min(ar[i], br[j]));
      x_[idx(i, j)] = q;
      basic_[idx(i, j)] = true;
      ar[i] -= q;
      br[j] -= q;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (ar[i] <= br[j] && i < m_ - 1) {
        ++i;
      } else if (j < n_ - 1) {
        ++j;
      } else {
        ++i;
      }
    }
  }

  void compute_potentials() {
    u_.assign(m_, 0.0);
    v_.assign(n_, 0.0);
    std::vector<char> row_done(m_, 0), col_done(n_, 0);
    std::queue<size_t> work;  // rows are 0..m-1, columns m..m+n-1
    row_done[0] = 1;
    work.push(0);
    while (!work.empty()) {
      const size_t node = work.front();
      work.pop();
      if (node < m_) {
        const size_t i = node;
        for (size_t j = 0; j < n_; ++j) {
          if (basic_[idx(i, j)] && !col_done[j]) {
            v_[j] = c_[idx(i, j)] - u_[i];
            col_done[j] = 1;
            work.push(m_ + j);
          }
        }
      } else {
        const size_t j = node - m_;
        for (size_t i = 0; i < m_; ++i) {
          if (basic_[idx(i, j)] && !row_done[i]) {
            u_[i] = c_[idx(i, j)] - v_[j];
            row_done[i] = 1;
            work.push(i);
          }
        }
      }
    }
    for (size_t i = 0; i < m_; ++i) {
      if (!row_done[i]) throw SolverFailure("transport: basis tree disconnected");
    }
    for (size_t j = 0; j < n_; ++j) {
      if (!col_done[j]) throw SolverFailure("transport: basis tree disconnected");
    }
  }

  bool find_entering(bool bland, size_t& ei, size_t& ej) const {
    double best = -rc_tol_;
    bool found = false;
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < n_; ++j) {
        if (basic_[idx(i, j)]) continue;
        const double rc = c_[idx(i, j)] - u_[i] - v_[j];
        if (rc < best) {
          best = rc;
          ei = i;
          ej = j;
          found = true;
          if (bland) return true;
        }
      }
    }
    return found;
  }

  // Tree path from row ei to column ej through basic cells.
  std::vector<size_t> tree_path(size_t ei, size_t ej) const {
    const size_t nodes = m_ + n_;
    std::vector<size_t> parent(nodes, nodes);
    std::vector<char> seen(nodes, 0);
    std::queue<size_t> work;
    seen[ei] = 1;
    work.push(ei);
    while (!work.empty() && !seen[m_ + ej]) {
      const size_t node = work.front();
      work.pop();
      if (node < m_) {
        const size_t i = node;
        for (size_t j = 0; j < n_; ++j) {
          if (basic_[idx(i, j)] && !seen[m_ + j]) {
            seen[m_ + j] = 1;
            parent[m_ + j] = node;
            work.push(m_ + j);
          }
        }
      } else {
        const size_t j = node - m_;
        for (size_t i = 0; i < m_; ++i) {
          if (basic_[idx(i, j)] && !seen[i]) {
            seen[i] = 1;
            parent[i] = node;
            work.push(i);
          }
        }
      }
    }
    if (!seen[m_ + ej]) throw SolverFailure("transport: no cycle for entering cell");
    std::vector<size_t> path;  // node sequence ej-side back to ei
    for (size_t node = m_ + ej; node != nodes; node = parent[node]) {
      path.push_back(node);
      if (node == ei) break;
    }
    std::reverse(path.begin(), path.end());  // starts at ei, ends at m_+ej
    return path;
  }

  void pivot(size_t ei, size_t ej) {
    const auto path = tree_path(ei, ej);
    // Cells along the cycle alternate -,+,... starting with the first tree
    // edge out of row ei; the entering cell (ei, ej) takes +.
    std::vector<std::pair<size_t, int>> cycle;  // (cell index, sign)
    int sign = -1;
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      const size_t row = std::min(path[k], path[k + 1]);
      const size_t col = std::max(path[k], path[k + 1]) - m_;
      cycle.emplace_back(idx(row, col), sign);
      sign = -sign;
    }
    double theta = std::numeric_limits<double>::infinity();
    size_t leaving = x_.size();
    for (const auto& [cell, s] : cycle) {
      if (s < 0 && (x_[cell] < theta || (x_[cell] == theta && cell < leaving))) {
        theta = x_[cell];
        leaving = cell;
      }
    }
    if (leaving == x_.size()) throw SolverFailure("transport: unbounded pivot");
    for (const auto& [cell, s] : cycle) {
      x_[cell] = std::max(0.0, x_[cell] + s * theta);
    }
    x_[idx(ei, ej)] += theta;
    basic_[idx(ei, ej)] = true;
    basic_[leaving] = false;
    x_[leaving] = 0.0;
  }

  size_t m_, n_;
  std::vector<double> a_, b_, c_;
  std::vector<double> x_, u_, v_;
  std::vector<char> basic_;
  double rc_tol_ = 1e-11;
};

struct Support {
  std::vector<double> mass;
  std::vector<double> points;
};

TransportResult solve_general(const Support& mu, const Support& nu,
                              const std::vector<double>& cost, double alpha) {
  TransportResult res;
  res.plan.rows = mu.mass.size();
  res.plan.cols = nu.mass.size();
  res.plan.row_points = mu.points;
  res.plan.col_points = nu.points;

  if (nu.mass.size() == 1 || mu.mass.size() == 1) {
    // A point marginal admits a single coupling: the product.
    res.plan.mass.assign(mu.mass.size() * nu.mass.size(), 0.0);
    double obj = 0.0;
    for (size_t i = 0; i < mu.mass.size(); ++i) {
      for (size_t j = 0; j < nu.mass.size(); ++j) {
        const double w = mu.mass[i] * nu.mass[j];
        res.plan.mass[i * nu.mass.size() + j] = w;
        obj += w * cost[i * nu.mass.size() + j];
      }
    }
    res.distance = std::pow(obj, 1.0 / alpha);
    return res;
  }

  TransportationSimplex lp(mu.mass, nu.mass, cost);
  lp.solve();
  res.plan.mass = lp.plan();
  res.distance = std::pow(lp.objective(), 1.0 / alpha);
  return res;
}

void check_feasible(double ma, double mb) {
  if (std::abs(ma - mb) > 1e-12 || ma <= 0.0) {
    throw TransportInfeasible("transport: marginal masses do not match");
  }
}

}  // namespace

TransportResult transport_distance(const IntDist& mu, const IntDist& nu, MetricZ m, double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("transport: alpha >= 1 required");
  Support smu, snu;
  for (long long n = mu.lo(); n <= mu.hi(); ++n) {
    if (mu.at(n) > 0.0) {
      smu.mass.push_back(mu.at(n));
      smu.points.push_back(static_cast<double>(n));
    }
  }
  for (long long n = nu.lo(); n <= nu.hi(); ++n) {
    if (nu.at(n) > 0.0) {
      snu.mass.push_back(nu.at(n));
      snu.points.push_back(static_cast<double>(n));
    }
  }
  if (smu.mass.empty() || snu.mass.empty()) throw TransportInfeasible("transport: empty support");
  if (smu.mass.size() + snu.mass.size() > kSupportCap) {
    throw std::invalid_argument("transport: total support exceeds 400 atoms");
  }
  check_feasible(mu.total_mass(), nu.total_mass());

  std::vector<double> cost(smu.mass.size() * snu.mass.size());
  for (size_t i = 0; i < smu.mass.size(); ++i) {
    for (size_t j = 0; j < snu.mass.size(); ++j) {
      const long long ni = static_cast<long long>(smu.points[i]);
      const long long nj = static_cast<long long>(snu.points[j]);
      cost[i * snu.mass.size() + j] = std::pow(metric_z_eval(m, ni, nj), alpha);
    }
  }
  return solve_general(smu, snu, cost, alpha);
}

TransportResult transport_distance(const CircleDist& mu, const CircleDist& nu, MetricT m,
                                   double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("transport: alpha >= 1 required");
  if (mu.grid_size != nu.grid_size) {
    throw std::invalid_argument("transport: circle grids do not match");
  }
  Support smu, snu;
  for (int j = 0; j < mu.grid_size; ++j) {
    if (mu.atoms[static_cast<size_t>(j)] > 0.0) {
      smu.mass.push_back(mu.atoms[static_cast<size_t>(j)]);
      smu.points.push_back(mu.angle(j));
    }
  }
  for (int j = 0; j < nu.grid_size; ++j) {
    if (nu.atoms[static_cast<size_t>(j)] > 0.0) {
      snu.mass.push_back(nu.atoms[static_cast<size_t>(j)]);
      snu.points.push_back(nu.angle(j));
    }
  }
  if (smu.mass.empty() || snu.mass.empty()) throw TransportInfeasible("transport: empty support");
  if (smu.mass.size() + snu.mass.size() > kSupportCap) {
    throw std::invalid_argument("transport: total support exceeds 400 atoms");
  }
  check_feasible(mu.total_mass(), nu.total_mass());

  std::vector<double> cost(smu.mass.size() * snu.mass.size());
  for (size_t i = 0; i < smu.mass.size(); ++i) {
    for (size_t j = 0; j < snu.mass.size(); ++j) {
      cost[i * snu.mass.size() + j] = std::pow(metric_t_eval(m, smu.points[i], snu.points[j]), alpha);
    }
  }
  return solve_general(smu, snu, cost, alpha);
}

}  // namespace uncert

#include "uncert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;

template <typename F>
double golden_min_value(const F& f, double a, double b, int iters = 100) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-14; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

void TrialFunction::validate() const {
  if (!f || !df || !ddf) throw std::invalid_argument("TrialFunction: missing callables");
  const double sf = 1.0 + std::abs(f(kPi)) + std::abs(f(-kPi));
  if (std::abs(f(kPi) - f(-kPi)) > 1e-9 * sf) {
    throw std::invalid_argument("TrialFunction: f not periodic across +-pi");
  }
  const double sd = 1.0 + std::abs(df(kPi)) + std::abs(df(-kPi));
  if (std::abs(df(kPi) - df(-kPi)) > 1e-9 * sd) {
    throw std::invalid_argument("TrialFunction: f' not periodic across +-pi");
  }
}

double lemma_energy_bound(const std::function<double(double)>& V, const TrialFunction& trial,
                          int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("lemma_energy_bound: grid too small");
  trial.validate();
  auto W = [&](double th) {
    const double d = trial.df(th);
    return V(th) - trial.ddf(th) - d * d;
  };

  // The quality of W is highly non-uniform in theta, so scan a dense grid
  // (endpoints included; 0 and pi are frequent minima) and refine locally
  // around the three lowest values.
  const int n = grid_size;
  std::vector<double> val(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    val[static_cast<size_t>(i)] = W(-kPi + 2.0 * kPi * i / n);
  }
  std::vector<int> order(val.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::partial_sort(order.begin(), order.begin() + 3, order.end(),
                    [&](int a, int b) { return val[static_cast<size_t>(a)] < val[static_cast<size_t>(b)]; });

  double best = val[static_cast<size_t>(order[0])];
  const double h = 2.0 * kPi / n;
  for (int r = 0; r < 3; ++r) {
    const double th = -kPi + 2.0 * kPi * order[static_cast<size_t>(r)] / n;
    best = std::min(best, golden_min_value(W, th - h, th + h));
  }
  return best;
}

double judge_arc(double x) {
  if (!(x > 0.0) || !(x <= kPi * kPi / 3.0)) {
    throw std::invalid_argument("judge_arc: x must lie in (0, pi^2/3]");
  }
  const double r = 1.0 - 3.0 * x / (kPi * kPi);
  return r * r / (4.0 * x);
}

double judge_cho(double x) {
  if (!(x > 0.0) || !(x <= 2.0)) {
    throw std::invalid_argument("judge_cho: x must lie in (0, 2]");
  }
  const double r = 2.0 - x;
  return r * r / (16.0 * x);
}

double cn_bound(double x) {
  if (!(x > 0.0) || !(x < 2.0)) {
    throw std::invalid_argument("cn_bound: x must lie in (0, 2)");
  }
  const double r = 1.0 - 0.5 * x;
  return r * r / (4.0 * x * (1.0 - 0.25 * x));
}

double second_order_g(double a) {
  return a * (8.0 * a * a + 5.0 * a + 2.0) / (8.0 * a + 4.0);
}

double second_order_g_prime(double a) {
  const double num = 16.0 * a * a * a + 17.0 * a * a + 5.0 * a + 1.0;
  const double den = 2.0 * a + 1.0;
  return num / (2.0 * den * den);
}

std::pair<double, double> second_order_cho(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("second_order_cho: a > 0 required");
  const double gp = second_order_g_prime(a);
  if (!(gp > 0.0)) throw std::runtime_error("second_order_cho: g'(a) <= 0, outside usable branch");
  return {1.0 / gp, a - second_order_g(a) / gp};
}

double second_order_cho_at(double x) {
  if (!(x > 0.0) || !(x < 2.0)) {
    throw std::invalid_argument("second_order_cho_at: x must lie in (0, 2)");
  }
  // 1/g'(a) decreases from 2 to 0 as a grows
  double lo = 1e-12, hi = 1.0;
  while (1.0 / second_order_g_prime(hi) > x) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (1.0 / second_order_g_prime(mid) > x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return second_order_cho(0.5 * (lo + hi)).second;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::JudgeArc:
      return "judge-arc";
    case BoundKind::JudgeCho:
      return "judge-cho";
    case BoundKind::CN:
      return "cn";
    case BoundKind::SecondOrderCho:
      return "second-order-cho";
  }
  throw std::logic_error("unreachable");
}

}  // namespace uncert

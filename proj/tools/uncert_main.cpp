// Command-line surface: tradeoff curves, bound curves, verification suites
// and transport distances, with CSV/JSON outputs and a run manifest.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "uncert/bounds.hpp"
#include "uncert/closedform.hpp"
#include "uncert/covariant.hpp"
#include "uncert/dist.hpp"
#include "uncert/errors.hpp"
#include "uncert/io.hpp"
#include "uncert/metrics.hpp"
#include "uncert/special.hpp"
#include "uncert/spectral.hpp"
#include "uncert/tradeoff.hpp"
#include "uncert/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace uncert;

namespace {

constexpr double kPi = std::numbers::pi;

struct CliUsageError : std::runtime_error {
  explicit CliUsageError(const std::string& what) : std::runtime_error(what) {}
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SolveOptions make_solve_options(int nmax_start) {
  SolveOptions o;
  o.n_max_start = nmax_start;
  if (const char* cap = std::getenv("UNCERT_NMAX_CAP")) {
    try {
      const int c = std::stoi(cap);
      if (c < 8) throw std::invalid_argument("cap");
      o.cap_dense = c;
      o.cap_tridiagonal = c;
    } catch (const std::exception&) {
      throw CliUsageError("UNCERT_NMAX_CAP must be an integer >= 8");
    }
  }
  return o;
}

json options_json(const SolveOptions& o) {
  return {{"n_max_start", o.n_max_start},
          {"cap_dense", o.cap_dense},
          {"cap_tridiagonal", o.cap_tridiagonal},
          {"tail_tol", o.tail_tol},
          {"residual_tol", o.residual_tol}};
}

void prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliUsageError("cannot create output directory " + dir);
}

// ---------------------------------------------------------------------------
// curve

int run_curve(const std::string& mz, const std::string& mt, double alpha, double beta,
              double tmin, double tmax, int points, int nmax, const std::string& out_dir) {
  const auto start = Clock::now();
  MetricSpec spec;
  spec.metric_z = metric_z_from_string(mz);
  spec.metric_t = metric_t_from_string(mt);
  spec.alpha = alpha;
  spec.beta = beta;
  if (!(alpha >= 1.0) || !(beta >= 1.0)) throw CliUsageError("exponents must be >= 1");
  if (!(tmin > 0.0) || !(tmax >= tmin) || points < 1) {
    throw CliUsageError("need 0 < tmin <= tmax and points >= 1");
  }
  prepare_out_dir(out_dir);

  SweepOptions opts;
  opts.solve = make_solve_options(nmax);
  const TradeoffCurve curve = sweep(spec, log_spaced(tmin, tmax, points), opts);

  int max_used = 0;
  for (const CurvePoint& p : curve.points) max_used = std::max(max_used, p.n_max);

  json manifest = {{"command", "curve"},
                   {"spec", to_json(spec)},
                   {"grids", {{"tmin", tmin}, {"tmax", tmax}, {"points", points}}},
                   {"solver", options_json(opts.solve)},
                   {"n_max_used", max_used},
                   {"library_version", UNCERT_VERSION}};

  if (spec.metric_z == MetricZ::Disc && spec.metric_t == MetricT::Cho && alpha == 2.0) {
    double worst = 0.0;
    for (const CurvePoint& p : curve.points) {
      worst = std::max(worst, std::abs(p.y - dischord_curve(p.x)));
    }
    manifest["checks"] = {{"dischord_max_abs_dev", worst}};
  }

  const fs::path dir(out_dir);
  write_file_atomic(dir / "curve.csv", curve_csv(curve));
  write_file_atomic(dir / "states.json", states_json(curve).dump(1));
  manifest["outputs"] = {"curve.csv", "states.json", "manifest.json"};
  manifest["wall_time_s"] = seconds_since(start);
  write_file_atomic(dir / "manifest.json", manifest.dump(1));

  std::printf("curve: %zu points, n_max <= %d -> %s\n", curve.points.size(), max_used,
              (dir / "curve.csv").c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds(const std::string& pair, const std::vector<std::string>& curves, int xgrid,
               int nmax, const std::string& out_dir) {
  const auto start = Clock::now();
  if (curves.empty()) throw CliUsageError("no bound curves requested");
  if (xgrid < 2) throw CliUsageError("xgrid must be >= 2");

  MetricSpec spec;
  spec.metric_z = MetricZ::Std;
  double x_max = 0.0;
  if (pair == "std-arc") {
    spec.metric_t = MetricT::Arc;
    x_max = kPi * kPi / 3.0;
  } else if (pair == "std-cho") {
    spec.metric_t = MetricT::Cho;
    x_max = 2.0;
  } else {
    throw CliUsageError("unknown pair " + pair + " (expected std-arc or std-cho)");
  }

  std::vector<std::string> names;
  for (const std::string& c : curves) {
    const bool cho = spec.metric_t == MetricT::Cho;
    if (c == "judge" || (cho && (c == "cn" || c == "second"))) {
      names.push_back(c);
    } else {
      throw CliUsageError("unknown bound name " + c + " for pair " + pair);
    }
  }
  prepare_out_dir(out_dir);

  auto bound_at = [&](const std::string& name, double x) {
    if (name == "judge") {
      return spec.metric_t == MetricT::Arc ? judge_arc(x) : judge_cho(x);
    }
    if (name == "cn") return cn_bound(x);
    return second_order_cho_at(x);
  };
  auto source_of = [&](const std::string& name) {
    if (name == "judge") {
      return std::string("bound:") +
             to_string(spec.metric_t == MetricT::Arc ? BoundKind::JudgeArc : BoundKind::JudgeCho);
    }
    if (name == "cn") return std::string("bound:") + to_string(BoundKind::CN);
    return std::string("bound:") + to_string(BoundKind::SecondOrderCho);
  };

  SweepOptions opts;
  opts.solve = make_solve_options(nmax);
  opts.store_states = false;
  const TradeoffCurve curve = sweep(spec, log_spaced(1e-3, 1e3, 200), opts);

  const fs::path dir(out_dir);
  std::vector<std::string> outputs;

  std::vector<double> xs(static_cast<size_t>(xgrid));
  for (int i = 0; i < xgrid; ++i) xs[static_cast<size_t>(i)] = x_max * (i + 0.5) / xgrid;

  for (const std::string& name : names) {
    std::string csv = "x,y,source\n";
    for (double x : xs) {
      csv += format_g17(x) + "," + format_g17(bound_at(name, x)) + "," + source_of(name) + "\n";
    }
    write_file_atomic(dir / (name + ".csv"), csv);
    outputs.push_back(name + ".csv");
  }

  // pairwise comparison and soundness against the certified sweep minorant
  std::string dom = "x";
  for (const auto& n : names) dom += "," + n;
  dom += ",sweep";
  for (const auto& n : names) dom += ",gap_" + n;
  dom += ",dominant\n";
  json summary;
  std::map<std::string, double> min_gap;
  bool sound = true;
  for (double x : xs) {
    const double sweep_y = legendre_lower_bound(curve, x);
    dom += format_g17(x);
    std::string dominant;
    double best = -1.0;
    for (const auto& n : names) {
      const double bx = bound_at(n, x);
      dom += "," + format_g17(bx);
      if (bx > best) {
        best = bx;
        dominant = n;
      }
    }
    dom += "," + format_g17(sweep_y);
    for (const auto& n : names) {
      const double gap = sweep_y - bound_at(n, x);
      if (gap < -1e-9) sound = false;
      auto it = min_gap.find(n);
      if (it == min_gap.end() || gap < it->second) min_gap[n] = gap;
      dom += "," + format_g17(gap);
    }
    dom += "," + dominant + "\n";
  }
  write_file_atomic(dir / "dominance.csv", dom);
  outputs.push_back("dominance.csv");

  for (const auto& [n, g] : min_gap) summary["min_gap_" + n] = g;
  summary["all_bounds_below_sweep"] = sound;

  json manifest = {{"command", "bounds"},
                   {"pair", pair},
                   {"curves", names},
                   {"grids", {{"xgrid", xgrid}, {"tmin", 1e-3}, {"tmax", 1e3}, {"points", 200}}},
                   {"solver", options_json(opts.solve)},
                   {"summary", summary},
                   {"library_version", UNCERT_VERSION}};
  outputs.push_back("manifest.json");
  manifest["outputs"] = outputs;
  manifest["wall_time_s"] = seconds_since(start);
  write_file_atomic(dir / "manifest.json", manifest.dump(1));

  std::printf("bounds: wrote %zu curve files -> %s\n", names.size(), out_dir.c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double value;
  double target;
  std::string mode;  // "abs_le": |value - target| <= tol; "le"/"ge": compare to target
  double tol;
  bool pass;
};

Check abs_check(const std::string& name, double value, double target, double tol) {
  return {name, value, target, "abs_le", tol, std::abs(value - target) <= tol};
}
Check le_check(const std::string& name, double value, double target) {
  return {name, value, target, "le", 0.0, value <= target};
}
Check ge_check(const std::string& name, double value, double target) {
  return {name, value, target, "ge", 0.0, value >= target};
}

MetricSpec named_spec(MetricZ z, MetricT t) {
  MetricSpec s;
  s.metric_z = z;
  s.metric_t = t;
  return s;
}

void paper_constant_checks(std::vector<Check>& checks, const SolveOptions& solve) {
  SweepOptions opts;
  opts.solve = solve;
  const auto grid = log_spaced(1e-3, 1e3, 200);
  const TradeoffCurve arc = sweep(named_spec(MetricZ::Std, MetricT::Arc), grid, opts);
  const TradeoffCurve cho = sweep(named_spec(MetricZ::Std, MetricT::Cho), grid, opts);

  checks.push_back(abs_check("family_norm_distance", family_norm_distance(arc, cho), 0.145, 0.01));
  checks.push_back(le_check("orbit_hausdorff_distance", hausdorff_orbit_distance(arc, cho), 0.033));

  double min_overlap = 2.0;
  for (size_t i = 0; i < arc.states.size(); ++i) {
    double dot = 0.0;
    for (size_t k = 0; k < arc.states[i].size(); ++k) dot += arc.states[i][k] * cho.states[i][k];
    min_overlap = std::min(min_overlap, dot);
  }
  checks.push_back(ge_check("min_family_fidelity", min_overlap, 0.98));

  SweepOptions plain;
  plain.solve = solve;
  plain.store_states = false;
  const TradeoffCurve disc = sweep(named_spec(MetricZ::Disc, MetricT::Cho), grid, plain);
  double worst = 0.0;
  for (const CurvePoint& p : disc.points) {
    worst = std::max(worst, std::abs(p.y - dischord_curve(p.x)));
  }
  checks.push_back(le_check("dischord_max_abs_dev", worst, 1e-6));

  for (double t : {0.1, 1.0, 10.0}) {
    const double e = ground_state_adequate(named_spec(MetricZ::Std, MetricT::Cho), t, solve).E0;
    const double m = 2.0 * t + mathieu_a0(-4.0 * t) / 4.0;
    checks.push_back(
        abs_check("mathieu_identity_t" + std::to_string(t).substr(0, 4), e, m, 1e-8));
  }
  const double e1 = ground_state_adequate(named_spec(MetricZ::Std, MetricT::Arc), 1.0, solve).E0;
  checks.push_back(abs_check("hypergeometric_oracle_t1", e1, arc_ground_energy(1.0), 1e-6));

  double min_gap = 1e9, min_slack = 1e9;
  for (const CurvePoint& p : arc.points) {
    if (!(p.x > 0.0) || !(p.x <= kPi * kPi / 3.0)) continue;
    const double gap = p.y - judge_arc(p.x);
    min_gap = std::min(min_gap, gap);
    min_slack = std::min(min_slack, gap);
  }
  checks.push_back(ge_check("judge_arc_soundness_slack", min_slack, -1e-9));
  checks.push_back(le_check("judge_arc_tangency_gap", min_gap, 1e-3));
}

void identity_checks(std::vector<Check>& checks, const SolveOptions& solve) {
  SweepOptions opts;
  opts.solve = solve;
  opts.store_states = true;
  const auto grid = log_spaced(1e-3, 1e2, 60);
  double worst_identity = 0.0, worst_parity = 0.0, worst_convexity = -1e9;
  bool range_ok = true;
  for (MetricZ z : {MetricZ::Std, MetricZ::Disc}) {
    for (MetricT t : {MetricT::Arc, MetricT::Cho}) {
      SweepOptions o = opts;
      if (z == MetricZ::Disc && t == MetricT::Arc) o.solve.tail_tol = 1e-6;
      const MetricSpec spec = named_spec(z, t);
      const TradeoffCurve c = sweep(spec, grid, o);
      const double v0 = potential_fourier_coeffs(t, 2.0, 1)[0];
      for (size_t i = 0; i < c.points.size(); ++i) {
        const CurvePoint& p = c.points[i];
        worst_identity = std::max(worst_identity, std::abs(p.y + p.t * p.x - p.E0));
        if (p.x < -1e-12 || p.x > v0 + 1e-9 || p.y < -1e-12) range_ok = false;
        const int n_max = p.n_max;
        const auto& psi = c.states[i];
        for (int n = 1; n <= n_max; ++n) {
          worst_parity = std::max(
              worst_parity, std::abs(psi[static_cast<size_t>(n_max + n)] -
                                     psi[static_cast<size_t>(n_max - n)]));
        }
      }
      for (size_t i = 0; i + 2 < c.points.size(); ++i) {
        const auto& a = c.points[i];
        const auto& b = c.points[i + 1];
        const auto& d = c.points[i + 2];
        const double s0 = (b.y - a.y) / (b.x - a.x);
        const double s1 = (d.y - b.y) / (d.x - b.x);
        worst_convexity = std::max(worst_convexity, s1 - s0);
      }
    }
  }
  checks.push_back(le_check("expectation_identity_max_residual", worst_identity, 1e-9));
  checks.push_back(le_check("parity_max_asymmetry", worst_parity, 1e-10));
  checks.push_back(le_check("convexity_max_slope_increase", worst_convexity, 1e-9));
  checks.push_back(ge_check("coordinate_ranges_valid", range_ok ? 1.0 : 0.0, 1.0));

  double worst_i2 = 0.0;
  for (MetricT m : {MetricT::Arc, MetricT::Cho}) {
    for (double mu : {0.3, 1.0, 5.0}) {
      const double h = 1e-5;
      const double fd = -(i1(m, mu + h) - i1(m, mu - h)) / (2.0 * h);
      worst_i2 = std::max(worst_i2, std::abs(i2(m, mu) - fd) / std::abs(i2(m, mu)));
    }
  }
  checks.push_back(le_check("i2_derivative_identity_rel", worst_i2, 1e-7));

  double worst_param = 0.0;
  for (double a : {0.1, 0.5, 1.0, 4.0}) {
    const auto [x, y] = second_order_cho(a);
    worst_param = std::max(worst_param, std::abs(y + second_order_g(a) * x - a));
  }
  checks.push_back(le_check("second_order_construction_identity", worst_param, 1e-12));
}

int run_verify(const std::string& suite, int nmax, const std::string& out_dir) {
  const auto start = Clock::now();
  prepare_out_dir(out_dir);
  const SolveOptions solve = make_solve_options(nmax);

  std::vector<Check> checks;
  if (suite == "paper-constants") {
    paper_constant_checks(checks, solve);
  } else if (suite == "identities") {
    identity_checks(checks, solve);
  } else {
    throw CliUsageError("unknown suite " + suite);
  }

  bool all = true;
  json jchecks = json::array();
  for (const Check& c : checks) {
    all = all && c.pass;
    std::printf("[%s] %-36s value=%.12g target=%.12g%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.value, c.target,
                c.mode == "abs_le" ? (" tol=" + format_g17(c.tol)).c_str() : "");
    jchecks.push_back({{"name", c.name},
                       {"value", c.value},
                       {"target", c.target},
                       {"mode", c.mode},
                       {"tol", c.tol},
                       {"pass", c.pass}});
  }
  json report = {{"suite", suite},
                 {"checks", jchecks},
                 {"all_pass", all},
                 {"solver", options_json(solve)},
                 {"library_version", UNCERT_VERSION},
                 {"wall_time_s", seconds_since(start)}};
  write_file_atomic(fs::path(out_dir) / "report.json", report.dump(1));
  std::printf("verify %s: %s\n", suite.c_str(), all ? "all checks passed" : "FAILURES");
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// transport

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliUsageError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

int run_transport(const std::string& space, const std::string& metric, double alpha,
                  const std::string& mu_file, const std::string& nu_file,
                  const std::string& out_file) {
  if (!(alpha >= 1.0)) throw CliUsageError("alpha must be >= 1");
  TransportResult res;
  if (space == "Z") {
    const MetricZ m = metric_z_from_string(metric);
    const IntDist mu = int_dist_from_json(load_json(mu_file));
    const IntDist nu = int_dist_from_json(load_json(nu_file));
    res = transport_distance(mu, nu, m, alpha);
  } else if (space == "T") {
    const MetricT m = metric_t_from_string(metric);
    const CircleDist mu = circle_dist_from_json(load_json(mu_file));
    const CircleDist nu = circle_dist_from_json(load_json(nu_file));
    res = transport_distance(mu, nu, m, alpha);
  } else {
    throw CliUsageError("space must be Z or T");
  }
  json out = to_json(res.plan);
  out["distance"] = res.distance;
  out["alpha"] = alpha;
  out["space"] = space;
  out["metric"] = metric;
  write_file_atomic(out_file, out.dump(1));
  std::printf("%s\n", format_g17(res.distance).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uncertainty tradeoff curves for the number-angle pair"};
  app.require_subcommand(1);

  // curve
  auto* curve = app.add_subcommand("curve", "sweep a tradeoff curve and export CSV/JSON");
  std::string mz = "std", mt = "arc", out_dir = "out";
  double alpha = 2.0, beta = 2.0, tmin = 1e-3, tmax = 1e3;
  int points = 200, nmax = 80;
  curve->add_option("--metric-z", mz, "number metric: std|disc")->required();
  curve->add_option("--metric-t", mt, "angle metric: arc|cho")->required();
  curve->add_option("--alpha", alpha, "angle exponent (>= 1)");
  curve->add_option("--beta", beta, "number exponent (>= 1)");
  curve->add_option("--tmin", tmin, "smallest slope parameter");
  curve->add_option("--tmax", tmax, "largest slope parameter");
  curve->add_option("--points", points, "number of log-spaced t samples");
  curve->add_option("--nmax", nmax, "starting basis cutoff");
  curve->add_option("--out", out_dir, "output directory")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate analytic lower-bound curves");
  std::string pair = "std-cho";
  std::vector<std::string> curve_names;
  int xgrid = 500, bounds_nmax = 80;
  std::string bounds_out = "out";
  bounds->add_option("--pair", pair, "metric pair: std-arc|std-cho")->required();
  bounds->add_option("--curves", curve_names, "bounds: judge,cn,second")
      ->required()
      ->delimiter(',');
  bounds->add_option("--xgrid", xgrid, "number of abscissa samples");
  bounds->add_option("--nmax", bounds_nmax, "starting basis cutoff for the sweep");
  bounds->add_option("--out", bounds_out, "output directory")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "paper-constants";
  int verify_nmax = 80;
  std::string verify_out = "out";
  verify->add_option("--suite", suite, "paper-constants|identities")->required();
  verify->add_option("--nmax", verify_nmax, "starting basis cutoff");
  verify->add_option("--out", verify_out, "output directory")->required();

  // transport
  auto* transport = app.add_subcommand("transport", "exact transport distance of two inputs");
  std::string space = "Z", metric = "std", mu_file, nu_file, coupling_out = "coupling.json";
  double talpha = 2.0;
  transport->add_option("--space", space, "Z|T")->required();
  transport->add_option("--metric", metric, "std|disc (Z) or arc|cho (T)")->required();
  transport->add_option("--alpha", talpha, "cost exponent (>= 1)");
  transport->add_option("--mu", mu_file, "JSON file with the first distribution")->required();
  transport->add_option("--nu", nu_file, "JSON file with the second distribution")->required();
  transport->add_option("--out", coupling_out, "coupling JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (curve->parsed()) {
      return run_curve(mz, mt, alpha, beta, tmin, tmax, points, nmax, out_dir);
    }
    if (bounds->parsed()) {
      return run_bounds(pair, curve_names, xgrid, bounds_nmax, bounds_out);
    }
    if (verify->parsed()) {
      return run_verify(suite, verify_nmax, verify_out);
    }
    if (transport->parsed()) {
      return run_transport(space, metric, talpha, mu_file, nu_file, coupling_out);
    }
  } catch (const CliUsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const TruncationCapExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const TransportInfeasible& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}

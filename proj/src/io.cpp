#include "uncert/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uncert {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json to_json(const MetricSpec& spec) {
  return {{"metric_z", to_string(spec.metric_z)},
          {"metric_t", to_string(spec.metric_t)},
          {"alpha", spec.alpha},
          {"beta", spec.beta}};
}

MetricSpec metric_spec_from_json(const nlohmann::json& j) {
  MetricSpec spec;
  spec.metric_z = metric_z_from_string(j.at("metric_z").get<std::string>());
  spec.metric_t = metric_t_from_string(j.at("metric_t").get<std::string>());
  spec.alpha = j.value("alpha", 2.0);
  spec.beta = j.value("beta", 2.0);
  return spec;
}

nlohmann::json to_json(const IntDist& d) {
  nlohmann::json atoms = nlohmann::json::array();
  for (long long n = d.lo(); n <= d.hi(); ++n) {
    if (d.at(n) != 0.0) atoms.push_back({n, d.at(n)});
  }
  return {{"space", "Z"}, {"atoms", atoms}};
}

nlohmann::json to_json(const CircleDist& d) {
  return {{"space", "T"}, {"grid_size", d.grid_size}, {"atoms", d.atoms}};
}

IntDist int_dist_from_json(const nlohmann::json& j) {
  if (j.at("space").get<std::string>() != "Z") {
    throw std::invalid_argument("expected a distribution on Z");
  }
  std::vector<std::pair<long long, double>> atoms;
  for (const auto& a : j.at("atoms")) {
    atoms.emplace_back(a.at(0).get<long long>(), a.at(1).get<double>());
  }
  IntDist d = IntDist::from_atoms(atoms);
  d.validate();
  return d;
}

CircleDist circle_dist_from_json(const nlohmann::json& j) {
  if (j.at("space").get<std::string>() != "T") {
    throw std::invalid_argument("expected a distribution on T");
  }
  CircleDist d;
  d.grid_size = j.at("grid_size").get<int>();
  d.atoms = j.at("atoms").get<std::vector<double>>();
  d.validate();
  return d;
}

nlohmann::json to_json(const SpectralResult& r) {
  return {{"E0", r.E0},         {"E1", r.E1}, {"psi_hat", r.psi_hat}, {"tail", r.tail},
          {"n_max", r.n_max},   {"t", r.t},   {"spec", to_json(r.spec)}};
}

nlohmann::json to_json(const Coupling& plan) {
  nlohmann::json cells = nlohmann::json::array();
  for (size_t i = 0; i < plan.rows; ++i) {
    for (size_t j = 0; j < plan.cols; ++j) {
      const double w = plan.at(i, j);
      if (w != 0.0) {
        cells.push_back({plan.row_points[i], plan.col_points[j], w});
      }
    }
  }
  return {{"rows", plan.rows},
          {"cols", plan.cols},
          {"row_points", plan.row_points},
          {"col_points", plan.col_points},
          {"cells", cells}};
}

std::string curve_csv(const TradeoffCurve& curve) {
  std::string out = "t,x,y,E0,E1,gap,n_max\n";
  for (const CurvePoint& p : curve.points) {
    out += format_g17(p.t) + "," + format_g17(p.x) + "," + format_g17(p.y) + "," +
           format_g17(p.E0) + "," + format_g17(p.E1) + "," + format_g17(p.E1 - p.E0) + "," +
           std::to_string(p.n_max) + "\n";
  }
  return out;
}

nlohmann::json states_json(const TradeoffCurve& curve) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < curve.states.size(); ++i) {
    arr.push_back({{"t", curve.points[i].t},
                   {"n_max", curve.points[i].n_max},
                   {"psi_hat", curve.states[i]}});
  }
  return arr;
}

}  // namespace uncert

/**
 * @file io.hpp
 * @brief Serialization: JSON for distributions, states and manifests, and
 *        the fixed-format CSV contract (17 significant digits, LF endings).
 */

#ifndef UNCERT_IO_HPP_
#define UNCERT_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "uncert/dist.hpp"
#include "uncert/spectral.hpp"
#include "uncert/tradeoff.hpp"

namespace uncert {

/// Shortest round-trip decimal form at 17 significant digits.
std::string format_g17(double v);

/// Writes content to a temporary file in the target directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

nlohmann::json to_json(const MetricSpec& spec);
MetricSpec metric_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntDist& d);
nlohmann::json to_json(const CircleDist& d);

/// Parses {"space":"Z","atoms":[[n,p],...]} .
IntDist int_dist_from_json(const nlohmann::json& j);
/// Parses {"space":"T","grid_size":G,"atoms":[p0,...]} .
CircleDist circle_dist_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectralResult& r);

nlohmann::json to_json(const Coupling& plan);

/// CSV body for a tradeoff curve: header t,x,y,E0,E1,gap,n_max.
std::string curve_csv(const TradeoffCurve& curve);

/// JSON array of per-point ground states {t, n_max, psi_hat}.
nlohmann::json states_json(const TradeoffCurve& curve);

}  // namespace uncert

#endif  // UNCERT_IO_HPP_

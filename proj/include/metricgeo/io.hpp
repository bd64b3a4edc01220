#ifndef METRICGEO_IO_HPP
#define METRICGEO_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "metricgeo/heisenberg.hpp"
#include "metricgeo/metric_map.hpp"
#include "metricgeo/metric_space.hpp"
#include "metricgeo/nagata.hpp"

namespace metricgeo {

// Fixed float formatting for byte-stable reports: 12 significant digits.
std::string format_double(double v);
// The double closest to the formatted value; reports store these so the
// emitted JSON is stable across runs and re-loads.
double round12(double v);

// Space files are either {"labels":[...], "matrix":[[...]]} or
// {"points":[[coords...]], "metric":"l1"|"l2"|"linf"}.
FiniteMetricSpace load_space(const nlohmann::json& j);
FiniteMetricSpace load_space_file(const std::string& path);
nlohmann::json space_to_json(const FiniteMetricSpace& space);

// Map files: {"domain": <space>, "codomain": <space>,
//             "assignment":[codomain indices]}.
MetricMap load_map(const nlohmann::json& j);
MetricMap load_map_file(const std::string& path);
nlohmann::json map_to_json(const MetricMap& map);

nlohmann::json decomposition_to_json(const Decomposition& decomposition);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json nagata_report_to_json(const NagataReport& report);
// One CSV row per scale: r, verdict, center, ys, zs, margin. Index lists
// are ';'-joined inside a cell.
std::string nagata_reports_to_csv(const std::vector<NagataReport>& reports);

nlohmann::json profile_to_json(const heisenberg::DistanceProfile& profile);
// Columns: k, exact_length, claim1_length, lower_bound, ratio.
std::string profile_to_csv(const heisenberg::DistanceProfile& profile);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Serializes with sorted keys and a trailing newline; numbers inserted
// through round12 make repeated runs byte-identical.
std::string dump_json(const nlohmann::json& j);

}  // namespace metricgeo

#endif

#include "metricgeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "metricgeo/errors.hpp"

namespace metricgeo {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

double round12(double v) {
  return std::strtod(format_double(v).c_str(), nullptr);
}

namespace {

double coord_distance(const std::vector<double>& p, const std::vector<double>& q,
                      const std::string& metric) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::abs(p[i] - q[i]);
    if (metric == "l1")
      acc += d;
    else if (metric == "l2")
      acc += d * d;
    else
      acc = std::max(acc, d);
  }
  return metric == "l2" ? std::sqrt(acc) : acc;
}

}  // namespace

FiniteMetricSpace load_space(const nlohmann::json& j) {
  if (j.contains("points")) {
    const std::string metric = j.value("metric", "l2");
    if (metric != "l1" && metric != "l2" && metric != "linf")
      throw IoError("unknown metric '" + metric + "'");
    auto points = j.at("points").get<std::vector<std::vector<double>>>();
    for (const auto& p : points)
      if (p.size() != points.front().size())
        throw IoError("points have mixed dimensions");

    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    else
      for (std::size_t i = 0; i < points.size(); ++i)
        labels.push_back(std::to_string(i));

    std::vector<std::vector<double>> matrix(
        points.size(), std::vector<double>(points.size(), 0.0));
    for (std::size_t a = 0; a < points.size(); ++a)
      for (std::size_t b = a + 1; b < points.size(); ++b)
        matrix[a][b] = matrix[b][a] =
            coord_distance(points[a], points[b], metric);
    return FiniteMetricSpace::validate(std::move(labels), matrix);
  }

  auto labels = j.at("labels").get<std::vector<std::string>>();
  auto matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
  return FiniteMetricSpace::validate(std::move(labels), matrix);
}

FiniteMetricSpace load_space_file(const std::string& path) {
  return load_space(nlohmann::json::parse(read_text_file(path)));
}

nlohmann::json space_to_json(const FiniteMetricSpace& space) {
  nlohmann::json j;
  j["labels"] = space.labels();
  nlohmann::json matrix = nlohmann::json::array();
  for (const auto& row : space.matrix_rows()) {
    nlohmann::json out_row = nlohmann::json::array();
    for (double v : row) out_row.push_back(round12(v));
    matrix.push_back(std::move(out_row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

MetricMap load_map(const nlohmann::json& j) {
  FiniteMetricSpace domain = load_space(j.at("domain"));
  FiniteMetricSpace codomain = load_space(j.at("codomain"));
  auto assignment = j.at("assignment").get<std::vector<std::size_t>>();
  return MetricMap::create(std::move(domain), std::move(codomain),
                           std::move(assignment));
}

MetricMap load_map_file(const std::string& path) {
  return load_map(nlohmann::json::parse(read_text_file(path)));
}

nlohmann::json map_to_json(const MetricMap& map) {
  nlohmann::json j;
  j["domain"] = space_to_json(map.domain());
  j["codomain"] = space_to_json(map.codomain());
  j["assignment"] = map.assignment();
  return j;
}

nlohmann::json decomposition_to_json(const Decomposition& decomposition) {
  nlohmann::json j;
  j["r"] = round12(decomposition.r);
  j["bound"] = round12(decomposition.bound);
  j["parts"] = decomposition.parts;
  return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  Decomposition d;
  d.r = j.value("r", 0.0);
  d.bound = j.value("bound", 0.0);
  d.parts = j.at("parts").get<std::vector<std::vector<std::size_t>>>();
  return d;
}

nlohmann::json nagata_report_to_json(const NagataReport& report) {
  nlohmann::json j;
  j["r"] = round12(report.r);
  j["n"] = report.n;
  j["verdict"] = report.violation ? "violation" : "ok";
  j["margin"] = round12(report.margin);
  if (report.violation) {
    j["center"] = report.center;
    j["ys"] = report.ys;
    j["zs"] = report.zs;
  }
  return j;
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string nagata_reports_to_csv(const std::vector<NagataReport>& reports) {
  std::string out = "r,verdict,center,ys,zs,margin\n";
  for (const auto& rep : reports) {
    out += format_double(rep.r);
    out += rep.violation ? ",violation," : ",ok,";
    if (rep.violation) {
      out += std::to_string(rep.center);
      out += ',';
      out += join_indices(rep.ys);
      out += ',';
      out += join_indices(rep.zs);
    } else {
      out += ",,";
    }
    out += ',';
    out += format_double(rep.margin);
    out += '\n';
  }
  return out;
}

nlohmann::json profile_to_json(const heisenberg::DistanceProfile& profile) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : profile.rows) {
    nlohmann::json r;
    r["k"] = row.k;
    r["exact_length"] = row.exact_length;
    r["claim1_length"] = row.central_word_length;
    r["lower_bound"] = round12(row.lower_bound);
    r["ratio"] = round12(row.ratio);
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["radius"] = profile.radius;
  j["rows"] = std::move(rows);
  return j;
}

std::string profile_to_csv(const heisenberg::DistanceProfile& profile) {
  std::string out = "k,exact_length,claim1_length,lower_bound,ratio\n";
  for (const auto& row : profile.rows) {
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.exact_length);
    out += ',';
    out += std::to_string(row.central_word_length);
    out += ',';
    out += format_double(row.lower_bound);
    out += ',';
    out += format_double(row.ratio);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace metricgeo

// Command-line front end: load spaces and maps, dispatch analyses, emit
// reports. Exit codes: 0 clean verdict, 1 violation found (report still
// written), 2 error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricgeo/errors.hpp"
#include "metricgeo/heisenberg.hpp"
#include "metricgeo/io.hpp"
#include "metricgeo/metric_map.hpp"
#include "metricgeo/metric_space.hpp"
#include "metricgeo/nagata.hpp"
#include "metricgeo/tolerance.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::fputs(content.c_str(), stdout);
  else
    metricgeo::write_text_file(out_path, content);
}

// Shared space-loading pipeline: --space, then optional --s rescale and
// --p snowflake.
struct SpaceArgs {
  std::string path;
  double rescale_s = 0.0;   // 0 = absent
  double snowflake_p = 0.0; // 0 = absent

  void attach(CLI::App* cmd, bool with_transforms = true) {
    cmd->add_option("--space", path, "space JSON file")->required();
    if (with_transforms) {
      cmd->add_option("--s", rescale_s, "rescale distances by 1/s before analysis");
      cmd->add_option("--p", snowflake_p, "snowflake exponent applied before analysis");
    }
  }

  metricgeo::FiniteMetricSpace load() const {
    metricgeo::FiniteMetricSpace space = metricgeo::load_space_file(path);
    if (rescale_s != 0.0) space = metricgeo::rescale(space, rescale_s);
    if (snowflake_p != 0.0) space = metricgeo::snowflake(space, snowflake_p);
    return space;
  }
};

int run_validate(const SpaceArgs& args, const std::string& out,
                 const std::string& format) {
  if (format != "json") throw metricgeo::BadParameter("validate emits json only");
  json report;
  try {
    metricgeo::FiniteMetricSpace space = args.load();
    report["verdict"] = "ok";
    report["points"] = space.size();
    report["space"] = metricgeo::space_to_json(space);
    emit(metricgeo::dump_json(report), out);
    return kExitOk;
  } catch (const metricgeo::Error& e) {
    report["verdict"] = "invalid";
    report["reason"] = e.what();
    emit(metricgeo::dump_json(report), out);
    return kExitViolation;
  }
}

int run_nagata(const SpaceArgs& args, int n, std::optional<double> r,
               const std::string& out, const std::string& format) {
  if (n < 0) throw metricgeo::BadParameter("--n must be non-negative");
  metricgeo::FiniteMetricSpace space = args.load();

  std::vector<double> grid;
  if (r)
    grid.push_back(*r);
  else
    grid = metricgeo::distance_grid(space);

  std::vector<metricgeo::NagataReport> reports;
  bool any_violation = false;
  for (double scale : grid) {
    reports.push_back(
        metricgeo::nagata_check(space, static_cast<std::size_t>(n), scale));
    any_violation = any_violation || reports.back().violation;
  }

  if (format == "csv") {
    emit(metricgeo::nagata_reports_to_csv(reports), out);
  } else {
    json rows = json::array();
    for (const auto& rep : reports)
      rows.push_back(metricgeo::nagata_report_to_json(rep));
    json report;
    report["n"] = n;
    report["rows"] = std::move(rows);
    report["verdict"] = any_violation ? "violation" : "ok";
    emit(metricgeo::dump_json(report), out);
  }
  return any_violation ? kExitViolation : kExitOk;
}

int run_decompose(const SpaceArgs& args, double r, double K,
                  const std::string& out, const std::string& format) {
  if (format != "json") throw metricgeo::BadParameter("decompose emits json only");
  metricgeo::FiniteMetricSpace space = args.load();

  metricgeo::Decomposition decomposition;
  std::string method;
  if (space.size() <= 14) {
    decomposition = metricgeo::min_parts_exact(space, r, K).decomposition;
    method = "exact";
  } else {
    decomposition = metricgeo::greedy_parts(space, r, K);
    method = "greedy";
  }
  auto check =
      metricgeo::verify_decomposition(space, decomposition.parts, r, K);

  json report = metricgeo::decomposition_to_json(decomposition);
  report["method"] = method;
  report["verified"] = check.ok;
  report["max_component_diameter"] =
      metricgeo::round12(check.max_component_diameter);
  emit(metricgeo::dump_json(report), out);
  return check.ok ? kExitOk : kExitViolation;
}

int run_cover(const SpaceArgs& args, double r, const std::string& out,
              const std::string& format) {
  if (format != "json") throw metricgeo::BadParameter("cover emits json only");
  metricgeo::FiniteMetricSpace space = args.load();
  metricgeo::Cover cover = metricgeo::net_cover(space, r);
  auto multiplicity = metricgeo::cover_multiplicity(space, cover, r / 2.0);

  json report;
  report["r"] = metricgeo::round12(r);
  report["net"] = cover.net;
  report["elements"] = metricgeo::cover_elements(space, cover);
  report["multiplicity_at_half_r"] = multiplicity.count;
  report["multiplicity_point"] = multiplicity.point;
  emit(metricgeo::dump_json(report), out);
  return kExitOk;
}

int run_map_check(const std::string& map_path, const std::string& out,
                  const std::string& format) {
  if (format != "json") throw metricgeo::BadParameter("map-check emits json only");
  metricgeo::MetricMap map = metricgeo::load_map_file(map_path);

  const double lambda = metricgeo::lipschitz_constant(map);
  const double mu = metricgeo::openness_constant(map);
  auto parallel = metricgeo::check_parallel_fibers(map);
  auto fiber_space = metricgeo::fiber_space_check(map);
  auto brodskiy = metricgeo::check_brodskiy(map, mu);

  json report;
  report["lambda"] = metricgeo::round12(lambda);
  report["mu"] = metricgeo::round12(mu);
  report["parallel_fibers"] = parallel.parallel;
  if (!parallel.parallel) {
    report["parallel_counterexample"] = {{"x", parallel.x}, {"y", parallel.y}};
  }
  report["fiber_space_ok"] = fiber_space.ok;
  if (!fiber_space.ok)
    report["fiber_space_failure"] = {{"y1", fiber_space.y1},
                                     {"y2", fiber_space.y2}};
  report["brodskiy_ok"] = brodskiy.ok;
  if (!brodskiy.ok)
    report["brodskiy_failure"] = {{"x", brodskiy.x},
                                  {"y", brodskiy.y},
                                  {"R", metricgeo::round12(brodskiy.radius)}};
  emit(metricgeo::dump_json(report), out);
  return fiber_space.ok && brodskiy.ok ? kExitOk : kExitViolation;
}

int run_pullback(const std::string& map_path, double r, double K,
                 const std::string& out, const std::string& format) {
  if (format != "json") throw metricgeo::BadParameter("pullback emits json only");
  metricgeo::MetricMap map = metricgeo::load_map_file(map_path);
  const double lambda = metricgeo::lipschitz_constant(map);

  // Build codomain parts satisfying the hypothesis: components at scale
  // lambda*r bounded by K in absolute diameter.
  std::vector<std::vector<std::size_t>> y_parts;
  const double y_scale = lambda * r;
  if (y_scale > 0.0) {
    metricgeo::Decomposition d =
        metricgeo::greedy_parts(map.codomain(), y_scale, K / y_scale);
    y_parts = d.parts;
  } else {
    std::vector<std::size_t> all(map.codomain().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    y_parts.push_back(std::move(all));
  }

  json report;
  try {
    auto result = metricgeo::pullback_decomposition(map, y_parts, r, K);
    report["r"] = metricgeo::round12(r);
    report["K"] = metricgeo::round12(K);
    report["y_parts"] = y_parts;
    report["x_parts"] = result.x_parts;
    report["bound"] = metricgeo::round12(result.bound);
    report["max_component_diameter"] =
        metricgeo::round12(result.max_component_diameter);
    report["verdict"] = "ok";
    emit(metricgeo::dump_json(report), out);
    return kExitOk;
  } catch (const metricgeo::TheoremViolation& e) {
    report["verdict"] = "violation";
    report["reason"] = e.what();
    emit(metricgeo::dump_json(report), out);
    return kExitViolation;
  }
}

int run_fiber_cover(const std::string& map_path, double r_x, double big_r,
                    double c, const std::string& out,
                    const std::string& format) {
  if (format != "json")
    throw metricgeo::BadParameter("fiber-cover emits json only");
  metricgeo::MetricMap map = metricgeo::load_map_file(map_path);

  std::vector<std::size_t> a(map.domain().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;

  // The subset's image must already be small; pick the deterministic
  // base point the same way fiber_cover does and decompose its fiber at
  // the hypothesis scale.
  std::vector<std::size_t> image_of_a;
  for (std::size_t x : a) image_of_a.push_back(map.apply(x));
  std::sort(image_of_a.begin(), image_of_a.end());
  image_of_a.erase(std::unique(image_of_a.begin(), image_of_a.end()),
                   image_of_a.end());
  const std::size_t base = image_of_a.front();
  const auto& fiber = map.fiber(base);

  const double fiber_scale = 2.0 * big_r + r_x;
  metricgeo::FiniteMetricSpace fiber_space = map.domain().subspace(fiber);
  metricgeo::Decomposition fiber_decomposition =
      fiber.size() <= 14
          ? metricgeo::min_parts_exact(fiber_space, fiber_scale, c).decomposition
          : metricgeo::greedy_parts(fiber_space, fiber_scale, c);

  std::vector<std::vector<std::size_t>> fiber_parts;
  for (const auto& part : fiber_decomposition.parts) {
    std::vector<std::size_t> mapped;
    for (std::size_t local : part) mapped.push_back(fiber[local]);
    fiber_parts.push_back(std::move(mapped));
  }

  json report;
  try {
    auto result = metricgeo::fiber_cover(map, a, r_x, big_r, c, fiber_parts);
    report["r_x"] = metricgeo::round12(r_x);
    report["R_y"] = metricgeo::round12(big_r);
    report["c"] = metricgeo::round12(c);
    report["base_point"] = result.base_point;
    report["fiber_parts"] = fiber_parts;
    report["a_parts"] = result.a_parts;
    report["bound"] = metricgeo::round12(result.bound);
    report["max_component_diameter"] =
        metricgeo::round12(result.max_component_diameter);
    report["verdict"] = "ok";
    emit(metricgeo::dump_json(report), out);
    return kExitOk;
  } catch (const metricgeo::TheoremViolation& e) {
    report["verdict"] = "violation";
    report["reason"] = e.what();
    emit(metricgeo::dump_json(report), out);
    return kExitViolation;
  }
}

int run_heisenberg_word(long long k, const std::string& out,
                        const std::string& format) {
  if (format != "json")
    throw metricgeo::BadParameter("heisenberg-word emits json only");
  namespace hb = metricgeo::heisenberg;
  hb::Word word = hb::central_word(k);
  hb::Element value = hb::evaluate(word);

  json report;
  report["k"] = k;
  report["word"] = hb::to_string(word);
  report["length"] = word.length();
  report["evaluates_to"] = {value.x.str(), value.y.str(), value.z.str()};
  emit(metricgeo::dump_json(report), out);
  return kExitOk;
}

int run_heisenberg_profile(int radius, const std::string& out,
                           const std::string& format) {
  namespace hb = metricgeo::heisenberg;
  hb::DistanceProfile profile = hb::central_distance_profile(radius);
  if (format == "csv")
    emit(metricgeo::profile_to_csv(profile), out);
  else
    emit(metricgeo::dump_json(metricgeo::profile_to_json(profile)), out);
  return kExitOk;
}

int run_nagata_constant(const std::string& out, const std::string& format) {
  if (format != "json")
    throw metricgeo::BadParameter("nagata-constant emits json only");
  auto scan = metricgeo::heisenberg::nagata_constant();
  json report;
  report["value"] = metricgeo::round12(scan.value);
  report["argmax"] = scan.argmax;
  report["strictly_decreasing"] = scan.strictly_decreasing;
  emit(metricgeo::dump_json(report), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite metric geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  auto add_sub = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  std::string out, format = "json";
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  SpaceArgs validate_args;
  auto* cmd_validate = add_sub("validate", "check metric axioms");
  validate_args.attach(cmd_validate);

  SpaceArgs nagata_args;
  int nagata_n = 0;
  std::optional<double> nagata_r;
  auto* cmd_nagata =
      add_sub("nagata", "Nagata-property witness search");
  nagata_args.attach(cmd_nagata);
  cmd_nagata->add_option("--n", nagata_n, "dimension parameter")->required();
  cmd_nagata->add_option("--r", nagata_r,
                         "scale (default: every pairwise distance)");

  SpaceArgs decompose_args;
  double decompose_r = 0.0, decompose_K = 0.0;
  auto* cmd_decompose =
      add_sub("decompose", "bounded-component decomposition");
  decompose_args.attach(cmd_decompose);
  cmd_decompose->add_option("--r", decompose_r, "scale")->required();
  cmd_decompose->add_option("--K", decompose_K, "diameter bound factor")
      ->required();

  SpaceArgs cover_args;
  double cover_r = 0.0;
  auto* cmd_cover = add_sub("cover", "greedy net ball cover");
  cover_args.attach(cmd_cover);
  cmd_cover->add_option("--r", cover_r, "net separation and ball radius")
      ->required();

  std::string map_path;
  auto* cmd_map_check =
      add_sub("map-check", "Lipschitz/openness analysis");
  cmd_map_check->add_option("--map", map_path, "map JSON file")->required();

  std::string pullback_map;
  double pullback_r = 0.0, pullback_K = 0.0;
  auto* cmd_pullback = add_sub(
      "pullback", "pull a codomain decomposition back through the map");
  cmd_pullback->add_option("--map", pullback_map, "map JSON file")->required();
  cmd_pullback->add_option("--r", pullback_r, "domain scale")->required();
  cmd_pullback->add_option("--K", pullback_K, "codomain component bound")
      ->required();

  std::string fiber_cover_map;
  double fc_r = 0.0, fc_R = 0.0, fc_c = 1.0;
  auto* cmd_fiber_cover = add_sub(
      "fiber-cover", "cover the domain by thickened fiber parts");
  cmd_fiber_cover->add_option("--map", fiber_cover_map, "map JSON file")
      ->required();
  cmd_fiber_cover->add_option("--r", fc_r, "domain scale r_X")->required();
  cmd_fiber_cover->add_option("--R", fc_R, "image diameter bound R_Y")
      ->required();
  cmd_fiber_cover->add_option("--c", fc_c, "fiber part component bound factor");

  long long word_k = 0;
  auto* cmd_word =
      add_sub("heisenberg-word", "short word for a central element");
  cmd_word->add_option("--k", word_k, "central exponent")->required();

  int profile_radius = metricgeo::heisenberg::kDefaultBfsBudget;
  auto* cmd_profile = add_sub(
      "heisenberg-profile", "central distance profile from exact BFS");
  cmd_profile->add_option("--L", profile_radius, "Cayley-ball radius");

  auto* cmd_constant = add_sub(
      "nagata-constant", "word-length constant threshold certificate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) return run_validate(validate_args, out, format);
    if (*cmd_nagata)
      return run_nagata(nagata_args, nagata_n, nagata_r, out, format);
    if (*cmd_decompose)
      return run_decompose(decompose_args, decompose_r, decompose_K, out,
                           format);
    if (*cmd_cover) return run_cover(cover_args, cover_r, out, format);
    if (*cmd_map_check) return run_map_check(map_path, out, format);
    if (*cmd_pullback)
      return run_pullback(pullback_map, pullback_r, pullback_K, out, format);
    if (*cmd_fiber_cover)
      return run_fiber_cover(fiber_cover_map, fc_r, fc_R, fc_c, out, format);
    if (*cmd_word) return run_heisenberg_word(word_k, out, format);
    if (*cmd_profile) return run_heisenberg_profile(profile_radius, out, format);
    if (*cmd_constant) return run_nagata_constant(out, format);
  } catch (const metricgeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad input file: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

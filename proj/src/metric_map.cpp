#include "metricgeo/metric_map.hpp"

#include <algorithm>
#include <cmath>

#include "metricgeo/errors.hpp"
#include "metricgeo/nagata.hpp"

namespace metricgeo {

MetricMap::MetricMap(FiniteMetricSpace domain, FiniteMetricSpace codomain,
                     std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
  fibers_.assign(codomain_.size(), {});
  for (std::size_t x = 0; x < assignment_.size(); ++x)
    fibers_[assignment_[x]].push_back(x);
  for (std::size_t y = 0; y < codomain_.size(); ++y)
    if (!fibers_[y].empty()) image_.push_back(y);
}

MetricMap MetricMap::create(FiniteMetricSpace domain,
                            FiniteMetricSpace codomain,
                            std::vector<std::size_t> assignment) {
  if (assignment.size() != domain.size())
    throw BadAssignment("assignment has " + std::to_string(assignment.size()) +
                        " entries for " + std::to_string(domain.size()) +
                        " domain points");
  for (std::size_t y : assignment)
    if (y >= codomain.size())
      throw BadAssignment("assignment value " + std::to_string(y) +
                          " out of codomain range");
  return MetricMap(std::move(domain), std::move(codomain),
                   std::move(assignment));
}

double lipschitz_constant(const MetricMap& map) {
  const auto& X = map.domain();
  const auto& Y = map.codomain();
  double best = 0.0;
  for (std::size_t x1 = 0; x1 < X.size(); ++x1)
    for (std::size_t x2 = x1 + 1; x2 < X.size(); ++x2)
      best = std::max(best, Y.dist(map.apply(x1), map.apply(x2)) /
                                X.dist(x1, x2));
  return best;
}

double openness_constant(const MetricMap& map) {
  const auto& X = map.domain();
  const auto& Y = map.codomain();
  double best = 0.0;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y : map.image()) {
      if (y == map.apply(x)) continue;
      best = std::max(best, X.dist_to_set(x, map.fiber(y)) /
                                Y.dist(map.apply(x), y));
    }
  return best;
}

ParallelFiberCheck check_parallel_fibers(const MetricMap& map) {
  const auto& X = map.domain();
  const auto& Y = map.codomain();
  const Cmp cmp = map.cmp();
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y : map.image()) {
      const double target = Y.dist(map.apply(x), y);
      bool realized = false;
      for (std::size_t xp : map.fiber(y))
        if (cmp.eq(X.dist(x, xp), target)) {
          realized = true;
          break;
        }
      if (!realized) return {false, x, y};
    }
  return {};
}

BrodskiyReport check_brodskiy(const MetricMap& map, double mu,
                              std::span<const double> r_grid) {
  const double mu_min = openness_constant(map);
  const Cmp cmp = map.cmp();
  if (cmp.lt(mu, mu_min)) throw InvalidMu(mu, mu_min);

  const auto& X = map.domain();
  const auto& Y = map.codomain();
  for (std::size_t x = 0; x < X.size(); ++x)
    for (double radius : r_grid) {
      for (std::size_t y : map.image()) {
        // mu = 0 means every fiber is at distance 0, so the scaled ball
        // covers everything it can reach.
        if (mu > 0.0 && !cmp.lt(Y.dist(map.apply(x), y), radius / mu))
          continue;
        if (!cmp.lt(X.dist_to_set(x, map.fiber(y)), radius))
          return {false, x, y, radius};
      }
    }
  return {};
}

BrodskiyReport check_brodskiy(const MetricMap& map, double mu) {
  std::vector<double> grid = distance_grid(map.codomain(), true);
  return check_brodskiy(map, mu, grid);
}

FiberSpaceCheck fiber_space_check(const MetricMap& map) {
  FiberSpaceCheck check;
  check.lambda = lipschitz_constant(map);
  check.mu = openness_constant(map);
  if (check.lambda <= 0.0 && map.image().size() >= 2) throw DegenerateMap();

  const auto& X = map.domain();
  const auto& Y = map.codomain();
  const Cmp cmp = map.cmp();
  const auto& image = map.image();
  for (std::size_t a = 0; a < image.size(); ++a)
    for (std::size_t b = a + 1; b < image.size(); ++b) {
      const std::size_t y1 = image[a], y2 = image[b];
      const double dy = Y.dist(y1, y2);
      const double dh = hausdorff(X, map.fiber(y1), map.fiber(y2));
      if (!cmp.le(dy / check.lambda, dh) || !cmp.le(dh, check.mu * dy)) {
        check.ok = false;
        check.y1 = y1;
        check.y2 = y2;
        return check;
      }
    }
  return check;
}

namespace {

// Strong triangle inequality on a fiber, checked in place.
bool fiber_is_ultrametric(const FiniteMetricSpace& X,
                          std::span<const std::size_t> fiber, const Cmp& cmp) {
  for (std::size_t a = 0; a < fiber.size(); ++a)
    for (std::size_t b = a + 1; b < fiber.size(); ++b)
      for (std::size_t c = 0; c < fiber.size(); ++c) {
        if (c == a || c == b) continue;
        if (cmp.gt(X.dist(fiber[a], fiber[b]),
                   std::max(X.dist(fiber[a], fiber[c]),
                            X.dist(fiber[c], fiber[b]))))
          return false;
      }
  return true;
}

Components subset_components(const FiniteMetricSpace& space,
                             const std::vector<std::size_t>& subset,
                             double scale) {
  Components out;
  if (subset.empty()) return out;
  if (scale > 0.0) return r_components(space, subset, scale);
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t p : sorted) {
    out.members.push_back({p});
    out.diameters.push_back(0.0);
  }
  return out;
}

}  // namespace

PullbackResult pullback_decomposition(
    const MetricMap& map, const std::vector<std::vector<std::size_t>>& y_parts,
    double r, double K) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  if (!(K > 0.0)) throw BadParameter("K must be positive");
  const auto& X = map.domain();
  const Cmp cmp = map.cmp();

  for (std::size_t y : map.image())
    if (!fiber_is_ultrametric(X, map.fiber(y), cmp))
      throw NonUltrametricFiber(y);

  const double mu = openness_constant(map);
  if (cmp.gt(mu, 1.0)) throw MuExceedsOne(mu);

  const double lambda = lipschitz_constant(map);
  for (std::size_t i = 0; i < y_parts.size(); ++i) {
    Components comps =
        subset_components(map.codomain(), y_parts[i], lambda * r);
    for (double d : comps.diameters)
      if (!cmp.le(d, K)) throw PartHypothesisFails(i, d);
  }

  PullbackResult result;
  result.bound = 4.0 * K + r;
  for (const auto& y_part : y_parts) {
    std::vector<std::size_t> x_part;
    for (std::size_t y : y_part)
      for (std::size_t x : map.fiber(y)) x_part.push_back(x);
    std::sort(x_part.begin(), x_part.end());
    result.x_parts.push_back(std::move(x_part));
  }
  for (const auto& x_part : result.x_parts) {
    Components comps = subset_components(X, x_part, r);
    for (double d : comps.diameters) {
      result.max_component_diameter =
          std::max(result.max_component_diameter, d);
      if (!cmp.le(d, result.bound))
        throw TheoremViolation(
            "pullback component diameter " + std::to_string(d) +
            " exceeds 4K + r = " + std::to_string(result.bound));
    }
  }
  return result;
}

FiberCoverResult fiber_cover(
    const MetricMap& map, std::span<const std::size_t> a, double r_x,
    double big_r, double c,
    const std::vector<std::vector<std::size_t>>& fiber_parts) {
  if (a.empty()) throw EmptySubset();
  if (!(r_x > 0.0)) throw NonPositiveScale(r_x);
  if (!(big_r > 0.0)) throw NonPositiveScale(big_r);
  if (!(c > 0.0)) throw BadParameter("c must be positive");

  const auto& X = map.domain();
  const auto& Y = map.codomain();
  const Cmp cmp = map.cmp();

  std::vector<std::size_t> subset(a.begin(), a.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (std::size_t x : subset)
    if (x >= X.size()) throw BadIndex(x);

  std::vector<std::size_t> image_of_a;
  for (std::size_t x : subset) image_of_a.push_back(map.apply(x));
  std::sort(image_of_a.begin(), image_of_a.end());
  image_of_a.erase(std::unique(image_of_a.begin(), image_of_a.end()),
                   image_of_a.end());
  const double image_diameter = Y.diameter(image_of_a);
  if (!cmp.lt(image_diameter, big_r))
    throw ImageTooLarge(image_diameter, big_r);

  const std::size_t base = image_of_a.front();
  const auto& fiber = map.fiber(base);

  // fiber_parts must cover the fiber and satisfy the component bound at
  // scale 2*big_r + r_x.
  const double fiber_scale = 2.0 * big_r + r_x;
  const double fiber_bound = c * fiber_scale;
  {
    std::vector<char> covered(X.size(), 0);
    std::vector<char> in_fiber(X.size(), 0);
    for (std::size_t x : fiber) in_fiber[x] = 1;
    for (std::size_t i = 0; i < fiber_parts.size(); ++i) {
      for (std::size_t x : fiber_parts[i]) {
        if (x >= X.size() || !in_fiber[x])
          throw FiberPartsHypothesisFails(
              "fiber part " + std::to_string(i) + " contains point " +
              std::to_string(x) + " outside the fiber");
        covered[x] = 1;
      }
      Components comps = subset_components(X, fiber_parts[i], fiber_scale);
      for (double d : comps.diameters)
        if (!cmp.le(d, fiber_bound))
          throw FiberPartsHypothesisFails(
              "fiber part " + std::to_string(i) +
              " has a component of diameter " + std::to_string(d) +
              " above " + std::to_string(fiber_bound));
    }
    for (std::size_t x : fiber)
      if (!covered[x])
        throw FiberPartsHypothesisFails("fiber point " + std::to_string(x) +
                                        " lies in no fiber part");
  }

  FiberCoverResult result;
  result.base_point = base;
  result.bound = fiber_bound + 2.0 * big_r;  // = c*r_x + (2c+2)*big_r

  for (const auto& fpart : fiber_parts) {
    std::vector<std::size_t> a_part;
    for (std::size_t x : subset)
      if (!fpart.empty() && cmp.lt(X.dist_to_set(x, fpart), big_r))
        a_part.push_back(x);
    result.a_parts.push_back(std::move(a_part));
  }

  for (std::size_t x : subset) {
    bool covered = false;
    for (const auto& a_part : result.a_parts)
      if (std::binary_search(a_part.begin(), a_part.end(), x)) {
        covered = true;
        break;
      }
    if (!covered) throw NotCovered(x);
  }

  for (const auto& a_part : result.a_parts) {
    Components comps = subset_components(X, a_part, r_x);
    for (double d : comps.diameters) {
      result.max_component_diameter =
          std::max(result.max_component_diameter, d);
      if (!cmp.le(d, result.bound))
        throw TheoremViolation("thickened fiber part has a component of "
                               "diameter " +
                               std::to_string(d) + " above " +
                               std::to_string(result.bound));
    }
  }
  return result;
}

}  // namespace metricgeo

#ifndef METRICGEO_NAGATA_HPP
#define METRICGEO_NAGATA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "metricgeo/metric_space.hpp"

namespace metricgeo {

// The r-components of a point set: equivalence classes under chains of
// hops strictly shorter than r. Classes are ordered by smallest member,
// members ascending.
struct Components {
  std::vector<std::vector<std::size_t>> members;
  std::vector<double> diameters;
};

Components r_components(const FiniteMetricSpace& space,
                        std::span<const std::size_t> subset, double r);

// A family of parts covering the space, at scale r with diameter bound
// `bound` on the r-components of each part.
struct Decomposition {
  std::vector<std::vector<std::size_t>> parts;
  double r = 0.0;
  double bound = 0.0;
};

struct DecompositionCheck {
  bool ok = true;
  double max_component_diameter = 0.0;
  // First offending component when !ok:
  std::size_t part = 0;
  std::vector<std::size_t> component;
  double diameter = 0.0;
};

// Checks that every r-component of every part has diameter <= K*r (with
// tolerance slack). Parts must jointly cover the space.
DecompositionCheck verify_decomposition(
    const FiniteMetricSpace& space,
    const std::vector<std::vector<std::size_t>>& parts, double r, double K);

struct MinPartsResult {
  std::size_t m = 0;  // minimal m; decomposition has m+1 parts
  Decomposition decomposition;
};

// Smallest m such that the space splits into m+1 parts whose
// r-components are K*r-bounded. Exhaustive over canonical labeled
// partitions (first point in part 0, new parts opened in order), with
// pruning: component diameters only grow as points are added. Limits
// default to 14 points and 4 parts.
MinPartsResult min_parts_exact(const FiniteMetricSpace& space, double r,
                               double K, std::size_t max_points = 14,
                               std::size_t max_parts = 4);

// Deterministic greedy assignment in point-index order; opens a new part
// whenever no existing part admits the point, so it always succeeds.
// Output passes verify_decomposition by construction.
Decomposition greedy_parts(const FiniteMetricSpace& space, double r, double K);

// Verdict of the n-dimensional Nagata property probe at scale r, with an
// explicit witness on violation: a center x, points y_1..y_{n+2} pairwise
// >= r apart, and auxiliaries z_i with dist(y_i, z_i) < r and
// dist(x, z_i) < r/2. The margin is the strict slack of the best witness:
//   max over witnesses of min_i min(r - dist(y_i,z_i),
//                                   2*(r/2 - dist(x,z_i))).
struct NagataReport {
  bool violation = false;
  std::size_t n = 0;
  double r = 0.0;
  std::size_t center = 0;
  std::vector<std::size_t> ys;
  std::vector<std::size_t> zs;
  double margin = 0.0;
};

NagataReport nagata_check(const FiniteMetricSpace& space, std::size_t n,
                          double r);

// The margin of nagata_check's best witness; 0 when the verdict is ok.
double nagata_margin(const FiniteMetricSpace& space, std::size_t n, double r);

// A maximal r-separated net and the cover by open balls of radius r
// around its points.
struct Cover {
  std::vector<std::size_t> net;
  double radius = 0.0;
};

// Greedy maximal r-separated subset in point-index order. The balls
// B(a, r), a in net, cover the space by maximality.
Cover net_cover(const FiniteMetricSpace& space, double r);

// The members of each ball of a cover.
std::vector<std::vector<std::size_t>> cover_elements(
    const FiniteMetricSpace& space, const Cover& cover);

struct MultiplicityResult {
  std::size_t count = 0;
  std::size_t point = 0;  // a point attaining the maximum
};

// Max over x of the number of cover elements meeting the open ball
// B(x, s). Elements must jointly cover the space.
MultiplicityResult cover_multiplicity(
    const FiniteMetricSpace& space,
    const std::vector<std::vector<std::size_t>>& elements, double s);
MultiplicityResult cover_multiplicity(const FiniteMetricSpace& space,
                                      const Cover& cover, double s);

}  // namespace metricgeo

#endif

#ifndef METRICGEO_METRIC_MAP_HPP
#define METRICGEO_METRIC_MAP_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "metricgeo/metric_space.hpp"

namespace metricgeo {

// A map between two finite metric spaces, given as an index assignment
// from domain points to codomain points, with cached fibers and image.
// Operations quantify over the image f(X), so the map need not be onto
// the whole codomain.
class MetricMap {
 public:
  static MetricMap create(FiniteMetricSpace domain, FiniteMetricSpace codomain,
                          std::vector<std::size_t> assignment);

  const FiniteMetricSpace& domain() const { return domain_; }
  const FiniteMetricSpace& codomain() const { return codomain_; }
  std::size_t apply(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  // Preimage of codomain point y (possibly empty), ascending.
  const std::vector<std::size_t>& fiber(std::size_t y) const {
    return fibers_[y];
  }
  // Codomain points with non-empty fiber, ascending.
  const std::vector<std::size_t>& image() const { return image_; }

  // Comparison helper scaled to the larger of the two spaces.
  Cmp cmp() const {
    return Cmp(std::max(domain_.max_distance(), codomain_.max_distance()));
  }

 private:
  MetricMap(FiniteMetricSpace domain, FiniteMetricSpace codomain,
            std::vector<std::size_t> assignment);

  FiniteMetricSpace domain_;
  FiniteMetricSpace codomain_;
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> fibers_;
  std::vector<std::size_t> image_;
};

// Minimal Lipschitz constant: max over x != x' of
// dist_Y(f(x), f(x')) / dist_X(x, x').
double lipschitz_constant(const MetricMap& map);

// Minimal openness constant: max over x and image points y != f(x) of
// dist_X(x, fiber(y)) / dist_Y(f(x), y); 0 when the image is a point.
double openness_constant(const MetricMap& map);

struct ParallelFiberCheck {
  bool parallel = true;
  // Counterexample when !parallel: no x' in fiber(y) realizes
  // dist_X(x, x') = dist_Y(f(x), y).
  std::size_t x = 0, y = 0;
};

// True iff every distance to a fiber is exactly realized and equals the
// codomain distance.
ParallelFiberCheck check_parallel_fibers(const MetricMap& map);

struct BrodskiyReport {
  bool ok = true;
  // First failing inclusion when !ok: the image point y lies in
  // B(f(x), radius/mu) but not in f(B(x, radius)).
  std::size_t x = 0, y = 0;
  double radius = 0.0;
};

// Ball-image condition with lambda = 1/mu: checks
// B(f(x), lambda*R) subset f(B(x, R)) for every x and every R in the
// grid, with open balls taken inside the image. mu must be at least the
// openness constant, otherwise the inclusion may legitimately fail and
// InvalidMu is raised.
BrodskiyReport check_brodskiy(const MetricMap& map, double mu,
                              std::span<const double> r_grid);
// Default grid: positive codomain distances plus their midpoints.
BrodskiyReport check_brodskiy(const MetricMap& map, double mu);

struct FiberSpaceCheck {
  double lambda = 0.0;
  double mu = 0.0;
  bool ok = true;
  // First failing image pair when !ok.
  std::size_t y1 = 0, y2 = 0;
};

// Verifies that y -> fiber(y) is a bi-Lipschitz equivalence between the
// image and the fiber space under Hausdorff distance:
//   dist_Y(y1,y2)/lambda <= d_H(fiber(y1), fiber(y2)) <= mu*dist_Y(y1,y2).
FiberSpaceCheck fiber_space_check(const MetricMap& map);

struct PullbackResult {
  std::vector<std::vector<std::size_t>> x_parts;
  double max_component_diameter = 0.0;
  double bound = 0.0;  // 4K + r
};

// Pulls a codomain part family back through a map with ultrametric
// fibers and openness constant at most 1. Requires every (lambda*r)-
// component of each y_part to have diameter at most K; then every
// r-component of each preimage must have diameter at most 4K + r, which
// is verified and reported. A bound failure on passing preconditions is
// impossible and raises TheoremViolation.
PullbackResult pullback_decomposition(
    const MetricMap& map, const std::vector<std::vector<std::size_t>>& y_parts,
    double r, double K);

struct FiberCoverResult {
  std::vector<std::vector<std::size_t>> a_parts;
  std::size_t base_point = 0;  // chosen image point y
  double max_component_diameter = 0.0;
  double bound = 0.0;  // c*r_x + (2c+2)*big_r
};

// Covers a subset A whose image has diameter below big_r by thickened
// fiber parts A_i = {x in A : dist_X(x, F_i) < big_r}, where F_0..F_k
// cover the fiber over the minimal-index image point of f(A) and each
// F_i has (2*big_r + r_x)-components bounded by c*(2*big_r + r_x).
// Verifies that the A_i cover A and that their r_x-components have
// diameter at most c*r_x + (2c+2)*big_r.
FiberCoverResult fiber_cover(const MetricMap& map,
                             std::span<const std::size_t> a, double r_x,
                             double big_r, double c,
                             const std::vector<std::vector<std::size_t>>& fiber_parts);

}  // namespace metricgeo

#endif

#ifndef METRICGEO_METRIC_SPACE_HPP
#define METRICGEO_METRIC_SPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metricgeo/tolerance.hpp"

namespace metricgeo {

// A finite metric space: point labels plus a validated symmetric
// distance matrix. Immutable after construction; every operation on it
// is a pure function, so instances are safe to share across threads.
class FiniteMetricSpace {
 public:
  // Checks all metric axioms and returns the space iff they hold:
  //   d[i][i] = 0, d[i][j] = d[j][i], d[i][j] > 0 for i != j,
  //   d[i][k] <= d[i][j] + d[j][k] + tol with tol = rel_tol() * max entry.
  // The stored matrix is the upper triangle mirrored, so symmetry is
  // exact; diagonal entries within tolerance of zero are stored as 0.
  static FiniteMetricSpace validate(std::vector<std::string> labels,
                                    const std::vector<std::vector<double>>& matrix);

  std::size_t size() const { return n_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  double dist(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double max_distance() const { return max_d_; }
  double min_positive_distance() const { return min_pos_d_; }

  // Comparison helper scaled to this space's largest distance.
  Cmp cmp() const { return Cmp(max_d_); }

  std::vector<std::vector<double>> matrix_rows() const;

  // max distance within a subset of points; 0 for singletons.
  double diameter(std::span<const std::size_t> pts) const;

  // min distance from point i to a non-empty subset.
  double dist_to_set(std::size_t i, std::span<const std::size_t> pts) const;

  // The induced space on a subset of points (indices must be distinct).
  FiniteMetricSpace subspace(std::span<const std::size_t> pts) const;

 private:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist,
                    std::size_t n);

  std::vector<std::string> labels_;
  std::vector<double> d_;  // row-major n x n
  std::size_t n_ = 0;
  double max_d_ = 0.0;
  double min_pos_d_ = 0.0;
};

// Role-tagged triple violating the strong triangle inequality:
// dist(x, z) > max(dist(x, y), dist(y, z)) with y the middle point.
struct StrongTriangleWitness {
  std::size_t x, y, z;
};

struct UltrametricCheck {
  bool ok;
  std::optional<StrongTriangleWitness> witness;  // set iff !ok
};

// True iff dist(x,z) <= max(dist(x,y), dist(y,z)) + tol for all triples.
UltrametricCheck is_ultrametric(const FiniteMetricSpace& space);

// Entrywise power dist^p for 0 < p <= 1. Subadditivity of t -> t^p keeps
// the triangle inequality, so the result always validates.
FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double p);

// Entrywise division by s > 0.
FiniteMetricSpace rescale(const FiniteMetricSpace& space, double s);

// Replaces every positive distance below 1 with 1; distances >= 1 are
// kept. The result is again a metric.
FiniteMetricSpace truncate_to_one(const FiniteMetricSpace& space);

// Hausdorff distance between two non-empty subsets: the larger of
// sup_a dist(a, B) and sup_b dist(b, A).
double hausdorff(const FiniteMetricSpace& space,
                 std::span<const std::size_t> a,
                 std::span<const std::size_t> b);

// Sorted distinct positive pairwise distances; with midpoints, the
// averages of consecutive grid values are interleaved. Used as the
// default scale grid for per-scale verdicts.
std::vector<double> distance_grid(const FiniteMetricSpace& space,
                                  bool midpoints = false);

}  // namespace metricgeo

#endif

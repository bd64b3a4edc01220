#ifndef METRICGEO_TESTS_GENERATORS_HPP
#define METRICGEO_TESTS_GENERATORS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "metricgeo/metric_map.hpp"
#include "metricgeo/metric_space.hpp"

namespace testsupport {

// Deterministic random source. Doubles are derived from raw engine
// output, not std distributions, so sequences are identical on every
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double unit =
        static_cast<double>(eng_() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + (hi - lo) * unit;
  }

  std::size_t index(std::size_t n) { return eng_() % n; }

  std::size_t between(std::size_t lo, std::size_t hi) {  // inclusive
    return lo + index(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

inline metricgeo::FiniteMetricSpace from_matrix(
    const std::vector<std::vector<double>>& matrix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    labels.push_back(std::to_string(i));
  return metricgeo::FiniteMetricSpace::validate(std::move(labels), matrix);
}

// Points on the real line with the absolute-value metric.
inline metricgeo::FiniteMetricSpace line_space(
    const std::vector<double>& coords) {
  std::vector<std::vector<double>> matrix(
      coords.size(), std::vector<double>(coords.size(), 0.0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      matrix[i][j] = std::abs(coords[i] - coords[j]);
  return from_matrix(matrix);
}

// Random points in R^3 under the Euclidean metric; triangle inequality
// holds by construction.
inline metricgeo::FiniteMetricSpace random_point_space(Rng& rng,
                                                       std::size_t n) {
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts)
    for (double& c : p) c = rng.uniform(0.0, 10.0);

  std::vector<std::string> labels;
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double d = pts[i][c] - pts[j][c];
        acc += d * d;
      }
      matrix[i][j] = matrix[j][i] = std::sqrt(acc);
    }
  return metricgeo::FiniteMetricSpace::validate(std::move(labels), matrix);
}

namespace detail {

// Random dendrogram: points in different children of a node sit at the
// node's height, and heights strictly decrease downward, which is
// exactly the strong triangle inequality.
inline void fill_hierarchy(Rng& rng, std::vector<std::size_t>& points,
                           std::size_t lo, std::size_t hi, double height,
                           std::vector<std::vector<double>>& matrix) {
  if (hi - lo <= 1) return;
  const std::size_t cut = lo + 1 + rng.index(hi - lo - 1);
  for (std::size_t i = lo; i < cut; ++i)
    for (std::size_t j = cut; j < hi; ++j)
      matrix[points[i]][points[j]] = matrix[points[j]][points[i]] = height;
  fill_hierarchy(rng, points, lo, cut, height * rng.uniform(0.25, 0.75),
                 matrix);
  fill_hierarchy(rng, points, cut, hi, height * rng.uniform(0.25, 0.75),
                 matrix);
}

}  // namespace detail

inline metricgeo::FiniteMetricSpace random_ultrametric(Rng& rng,
                                                       std::size_t n) {
  std::vector<std::size_t> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(points[i - 1], points[rng.index(i)]);

  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  detail::fill_hierarchy(rng, points, 0, n, rng.uniform(2.0, 10.0), matrix);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return metricgeo::FiniteMetricSpace::validate(std::move(labels), matrix);
}

// Breaks the strong triangle inequality of an ultrametric space by
// stretching a diameter-realizing pair, staying inside the ordinary
// triangle inequality.
inline metricgeo::FiniteMetricSpace perturb_ultrametric(
    Rng& rng, const metricgeo::FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  std::size_t pi = 0, pj = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.dist(i, j) > space.dist(pi, pj)) {
        pi = i;
        pj = j;
      }

  double room = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == pi || k == pj) continue;
    room = std::min(room, space.dist(pi, k) + space.dist(k, pj));
  }
  const double old = space.dist(pi, pj);
  const double stretched = old + (room - old) * rng.uniform(0.25, 0.75);

  std::vector<std::vector<double>> matrix = space.matrix_rows();
  matrix[pi][pj] = matrix[pj][pi] = stretched;
  return metricgeo::FiniteMetricSpace::validate(space.labels(), matrix);
}

// Random surjection: codomain indices 0..m-1 are hit by the first m
// domain points, the rest map anywhere.
inline metricgeo::MetricMap random_surjection(Rng& rng, std::size_t n_domain,
                                              std::size_t n_codomain) {
  metricgeo::FiniteMetricSpace domain = random_point_space(rng, n_domain);
  metricgeo::FiniteMetricSpace codomain = random_point_space(rng, n_codomain);
  std::vector<std::size_t> assignment(n_domain);
  for (std::size_t i = 0; i < n_domain; ++i)
    assignment[i] = i < n_codomain ? i : rng.index(n_codomain);
  return metricgeo::MetricMap::create(std::move(domain), std::move(codomain),
                                      std::move(assignment));
}

// The sum-metric product: point (i, j) has index i*|Y| + j.
inline metricgeo::FiniteMetricSpace product_sum_space(
    const metricgeo::FiniteMetricSpace& left,
    const metricgeo::FiniteMetricSpace& right) {
  const std::size_t nl = left.size(), nr = right.size();
  std::vector<std::string> labels;
  labels.reserve(nl * nr);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      labels.push_back(left.label(i) + "|" + right.label(j));

  std::vector<std::vector<double>> matrix(nl * nr,
                                          std::vector<double>(nl * nr, 0.0));
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t i2 = 0; i2 < nl; ++i2)
        for (std::size_t j2 = 0; j2 < nr; ++j2)
          matrix[i * nr + j][i2 * nr + j2] =
              left.dist(i, i2) + right.dist(j, j2);
  return metricgeo::FiniteMetricSpace::validate(std::move(labels), matrix);
}

// Projection of the sum-metric product onto the right factor.
inline metricgeo::MetricMap product_projection(
    const metricgeo::FiniteMetricSpace& left,
    const metricgeo::FiniteMetricSpace& right) {
  metricgeo::FiniteMetricSpace product = product_sum_space(left, right);
  std::vector<std::size_t> assignment(product.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      assignment[i * right.size() + j] = j;
  return metricgeo::MetricMap::create(std::move(product), right,
                                      std::move(assignment));
}

}  // namespace testsupport

#endif

#include "metricgeo/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metricgeo/errors.hpp"

namespace metricgeo {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> dist, std::size_t n)
    : labels_(std::move(labels)), d_(std::move(dist)), n_(n) {
  max_d_ = 0.0;
  min_pos_d_ = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      double v = d_[i * n_ + j];
      max_d_ = std::max(max_d_, v);
      if (v > 0.0 && (min_pos_d_ == 0.0 || v < min_pos_d_)) min_pos_d_ = v;
    }
}

FiniteMetricSpace FiniteMetricSpace::validate(
    std::vector<std::string> labels,
    const std::vector<std::vector<double>>& matrix) {
  const std::size_t n = labels.size();
  if (matrix.size() != n)
    throw BadShape("matrix has " + std::to_string(matrix.size()) +
                   " rows for " + std::to_string(n) + " labels");
  for (std::size_t i = 0; i < n; ++i)
    if (matrix[i].size() != n)
      throw BadShape("row " + std::to_string(i) + " has " +
                     std::to_string(matrix[i].size()) + " entries, expected " +
                     std::to_string(n));

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = std::max(scale, std::abs(matrix[i][j]));
  const Cmp cmp(scale);

  for (std::size_t i = 0; i < n; ++i) {
    if (!cmp.eq(matrix[i][i], 0.0)) throw NonzeroDiagonal(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cmp.lt(matrix[i][j], 0.0)) throw NegativeDistance(i, j);
      if (!cmp.eq(matrix[i][j], matrix[j][i])) throw AsymmetricMatrix(i, j);
      if (!cmp.gt(matrix[i][j], 0.0)) throw DuplicatePoint(i, j);
    }
  }

  // Store the upper triangle mirrored so symmetry is exact.
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i * n + j] = d[j * n + i] = matrix[i][j];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!cmp.le(d[i * n + k], d[i * n + j] + d[j * n + k]))
          throw TriangleViolation(i, j, k);

  return FiniteMetricSpace(std::move(labels), std::move(d), n);
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix_rows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = dist(i, j);
  return rows;
}

double FiniteMetricSpace::diameter(std::span<const std::size_t> pts) const {
  double best = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      best = std::max(best, dist(pts[a], pts[b]));
  return best;
}

double FiniteMetricSpace::dist_to_set(std::size_t i,
                                      std::span<const std::size_t> pts) const {
  if (pts.empty()) throw EmptySubset();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p : pts) best = std::min(best, dist(i, p));
  return best;
}

FiniteMetricSpace FiniteMetricSpace::subspace(
    std::span<const std::size_t> pts) const {
  if (pts.empty()) throw EmptySubset();
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (std::size_t p : pts) {
    if (p >= n_) throw BadIndex(p);
    labels.push_back(labels_[p]);
  }
  std::vector<std::vector<double>> rows(pts.size(),
                                        std::vector<double>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      rows[a][b] = dist(pts[a], pts[b]);
  return validate(std::move(labels), rows);
}

UltrametricCheck is_ultrametric(const FiniteMetricSpace& space) {
  const Cmp cmp = space.cmp();
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = x + 1; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        if (cmp.gt(space.dist(x, z),
                   std::max(space.dist(x, y), space.dist(y, z))))
          return {false, StrongTriangleWitness{x, y, z}};
      }
  return {true, std::nullopt};
}

namespace {

FiniteMetricSpace transformed(const FiniteMetricSpace& space,
                              double (*f)(double, double), double arg) {
  std::vector<std::vector<double>> rows = space.matrix_rows();
  for (auto& row : rows)
    for (double& v : row) v = f(v, arg);
  return FiniteMetricSpace::validate(space.labels(), rows);
}

}  // namespace

FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double p) {
  if (!(p > 0.0) || p > 1.0) throw InvalidExponent(p);
  if (p == 1.0) return space;
  return transformed(
      space, [](double v, double p) { return v == 0.0 ? 0.0 : std::pow(v, p); },
      p);
}

FiniteMetricSpace rescale(const FiniteMetricSpace& space, double s) {
  if (!(s > 0.0)) throw NonPositiveScale(s);
  return transformed(space, [](double v, double s) { return v / s; }, s);
}

FiniteMetricSpace truncate_to_one(const FiniteMetricSpace& space) {
  return transformed(
      space, [](double v, double) { return v > 0.0 && v < 1.0 ? 1.0 : v; },
      0.0);
}

double hausdorff(const FiniteMetricSpace& space, std::span<const std::size_t> a,
                 std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) throw EmptySubset();
  double best = 0.0;
  for (std::size_t p : a) best = std::max(best, space.dist_to_set(p, b));
  for (std::size_t q : b) best = std::max(best, space.dist_to_set(q, a));
  return best;
}

std::vector<double> distance_grid(const FiniteMetricSpace& space,
                                  bool midpoints) {
  std::vector<double> grid;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.dist(i, j) > 0.0) grid.push_back(space.dist(i, j));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (midpoints && grid.size() > 1) {
    std::vector<double> out;
    out.reserve(grid.size() * 2 - 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out.push_back(grid[i]);
      if (i + 1 < grid.size()) out.push_back((grid[i] + grid[i + 1]) / 2.0);
    }
    return out;
  }
  return grid;
}

}  // namespace metricgeo

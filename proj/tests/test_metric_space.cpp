#include "metricgeo/metric_space.hpp"

#include <algorithm>

#include <doctest.h>

#include "metricgeo/errors.hpp"
#include "support/generators.hpp"

using metricgeo::FiniteMetricSpace;
using testsupport::from_matrix;
using testsupport::line_space;
using testsupport::Rng;

TEST_CASE("validate accepts metric matrices") {
  FiniteMetricSpace two = from_matrix({{0, 1}, {1, 0}});
  CHECK(two.size() == 2);
  CHECK(two.dist(0, 1) == 1.0);

  FiniteMetricSpace tri = from_matrix({{0, 1, 1.5}, {1, 0, 1}, {1.5, 1, 0}});
  CHECK(tri.max_distance() == 1.5);
  CHECK(tri.min_positive_distance() == 1.0);
}

TEST_CASE("validate rejects broken matrices") {
  CHECK_THROWS_AS(from_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}),
                  metricgeo::TriangleViolation);
  CHECK_THROWS_AS(from_matrix({{0, 1}, {2, 0}}), metricgeo::AsymmetricMatrix);
  CHECK_THROWS_AS(from_matrix({{0, -1}, {-1, 0}}),
                  metricgeo::NegativeDistance);
  CHECK_THROWS_AS(from_matrix({{0, 0}, {0, 0}}), metricgeo::DuplicatePoint);
  CHECK_THROWS_AS(from_matrix({{0.5, 1}, {1, 0}}),
                  metricgeo::NonzeroDiagonal);
  CHECK_THROWS_AS(FiniteMetricSpace::validate({"a"}, {{0, 1}, {1, 0}}),
                  metricgeo::BadShape);
}

TEST_CASE("triangle violation names the offending triple") {
  try {
    from_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected TriangleViolation");
  } catch (const metricgeo::TriangleViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
}

TEST_CASE("is_ultrametric") {
  // Equilateral.
  CHECK(metricgeo::is_ultrametric(from_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}))
            .ok);

  // Two-level hierarchy: d(0,1) = d(2,3) = 1, cross pairs 2.
  FiniteMetricSpace hierarchy = from_matrix({{0, 1, 2, 2},
                                             {1, 0, 2, 2},
                                             {2, 2, 0, 1},
                                             {2, 2, 1, 0}});
  CHECK(metricgeo::is_ultrametric(hierarchy).ok);

  // (1, 1, 1.5): 1.5 > max(1, 1).
  auto check = metricgeo::is_ultrametric(
      from_matrix({{0, 1, 1.5}, {1, 0, 1}, {1.5, 1, 0}}));
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.witness.has_value());
  const auto& w = *check.witness;
  CHECK(w.x == 0);
  CHECK(w.y == 1);
  CHECK(w.z == 2);
}

TEST_CASE("snowflake") {
  FiniteMetricSpace space = line_space({0, 4});
  CHECK(metricgeo::snowflake(space, 0.5).dist(0, 1) == doctest::Approx(2.0));

  FiniteMetricSpace same = metricgeo::snowflake(space, 1.0);
  CHECK(same.dist(0, 1) == space.dist(0, 1));

  CHECK_THROWS_AS(metricgeo::snowflake(space, 0.0), metricgeo::InvalidExponent);
  CHECK_THROWS_AS(metricgeo::snowflake(space, 1.5), metricgeo::InvalidExponent);
}

TEST_CASE("snowflake keeps validity and ultrametricity across exponents") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteMetricSpace space = trial % 2 == 0
                                  ? testsupport::random_point_space(rng, 6)
                                  : testsupport::random_ultrametric(rng, 6);
    const bool ultra = metricgeo::is_ultrametric(space).ok;
    for (double p : {0.2, 0.5, 0.8, 1.0}) {
      FiniteMetricSpace flaked = metricgeo::snowflake(space, p);  // validates
      CHECK(metricgeo::is_ultrametric(flaked).ok == ultra);
    }
  }
}

TEST_CASE("rescale") {
  FiniteMetricSpace space = line_space({0, 6});
  CHECK(metricgeo::rescale(space, 3.0).dist(0, 1) == doctest::Approx(2.0));
  CHECK(metricgeo::rescale(space, 1.0).dist(0, 1) == 6.0);

  FiniteMetricSpace roundtrip =
      metricgeo::rescale(metricgeo::rescale(space, 2.0), 0.5);
  CHECK(roundtrip.dist(0, 1) == doctest::Approx(6.0));

  CHECK_THROWS_AS(metricgeo::rescale(space, 0.0), metricgeo::NonPositiveScale);
  CHECK_THROWS_AS(metricgeo::rescale(space, -2.0),
                  metricgeo::NonPositiveScale);
}

TEST_CASE("truncate_to_one") {
  FiniteMetricSpace big = line_space({0, 1, 3});
  FiniteMetricSpace same = metricgeo::truncate_to_one(big);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(same.dist(i, j) == big.dist(i, j));

  FiniteMetricSpace small = from_matrix(
      {{0, 0.2, 0.3}, {0.2, 0, 0.4}, {0.3, 0.4, 0}});
  FiniteMetricSpace lifted = metricgeo::truncate_to_one(small);
  CHECK(lifted.dist(0, 1) == 1.0);
  CHECK(lifted.dist(0, 2) == 1.0);
  CHECK(lifted.dist(1, 2) == 1.0);

  FiniteMetricSpace mixed =
      from_matrix({{0, 0.5, 2}, {0.5, 0, 2}, {2, 2, 0}});
  FiniteMetricSpace result = metricgeo::truncate_to_one(mixed);
  CHECK(result.dist(0, 1) == 1.0);
  CHECK(result.dist(0, 2) == 2.0);
  CHECK(result.dist(1, 2) == 2.0);
}

TEST_CASE("hausdorff distances") {
  FiniteMetricSpace line = line_space({0, 1, 3});
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(metricgeo::hausdorff(line, all, all) == 0.0);

  const std::vector<std::size_t> x{0}, y{2};
  CHECK(metricgeo::hausdorff(line, x, y) == 3.0);

  const std::vector<std::size_t> a{0}, b{1, 2};
  CHECK(metricgeo::hausdorff(line, a, b) == 3.0);

  CHECK_THROWS_AS(metricgeo::hausdorff(line, {}, b), metricgeo::EmptySubset);
}

TEST_CASE("hausdorff is a pseudometric on subsets") {
  Rng rng(23);
  FiniteMetricSpace space = testsupport::random_point_space(rng, 6);
  const std::size_t n = space.size();

  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    subsets.push_back(std::move(subset));
  }

  std::vector<std::vector<double>> dh(subsets.size(),
                                      std::vector<double>(subsets.size()));
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a; b < subsets.size(); ++b)
      dh[a][b] = dh[b][a] = metricgeo::hausdorff(space, subsets[a], subsets[b]);

  const double slack = 1e-12 * space.max_distance();
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    CHECK(dh[a][a] == 0.0);
    for (std::size_t b = 0; b < subsets.size(); ++b)
      for (std::size_t c = 0; c < subsets.size(); ++c)
        CHECK(dh[a][c] <= dh[a][b] + dh[b][c] + slack);
  }
}

TEST_CASE("transforms commute with relabeling") {
  Rng rng(41);
  FiniteMetricSpace space = testsupport::random_point_space(rng, 7);
  const std::size_t n = space.size();

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);

  auto permuted = [&](const FiniteMetricSpace& s) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = s.label(perm[i]);
      for (std::size_t j = 0; j < n; ++j) matrix[i][j] = s.dist(perm[i], perm[j]);
    }
    return FiniteMetricSpace::validate(std::move(labels), matrix);
  };

  FiniteMetricSpace truncated_then_permuted =
      permuted(metricgeo::truncate_to_one(metricgeo::rescale(space, 3.0)));
  FiniteMetricSpace permuted_then_truncated =
      metricgeo::truncate_to_one(metricgeo::rescale(permuted(space), 3.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(truncated_then_permuted.dist(i, j) ==
            permuted_then_truncated.dist(i, j));
}

TEST_CASE("subspace and distance grid") {
  FiniteMetricSpace line = line_space({0, 1, 3, 7});
  const std::vector<std::size_t> picks{0, 2, 3};
  FiniteMetricSpace sub = line.subspace(picks);
  CHECK(sub.size() == 3);
  CHECK(sub.dist(0, 1) == 3.0);
  CHECK(sub.dist(1, 2) == 4.0);

  auto grid = metricgeo::distance_grid(line);
  CHECK(grid == std::vector<double>{1, 2, 3, 4, 6, 7});
  auto with_mid = metricgeo::distance_grid(line, true);
  CHECK(with_mid.size() == 11);
  CHECK(with_mid[1] == doctest::Approx(1.5));
}

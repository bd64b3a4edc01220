#ifndef METRICGEO_TESTS_ORACLES_HPP
#define METRICGEO_TESTS_ORACLES_HPP

#include <vector>

#include "metricgeo/heisenberg.hpp"
#include "metricgeo/metric_space.hpp"

namespace testsupport {

// Straight-from-the-definition probe for the n-dimensional Nagata
// property at scale r: enumerate every center and every (n+2)-point
// configuration, demanding for each y an auxiliary z with
// dist(y, z) < r and dist(center, z) < r/2, and all y pairwise >= r
// apart. Kept deliberately naive; it is the reference the production
// search is measured against.
inline bool brute_nagata_violation(const metricgeo::FiniteMetricSpace& space,
                                   std::size_t n, double r) {
  const metricgeo::Cmp cmp = space.cmp();
  const std::size_t total = space.size();
  const std::size_t need = n + 2;
  if (total < need) return false;

  std::vector<char> has_z(total, 0);
  std::vector<std::size_t> chosen;

  for (std::size_t center = 0; center < total; ++center) {
    for (std::size_t y = 0; y < total; ++y) {
      has_z[y] = 0;
      for (std::size_t z = 0; z < total && !has_z[y]; ++z)
        if (cmp.lt(space.dist(y, z), r) &&
            cmp.lt(space.dist(center, z), r / 2.0))
          has_z[y] = 1;
    }

    chosen.clear();
    // Enumerate all (n+2)-subsets of admissible y's.
    auto extend = [&](auto&& self, std::size_t start) -> bool {
      if (chosen.size() == need) return true;
      for (std::size_t y = start; y < total; ++y) {
        if (!has_z[y]) continue;
        bool separated = true;
        for (std::size_t other : chosen)
          if (!cmp.ge(space.dist(other, y), r)) {
            separated = false;
            break;
          }
        if (!separated) continue;
        chosen.push_back(y);
        if (self(self, y + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(extend, 0)) return true;
  }
  return false;
}

// 3x3 unitriangular integer matrices: the independent multiplication
// route for the Heisenberg coordinate law.
struct Mat3 {
  metricgeo::heisenberg::Int m[3][3];
};

inline Mat3 mat_identity() {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = i == j ? 1 : 0;
  return out;
}

inline Mat3 mat_from_element(const metricgeo::heisenberg::Element& g) {
  Mat3 out = mat_identity();
  out.m[0][1] = g.x;
  out.m[0][2] = g.z;
  out.m[1][2] = g.y;
  return out;
}

inline metricgeo::heisenberg::Element element_from_mat(const Mat3& m) {
  return {m.m[0][1], m.m[1][2], m.m[0][2]};
}

inline Mat3 mat_multiply(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      metricgeo::heisenberg::Int acc = 0;
      for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      out.m[i][j] = acc;
    }
  return out;
}

inline metricgeo::heisenberg::Element evaluate_via_matrices(
    const metricgeo::heisenberg::Word& word) {
  namespace hb = metricgeo::heisenberg;
  Mat3 acc = mat_identity();
  for (hb::Letter l : word.letters) {
    // Letter matrices written out directly; only the i < j entries vary.
    Mat3 step = mat_identity();
    switch (l) {
      case hb::Letter::A: step.m[0][1] = 1; break;
      case hb::Letter::AInv: step.m[0][1] = -1; break;
      case hb::Letter::B: step.m[1][2] = 1; break;
      case hb::Letter::BInv: step.m[1][2] = -1; break;
      case hb::Letter::C: step.m[0][2] = 1; break;
      case hb::Letter::CInv: step.m[0][2] = -1; break;
    }
    acc = mat_multiply(acc, step);
  }
  return element_from_mat(acc);
}

}  // namespace testsupport

#endif

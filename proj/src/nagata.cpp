#include "metricgeo/nagata.hpp"

#include <algorithm>
#include <cmath>

#include "metricgeo/errors.hpp"
#include "metricgeo/union_find.hpp"

namespace metricgeo {

Components r_components(const FiniteMetricSpace& space,
                        std::span<const std::size_t> subset, double r) {
  if (subset.empty()) throw EmptySubset();
  if (!(r > 0.0)) throw NonPositiveScale(r);
  const Cmp cmp = space.cmp();
  const std::size_t k = subset.size();

  UnionFind uf(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (cmp.lt(space.dist(subset[a], subset[b]), r)) uf.merge(a, b);

  // Group by root, classes ordered by smallest member.
  std::vector<std::size_t> order(k);
  for (std::size_t a = 0; a < k; ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return subset[a] < subset[b]; });

  Components out;
  std::vector<std::ptrdiff_t> class_of_root(k, -1);
  for (std::size_t a : order) {
    std::size_t root = uf.find(a);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::ptrdiff_t>(out.members.size());
      out.members.emplace_back();
    }
    out.members[static_cast<std::size_t>(class_of_root[root])].push_back(
        subset[a]);
  }
  out.diameters.reserve(out.members.size());
  for (const auto& cls : out.members)
    out.diameters.push_back(space.diameter(cls));
  return out;
}

namespace {

void require_cover(std::size_t n,
                   const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<char> seen(n, 0);
  for (const auto& part : parts)
    for (std::size_t p : part) {
      if (p >= n) throw BadIndex(p);
      seen[p] = 1;
    }
  for (std::size_t p = 0; p < n; ++p)
    if (!seen[p]) throw NotACover(p);
}

}  // namespace

DecompositionCheck verify_decomposition(
    const FiniteMetricSpace& space,
    const std::vector<std::vector<std::size_t>>& parts, double r, double K) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  if (!(K > 0.0)) throw BadParameter("K must be positive");
  require_cover(space.size(), parts);
  const Cmp cmp = space.cmp();
  const double bound = K * r;

  DecompositionCheck check;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    Components comps = r_components(space, parts[i], r);
    for (std::size_t c = 0; c < comps.members.size(); ++c) {
      check.max_component_diameter =
          std::max(check.max_component_diameter, comps.diameters[c]);
      if (check.ok && !cmp.le(comps.diameters[c], bound)) {
        check.ok = false;
        check.part = i;
        check.component = comps.members[c];
        check.diameter = comps.diameters[c];
      }
    }
  }
  return check;
}

namespace {

// Backtracking search for a decomposition into exactly <= target parts,
// assigning points in index order with the canonical-form restriction
// that part q can only be opened after parts 0..q-1. Adding a point can
// only merge components and grow diameters, so a partial violation
// prunes the whole subtree.
class PartitionSearch {
 public:
  PartitionSearch(const FiniteMetricSpace& space, double r, double K,
                  std::size_t target)
      : space_(space), cmp_(space.cmp()), r_(r), bound_(K * r),
        target_(target) {}

  bool run(std::vector<std::vector<std::size_t>>& result) {
    parts_.clear();
    if (assign(0)) {
      result = parts_;
      return true;
    }
    return false;
  }

 private:
  bool assign(std::size_t point) {
    if (point == space_.size()) return true;
    const std::size_t open = parts_.size();
    const std::size_t limit = std::min(open + 1, target_);
    for (std::size_t q = 0; q < limit; ++q) {
      if (q == open) parts_.emplace_back();
      parts_[q].push_back(point);
      if (part_ok(q) && assign(point + 1)) return true;
      parts_[q].pop_back();
      if (q == open) parts_.pop_back();
    }
    return false;
  }

  bool part_ok(std::size_t q) const {
    Components comps = r_components(space_, parts_[q], r_);
    for (double d : comps.diameters)
      if (!cmp_.le(d, bound_)) return false;
    return true;
  }

  const FiniteMetricSpace& space_;
  Cmp cmp_;
  double r_;
  double bound_;
  std::size_t target_;
  std::vector<std::vector<std::size_t>> parts_;
};

}  // namespace

MinPartsResult min_parts_exact(const FiniteMetricSpace& space, double r,
                               double K, std::size_t max_points,
                               std::size_t max_parts) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  if (!(K > 0.0)) throw BadParameter("K must be positive");
  if (space.size() > max_points)
    throw TooLarge("space has " + std::to_string(space.size()) +
                   " points, above the exhaustive limit of " +
                   std::to_string(max_points));

  MinPartsResult result;
  result.decomposition.r = r;
  result.decomposition.bound = K * r;
  if (space.size() == 0) {
    result.m = 0;
    result.decomposition.parts = {{}};
    return result;
  }

  const std::size_t part_cap = std::min(max_parts, space.size());
  for (std::size_t target = 1; target <= part_cap; ++target) {
    PartitionSearch search(space, r, K, target);
    if (search.run(result.decomposition.parts)) {
      result.m = target - 1;
      return result;
    }
  }
  throw TooLarge("no decomposition within the exhaustive part budget of " +
                 std::to_string(max_parts));
}

Decomposition greedy_parts(const FiniteMetricSpace& space, double r,
                           double K) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  if (!(K > 0.0)) throw BadParameter("K must be positive");
  const Cmp cmp = space.cmp();
  const double bound = K * r;

  Decomposition out;
  out.r = r;
  out.bound = bound;
  if (space.size() == 0) {
    out.parts = {{}};
    return out;
  }

  auto fits = [&](std::vector<std::size_t>& part, std::size_t point) {
    part.push_back(point);
    Components comps = r_components(space, part, r);
    part.pop_back();
    for (double d : comps.diameters)
      if (!cmp.le(d, bound)) return false;
    return true;
  };

  for (std::size_t point = 0; point < space.size(); ++point) {
    bool placed = false;
    for (auto& part : out.parts)
      if (fits(part, point)) {
        part.push_back(point);
        placed = true;
        break;
      }
    if (!placed) out.parts.push_back({point});
  }
  return out;
}

namespace {

// Lexicographically-first clique of the given size in the graph on
// vertices 0..m-1 restricted to `alive`, scanning in ascending order.
bool find_clique(const std::vector<std::vector<char>>& adj,
                 const std::vector<char>& alive, std::size_t need,
                 std::vector<std::size_t>& clique, std::size_t start) {
  if (clique.size() == need) return true;
  const std::size_t m = alive.size();
  for (std::size_t v = start; v < m; ++v) {
    if (!alive[v]) continue;
    if (m - v < need - clique.size()) break;
    bool compatible = true;
    for (std::size_t u : clique)
      if (!adj[u][v]) {
        compatible = false;
        break;
      }
    if (!compatible) continue;
    clique.push_back(v);
    if (find_clique(adj, alive, need, clique, v + 1)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

NagataReport nagata_check(const FiniteMetricSpace& space, std::size_t n,
                          double r) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  const Cmp cmp = space.cmp();
  const std::size_t total = space.size();
  const std::size_t need = n + 2;

  NagataReport report;
  report.n = n;
  report.r = r;
  if (total < need) return report;

  double best_margin = -1.0;

  for (std::size_t center = 0; center < total; ++center) {
    // Admissible auxiliaries near the center.
    std::vector<std::size_t> zs;
    for (std::size_t z = 0; z < total; ++z)
      if (cmp.lt(space.dist(center, z), r / 2.0)) zs.push_back(z);
    if (zs.empty()) continue;

    // Candidate y's: those with an admissible z; keep the z maximizing
    // the strict slack min(r - d(y,z), 2*(r/2 - d(center,z))).
    std::vector<std::size_t> cand, cand_z;
    std::vector<double> cand_val;
    for (std::size_t y = 0; y < total; ++y) {
      double best_val = -1.0;
      std::size_t best_z = 0;
      for (std::size_t z : zs)
        if (cmp.lt(space.dist(y, z), r)) {
          double val = std::min(r - space.dist(y, z),
                                2.0 * (r / 2.0 - space.dist(center, z)));
          if (val > best_val) {
            best_val = val;
            best_z = z;
          }
        }
      if (best_val >= 0.0) {
        cand.push_back(y);
        cand_z.push_back(best_z);
        cand_val.push_back(best_val);
      }
    }
    if (cand.size() < need) continue;

    const std::size_t m = cand.size();
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (cmp.ge(space.dist(cand[a], cand[b]), r)) adj[a][b] = adj[b][a] = 1;

    // Maximize the min slack over the clique: scan candidate slack
    // values from high to low and take the first that still admits an
    // (n+2)-clique among candidates at or above it.
    std::vector<double> thresholds = cand_val;
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    for (double threshold : thresholds) {
      if (threshold <= best_margin) break;
      std::vector<char> alive(m, 0);
      for (std::size_t a = 0; a < m; ++a)
        if (cand_val[a] >= threshold) alive[a] = 1;
      std::vector<std::size_t> clique;
      if (!find_clique(adj, alive, need, clique, 0)) continue;
      best_margin = threshold;
      report.violation = true;
      report.center = center;
      report.ys.clear();
      report.zs.clear();
      for (std::size_t v : clique) {
        report.ys.push_back(cand[v]);
        report.zs.push_back(cand_z[v]);
      }
      report.margin = threshold;
      break;
    }
  }
  return report;
}

double nagata_margin(const FiniteMetricSpace& space, std::size_t n, double r) {
  return nagata_check(space, n, r).margin;
}

Cover net_cover(const FiniteMetricSpace& space, double r) {
  if (!(r > 0.0)) throw NonPositiveScale(r);
  const Cmp cmp = space.cmp();
  Cover cover;
  cover.radius = r;
  for (std::size_t p = 0; p < space.size(); ++p) {
    bool separated = true;
    for (std::size_t a : cover.net)
      if (!cmp.ge(space.dist(p, a), r)) {
        separated = false;
        break;
      }
    if (separated) cover.net.push_back(p);
  }
  return cover;
}

std::vector<std::vector<std::size_t>> cover_elements(
    const FiniteMetricSpace& space, const Cover& cover) {
  const Cmp cmp = space.cmp();
  std::vector<std::vector<std::size_t>> elements;
  elements.reserve(cover.net.size());
  for (std::size_t a : cover.net) {
    std::vector<std::size_t> ball;
    for (std::size_t z = 0; z < space.size(); ++z)
      if (cmp.lt(space.dist(a, z), cover.radius)) ball.push_back(z);
    elements.push_back(std::move(ball));
  }
  return elements;
}

MultiplicityResult cover_multiplicity(
    const FiniteMetricSpace& space,
    const std::vector<std::vector<std::size_t>>& elements, double s) {
  if (!(s > 0.0)) throw NonPositiveScale(s);
  require_cover(space.size(), elements);
  const Cmp cmp = space.cmp();

  MultiplicityResult best;
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::size_t count = 0;
    for (const auto& element : elements) {
      for (std::size_t u : element)
        if (cmp.lt(space.dist(x, u), s)) {
          ++count;
          break;
        }
    }
    if (count > best.count) {
      best.count = count;
      best.point = x;
    }
  }
  return best;
}

MultiplicityResult cover_multiplicity(const FiniteMetricSpace& space,
                                      const Cover& cover, double s) {
  return cover_multiplicity(space, cover_elements(space, cover), s);
}

}  // namespace metricgeo

#include "metricgeo/heisenberg.hpp"

#include <cmath>
#include <cstdlib>

#include "metricgeo/errors.hpp"

namespace metricgeo::heisenberg {

Element identity() { return {0, 0, 0}; }
Element gen_a() { return {1, 0, 0}; }
Element gen_b() { return {0, 1, 0}; }
Element gen_c() { return {0, 0, 1}; }

Element multiply(const Element& g, const Element& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

Element inverse(const Element& g) {
  return {-g.x, -g.y, g.x * g.y - g.z};
}

Letter inverse_letter(Letter l) {
  switch (l) {
    case Letter::A: return Letter::AInv;
    case Letter::AInv: return Letter::A;
    case Letter::B: return Letter::BInv;
    case Letter::BInv: return Letter::B;
    case Letter::C: return Letter::CInv;
    case Letter::CInv: return Letter::C;
  }
  std::abort();
}

Word formal_inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(inverse_letter(*it));
  return out;
}

std::string to_string(const Word& w) {
  static constexpr char kNames[] = {'a', 'A', 'b', 'B', 'c', 'C'};
  std::string out;
  out.reserve(w.letters.size());
  for (Letter l : w.letters) out.push_back(kNames[static_cast<int>(l)]);
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  out.letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'a': out.letters.push_back(Letter::A); break;
      case 'A': out.letters.push_back(Letter::AInv); break;
      case 'b': out.letters.push_back(Letter::B); break;
      case 'B': out.letters.push_back(Letter::BInv); break;
      case 'c': out.letters.push_back(Letter::C); break;
      case 'C': out.letters.push_back(Letter::CInv); break;
      default:
        throw BadParameter(std::string("unknown word letter '") + ch + "'");
    }
  }
  return out;
}

Element evaluate(const Word& w) {
  // The group law specialized to right-multiplication by single
  // generators; identical to folding multiply() over the letters.
  Element g = identity();
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::A: ++g.x; break;
      case Letter::AInv: --g.x; break;
      case Letter::B: ++g.y; g.z += g.x; break;
      case Letter::BInv: --g.y; g.z -= g.x; break;
      case Letter::C: ++g.z; break;
      case Letter::CInv: --g.z; break;
    }
  }
  return g;
}

namespace {

void append_power(Word& w, Letter positive, long long exponent) {
  Letter l = exponent >= 0 ? positive : inverse_letter(positive);
  long long count = std::llabs(exponent);
  for (long long i = 0; i < count; ++i) w.letters.push_back(l);
}

void append_commutator(Word& w, long long u, long long v) {
  append_power(w, Letter::A, u);
  append_power(w, Letter::B, v);
  append_power(w, Letter::A, -u);
  append_power(w, Letter::B, -v);
}

void append_central_word(Word& w, long long k) {
  if (k == 0) return;
  if (k < 0) {
    Word positive;
    append_central_word(positive, -k);
    Word inv = formal_inverse(positive);
    w.letters.insert(w.letters.end(), inv.letters.begin(), inv.letters.end());
    return;
  }
  if (k <= 3) {
    for (long long i = 0; i < k; ++i) append_commutator(w, 1, 1);
    return;
  }
  const long long n = static_cast<long long>(std::sqrt(static_cast<double>(k)));
  // Guard the floor against rounding at perfect-square boundaries.
  long long root = n;
  while (root * root > k) --root;
  while ((root + 1) * (root + 1) <= k) ++root;

  if (root * root == k) {
    append_commutator(w, root, root);
  } else if (k <= root * root + root) {
    append_commutator(w, root, root);
    append_central_word(w, k - root * root);
  } else {
    append_commutator(w, root + 1, root + 1);
    append_central_word(w, k - (root + 1) * (root + 1));
  }
}

}  // namespace

Word commutator_power(long long u, long long v) {
  Word w;
  w.letters.reserve(2 * (std::llabs(u) + std::llabs(v)));
  append_commutator(w, u, v);
  return w;
}

Word central_word(long long k, double K) {
  if (K < kCentralWordThreshold) throw KTooSmall(K, kCentralWordThreshold);
  Word w;
  append_central_word(w, k);
  return w;
}

ConstantScan nagata_constant(long long scan_limit) {
  auto term = [](long long n) {
    const double nd = static_cast<double>(n);
    return 4.0 * (nd + 1.0) / (nd - std::sqrt(nd));
  };

  ConstantScan scan;
  scan.value = 12.0 + 6.0 * std::sqrt(2.0);
  scan.argmax = 2;
  scan.strictly_decreasing = true;

  double best = term(2);
  double previous = best;
  for (long long n = 3; n <= scan_limit; ++n) {
    const double current = term(n);
    if (!(current < previous)) scan.strictly_decreasing = false;
    if (current > best) {
      best = current;
      scan.argmax = n;
    }
    previous = current;
  }
  return scan;
}

BallTable::BallTable(int radius, GeneratorSet gens)
    : radius_(radius), gens_(gens) {}

std::uint64_t BallTable::pack(long long x, long long y, long long z) const {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(radius_) + 1;
  const std::uint64_t zspan =
      2 * static_cast<std::uint64_t>(radius_) * radius_ + 1;
  const std::uint64_t ux = static_cast<std::uint64_t>(x + radius_);
  const std::uint64_t uy = static_cast<std::uint64_t>(y + radius_);
  const std::uint64_t uz =
      static_cast<std::uint64_t>(z + static_cast<long long>(radius_) * radius_);
  (void)zspan;
  return (uz * span + uy) * span + ux;
}

std::optional<int> BallTable::length(long long x, long long y,
                                     long long z) const {
  const long long r = radius_;
  if (x < -r || x > r || y < -r || y > r || z < -r * r || z > r * r)
    return std::nullopt;
  auto it = lengths_.find(pack(x, y, z));
  if (it == lengths_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BallTable::length(const Element& g) const {
  const long long limit = static_cast<long long>(radius_) * radius_ + 1;
  if (g.x < -limit || g.x > limit || g.y < -limit || g.y > limit ||
      g.z < -limit || g.z > limit)
    return std::nullopt;
  return length(g.x.convert_to<long long>(), g.y.convert_to<long long>(),
                g.z.convert_to<long long>());
}

BallTable bfs_word_lengths(int radius, GeneratorSet gens, int budget) {
  if (radius < 0) throw BadParameter("radius must be non-negative");
  if (radius > budget)
    throw BudgetExceeded("radius " + std::to_string(radius) +
                         " exceeds the memory budget " +
                         std::to_string(budget));

  BallTable table(radius, gens);

  struct State {
    int x, y;
    long long z;
  };
  std::vector<State> frontier{{0, 0, 0}};
  table.lengths_.emplace(table.pack(0, 0, 0), 0);

  for (int level = 1; level <= radius; ++level) {
    std::vector<State> next;
    next.reserve(frontier.size() * 2);
    for (const State& s : frontier) {
      // Right-multiplication by each generator; z shifts by x on b-steps.
      const State neighbors[6] = {
          {s.x + 1, s.y, s.z},         {s.x - 1, s.y, s.z},
          {s.x, s.y + 1, s.z + s.x},   {s.x, s.y - 1, s.z - s.x},
          {s.x, s.y, s.z + 1},         {s.x, s.y, s.z - 1},
      };
      const int count = gens == GeneratorSet::ABC ? 6 : 4;
      for (int i = 0; i < count; ++i) {
        const State& t = neighbors[i];
        if (std::abs(t.x) > radius || std::abs(t.y) > radius ||
            t.z > static_cast<long long>(radius) * radius ||
            t.z < -static_cast<long long>(radius) * radius)
          continue;
        auto [it, inserted] =
            table.lengths_.emplace(table.pack(t.x, t.y, t.z), level);
        if (inserted) next.push_back(t);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return table;
}

DistanceProfile central_distance_profile(int radius, int budget) {
  BallTable table = bfs_word_lengths(radius, GeneratorSet::AB, budget);

  DistanceProfile profile;
  profile.radius = radius;
  const long long zmax = static_cast<long long>(radius) * radius;
  for (long long k = -zmax; k <= zmax; ++k) {
    auto len = table.length(0, 0, k);
    if (!len) continue;

    ProfileRow row;
    row.k = k;
    row.exact_length = *len;
    Word w = central_word(k);
    row.central_word_length = static_cast<long long>(w.length());
    const long long abs_k = std::llabs(k);
    row.lower_bound = 2.0 * std::sqrt(static_cast<double>(abs_k));
    row.ratio = k == 0 ? 0.0
                       : static_cast<double>(row.exact_length) /
                             std::sqrt(static_cast<double>(abs_k));

    // 2*sqrt(|k|) <= exact <= word length <= 21*sqrt(|k|), integer-exact.
    const long long exact = row.exact_length;
    const long long upper = row.central_word_length;
    if (exact * exact < 4 * abs_k || upper < exact ||
        upper * upper > 441 * abs_k)
      throw TheoremViolation("central length chain fails at k = " +
                             std::to_string(k));
    profile.rows.push_back(row);
  }
  return profile;
}

}  // namespace metricgeo::heisenberg

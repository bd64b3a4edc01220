#ifndef METRICGEO_HEISENBERG_HPP
#define METRICGEO_HEISENBERG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace metricgeo::heisenberg {

using Int = boost::multiprecision::cpp_int;

// An element of the discrete Heisenberg group: the upper unitriangular
// matrix [[1, x, z], [0, 1, y], [0, 0, 1]], stored by its coordinates.
// Multiplication: (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+x*y').
struct Element {
  Int x, y, z;

  bool operator==(const Element&) const = default;
};

Element identity();
Element gen_a();  // (1,0,0)
Element gen_b();  // (0,1,0)
Element gen_c();  // (0,0,1), the commutator of a and b

Element multiply(const Element& g, const Element& h);
Element inverse(const Element& g);

// Letters of words over the standard generators; capitals are inverses
// in the serialized form {a, A, b, B, c, C}.
enum class Letter : unsigned char { A, AInv, B, BInv, C, CInv };

struct Word {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
};

Letter inverse_letter(Letter l);
Word formal_inverse(const Word& w);
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

// Ordered product of the word's letters, starting from the identity.
Element evaluate(const Word& w);

// The word a^u b^v a^-u b^-v of length 2|u| + 2|v|; evaluates to
// (0, 0, u*v).
Word commutator_power(long long u, long long v);

// Threshold below which the length guarantee of central_word cannot be
// promised: sup over n >= 2 of 4(n+1)/(n - sqrt(n)) = 12 + 6*sqrt(2).
inline constexpr double kCentralWordThreshold = 20.485281374238570;

// A word over a and b (no c letters) that evaluates to (0,0,k) with
// length at most K*sqrt(|k|). Recursion on k > 3 with n = floor(sqrt(k)):
// exact squares give a^n b^n a^-n b^-n; k <= n^2 + n peels n^2 off;
// otherwise (n+1)^2 is overshot and the remainder is inverted. Raises
// KTooSmall below the threshold constant.
Word central_word(long long k, double K = 21.0);

struct ConstantScan {
  double value = 0.0;             // 12 + 6*sqrt(2)
  long long argmax = 0;           // scan maximum, expected at n = 2
  bool strictly_decreasing = false;
};

// Evaluates 4(n+1)/(n - sqrt(n)) over integers n in [2, scan_limit],
// certifying the maximum sits at n = 2 and the sequence decreases
// strictly across the scanned range.
ConstantScan nagata_constant(long long scan_limit = 1'000'000);

enum class GeneratorSet { AB, ABC };

inline constexpr int kDefaultBfsBudget = 40;

// Exact minimal word lengths for every element within the given radius
// of the identity in the Cayley graph, computed by level-synchronous
// breadth-first search. Coordinates inside the ball satisfy |x|,|y| <=
// radius and |z| <= radius^2, which bounds the key packing.
class BallTable {
 public:
  BallTable(int radius, GeneratorSet gens);

  int radius() const { return radius_; }
  GeneratorSet generators() const { return gens_; }
  std::size_t size() const { return lengths_.size(); }

  std::optional<int> length(long long x, long long y, long long z) const;
  std::optional<int> length(const Element& g) const;

 private:
  friend BallTable bfs_word_lengths(int, GeneratorSet, int);

  std::uint64_t pack(long long x, long long y, long long z) const;

  int radius_;
  GeneratorSet gens_;
  std::unordered_map<std::uint64_t, int> lengths_;
};

BallTable bfs_word_lengths(int radius, GeneratorSet gens,
                           int budget = kDefaultBfsBudget);

// One row per central element c^k inside the {a,b}-ball: the exact
// minimal length, the constructive upper-bound word length, and the
// lower bound 2*sqrt(|k|). ratio is exact_length / sqrt(|k|) (0 at k=0).
struct ProfileRow {
  long long k = 0;
  int exact_length = 0;
  long long central_word_length = 0;
  double lower_bound = 0.0;
  double ratio = 0.0;
};

struct DistanceProfile {
  int radius = 0;
  std::vector<ProfileRow> rows;
};

// Profiles every central element in the radius-`radius` ball over
// {a, b} and verifies the chain
//   2*sqrt(|k|) <= exact <= central_word length <= 21*sqrt(|k|)
// with exact integer comparisons; a failed row raises TheoremViolation.
DistanceProfile central_distance_profile(int radius,
                                         int budget = kDefaultBfsBudget);

}  // namespace metricgeo::heisenberg

#endif

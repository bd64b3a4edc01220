#ifndef METRICGEO_ERRORS_HPP
#define METRICGEO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metricgeo {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- metric space construction ----

struct BadShape : Error {
  explicit BadShape(const std::string& what) : Error(what) {}
};

struct AsymmetricMatrix : Error {
  std::size_t i, j;
  AsymmetricMatrix(std::size_t i, std::size_t j)
      : Error("asymmetric matrix at (" + std::to_string(i) + "," +
              std::to_string(j) + ")"),
        i(i), j(j) {}
};

struct NegativeDistance : Error {
  std::size_t i, j;
  NegativeDistance(std::size_t i, std::size_t j)
      : Error("negative distance at (" + std::to_string(i) + "," +
              std::to_string(j) + ")"),
        i(i), j(j) {}
};

struct NonzeroDiagonal : Error {
  std::size_t i;
  explicit NonzeroDiagonal(std::size_t i)
      : Error("nonzero diagonal entry at index " + std::to_string(i)), i(i) {}
};

struct DuplicatePoint : Error {
  std::size_t i, j;
  DuplicatePoint(std::size_t i, std::size_t j)
      : Error("points " + std::to_string(i) + " and " + std::to_string(j) +
              " are at distance zero"),
        i(i), j(j) {}
};

struct TriangleViolation : Error {
  std::size_t i, j, k;
  TriangleViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("triangle inequality fails for (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
};

// ---- transforms and subset operations ----

struct InvalidExponent : Error {
  explicit InvalidExponent(double p)
      : Error("snowflake exponent must lie in (0,1], got " +
              std::to_string(p)) {}
};

struct NonPositiveScale : Error {
  explicit NonPositiveScale(double s)
      : Error("scale must be positive, got " + std::to_string(s)) {}
};

struct EmptySubset : Error {
  EmptySubset() : Error("subset must be non-empty") {}
};

struct BadIndex : Error {
  std::size_t index;
  explicit BadIndex(std::size_t index)
      : Error("point index " + std::to_string(index) + " out of range"),
        index(index) {}
};

// ---- decomposition / cover analysis ----

struct NotACover : Error {
  std::size_t point;
  explicit NotACover(std::size_t point)
      : Error("point " + std::to_string(point) + " is not covered"),
        point(point) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what) {}
};

// ---- map analysis ----

struct BadAssignment : Error {
  explicit BadAssignment(const std::string& what) : Error(what) {}
};

struct InvalidMu : Error {
  double mu, minimum;
  InvalidMu(double mu, double minimum)
      : Error("mu = " + std::to_string(mu) +
              " is below the openness constant " + std::to_string(minimum)),
        mu(mu), minimum(minimum) {}
};

struct DegenerateMap : Error {
  DegenerateMap()
      : Error("map has Lipschitz constant 0 but more than one image point") {}
};

struct NonUltrametricFiber : Error {
  std::size_t y;
  explicit NonUltrametricFiber(std::size_t y)
      : Error("fiber over codomain point " + std::to_string(y) +
              " is not ultrametric"),
        y(y) {}
};

struct MuExceedsOne : Error {
  double mu;
  explicit MuExceedsOne(double mu)
      : Error("openness constant " + std::to_string(mu) +
              " exceeds 1; rescale the codomain first"),
        mu(mu) {}
};

struct PartHypothesisFails : Error {
  std::size_t part;
  double diameter;
  PartHypothesisFails(std::size_t part, double diameter)
      : Error("part " + std::to_string(part) +
              " has a component of diameter " + std::to_string(diameter) +
              " above the hypothesis bound"),
        part(part), diameter(diameter) {}
};

struct ImageTooLarge : Error {
  double diameter, bound;
  ImageTooLarge(double diameter, double bound)
      : Error("image of the subset has diameter " + std::to_string(diameter) +
              ", not below " + std::to_string(bound)),
        diameter(diameter), bound(bound) {}
};

struct FiberPartsHypothesisFails : Error {
  explicit FiberPartsHypothesisFails(const std::string& what) : Error(what) {}
};

struct NotCovered : Error {
  std::size_t point;
  explicit NotCovered(std::size_t point)
      : Error("point " + std::to_string(point) +
              " lies in no constructed part (openness constant above 1?)"),
        point(point) {}
};

// A verified construction came out false on inputs that pass its
// preconditions. This cannot happen for correct inputs and is reported
// as a hard failure rather than a soft verdict.
struct TheoremViolation : Error {
  explicit TheoremViolation(const std::string& what) : Error(what) {}
};

// ---- word geometry ----

struct KTooSmall : Error {
  double k, threshold;
  KTooSmall(double k, double threshold)
      : Error("constant K = " + std::to_string(k) + " is below the threshold " +
              std::to_string(threshold)),
        k(k), threshold(threshold) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// ---- I/O ----

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace metricgeo

#endif

#ifndef METRICGEO_TOLERANCE_HPP
#define METRICGEO_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace metricgeo {

// Relative tolerance shared by every comparison in the library.
// Defaults to 1e-9; the NAGATA_TOL environment variable overrides it.
double rel_tol();
void set_rel_tol(double value);

// Comparisons with a fixed absolute slack eps = rel_tol() * scale,
// where scale is a characteristic magnitude (usually the largest
// distance of the space under consideration).
//
// lt/ge and gt/le are exact complements: for any a, b exactly one of
// lt(a,b) and ge(a,b) holds, so verdicts built from them cannot flap.
class Cmp {
 public:
  explicit Cmp(double scale) : eps_(rel_tol() * std::max(scale, 0.0)) {}

  double eps() const { return eps_; }

  bool lt(double a, double b) const { return a < b - eps_; }
  bool gt(double a, double b) const { return b < a - eps_; }
  bool le(double a, double b) const { return !gt(a, b); }
  bool ge(double a, double b) const { return !lt(a, b); }
  bool eq(double a, double b) const { return le(a, b) && ge(a, b); }

 private:
  double eps_;
};

}  // namespace metricgeo

#endif

#include "metricgeo/tolerance.hpp"

#include <cstdlib>

namespace metricgeo {

namespace {

double initial_rel_tol() {
  if (const char* env = std::getenv("NAGATA_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}

double& rel_tol_storage() {
  static double value = initial_rel_tol();
  return value;
}

}  // namespace

double rel_tol() { return rel_tol_storage(); }

void set_rel_tol(double value) { rel_tol_storage() = value; }

}  // namespace metricgeo

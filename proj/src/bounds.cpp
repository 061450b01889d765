#include "twistcalc/bounds.hpp"

#include <cmath>
#include <string>

#include "twistcalc/errors.hpp"

namespace twistcalc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

double wolpert_factor(double d) {
  require(std::isfinite(d) && d >= 0, "wolpert_factor: d must be a finite non-negative number");
  return std::exp(2 * d);
}

double penner_bound(long h) {
  require(h >= 2, "penner_bound: h must be at least 2");
  return std::log(2.0) / (12.0 * static_cast<double>(h) - 12.0);
}

double eppa_systole_bound(long h) {
  require(h >= 2, "eppa_systole_bound: h must be at least 2");
  return 2 * penner_bound(h);
}

double lmax(long h, long mu) {
  require(h >= 2, "lmax: h must be at least 2");
  require(mu >= 1, "lmax: mu must be positive");
  return 63.0 * static_cast<double>(h - 1) * (1.0 + std::exp(16.0 * static_cast<double>(mu)));
}

double collar_partner(double l) {
  require(std::isfinite(l) && l > 0, "collar_partner: l must be positive");
  return 2 * std::asinh(1 / std::sinh(l / 2));
}

std::pair<double, double> k5_constants(double k1, long mu1, long mu2) {
  require(std::isfinite(k1) && k1 > 0, "k5_constants: K1 must be positive");
  require(mu1 >= 1 && mu2 >= 1, "k5_constants: mu1 and mu2 must be positive");
  const auto one = [k1](long a, long b) {
    return 0.5 * std::log(k1 * static_cast<double>(a) / std::asinh(1 / std::sinh(k1 * static_cast<double>(b))));
  };
  return {one(mu1, mu2), one(mu2, mu1)};
}

std::pair<double, double> cusp_distance_bracket(double eps1, double eps2) {
  require(eps1 > 0 && eps1 <= 2 && eps2 > 0 && eps2 <= 2, "cusp_distance_bracket: eps must lie in (0, 2]");
  const double r = std::fabs(std::log(eps1 / eps2));
  return {std::max(r - 4, 0.0), r + 4};
}

}  // namespace twistcalc

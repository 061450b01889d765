#pragma once

// Upper half-plane model: points, geodesics, distance, and a Monte-Carlo
// check of the separation lemma for a hyperbolic translation.

#include <array>
#include <cstdint>
#include <variant>

#include "twistcalc/verify.hpp"

namespace twistcalc {

struct HPoint {
  double x = 0;
  double y = 1;

  /// Throws DomainError unless y > 0 and both coordinates are finite.
  static HPoint make(double x, double y);
};

class HGeodesic {
 public:
  struct Vertical {
    double x;
  };
  struct Circular {
    double center;
    double radius;
  };

  static HGeodesic vertical(double x);
  /// Throws DomainError unless radius > 0.
  static HGeodesic circular(double center, double radius);

  bool is_vertical() const noexcept { return std::holds_alternative<Vertical>(shape_); }
  const std::variant<Vertical, Circular>& shape() const noexcept { return shape_; }

  /// Signed side indicator: x - x0 for a vertical line, |p - c|^2 - r^2 for a
  /// semicircle (negative inside).
  double side(const HPoint& p) const;

 private:
  explicit HGeodesic(std::variant<Vertical, Circular> s) : shape_(s) {}
  std::variant<Vertical, Circular> shape_;
};

double hdistance(const HPoint& p, const HPoint& q);

/// Throws DegenerateInputError when either point is within 1e-12 of g.
bool separates(const HGeodesic& g, const HPoint& p, const HPoint& q);

struct SeparationStats {
  std::uint64_t trials = 0;   // samples that met every hypothesis
  std::uint64_t skips = 0;    // samples abandoned by the rejection sampler
  std::uint64_t violations = 0;
  double min_margin = 0;      // min over trials of d(p1, p2) - l
  std::array<std::uint64_t, 4> k_counts{};  // trials with k = 3, 4, 5, 6
};

SeparationStats run_separation_trials(std::uint64_t samples, std::uint64_t seed);

/// Passes iff no trial has d(p1, p2) < l - 1e-9.  DomainError when samples = 0.
VerificationReport mc_check_separation_lemma(std::uint64_t samples, std::uint64_t seed);

}  // namespace twistcalc

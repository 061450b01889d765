#include "twistcalc/hplane.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "twistcalc/errors.hpp"

namespace twistcalc {

namespace {

constexpr double kOnGeodesic = 1e-12;
constexpr double kFootMargin = 1e-9;
constexpr double kTolerance = 1e-9;
constexpr int kMaxAttempts = 200;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Strictly inside (0, 1).
double open01(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

// A point strictly under the semicircle over [a, b] and off it by the degeneracy margin.
std::optional<HPoint> point_under(std::mt19937_64& rng, double a, double b) {
  const double c = (a + b) / 2;
  const double r = (b - a) / 2;
  const HGeodesic g = HGeodesic::circular(c, r);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const HPoint p{c + r * (2 * uniform01(rng) - 1), r * open01(rng)};
    if (g.side(p) < -kOnGeodesic) return p;
  }
  return std::nullopt;
}

}  // namespace

HPoint HPoint::make(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0)) throw DomainError("HPoint: need finite x and y > 0");
  return HPoint{x, y};
}

HGeodesic HGeodesic::vertical(double x) {
  if (!std::isfinite(x)) throw DomainError("HGeodesic: vertical line needs a finite foot");
  return HGeodesic(Vertical{x});
}

HGeodesic HGeodesic::circular(double center, double radius) {
  if (!std::isfinite(center) || !std::isfinite(radius) || !(radius > 0))
    throw DomainError("HGeodesic: circular geodesic needs radius > 0");
  return HGeodesic(Circular{center, radius});
}

double HGeodesic::side(const HPoint& p) const {
  if (const auto* v = std::get_if<Vertical>(&shape_)) return p.x - v->x;
  const auto& c = std::get<Circular>(shape_);
  const double dx = p.x - c.center;
  return dx * dx + p.y * p.y - c.radius * c.radius;
}

double hdistance(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) equals acosh(1 + |p - q|^2 / (2 y_p y_q)).
  return 2 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2 * std::sqrt(p.y * q.y)));
}

bool separates(const HGeodesic& g, const HPoint& p, const HPoint& q) {
  const double sp = g.side(p);
  const double sq = g.side(q);
  if (std::fabs(sp) <= kOnGeodesic || std::fabs(sq) <= kOnGeodesic)
    throw DegenerateInputError("separates: point lies on the geodesic");
  return (sp < 0) != (sq < 0);
}

SeparationStats run_separation_trials(std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("mc_check_separation_lemma: samples must be positive");
  std::mt19937_64 rng(seed);
  SeparationStats st;
  st.min_margin = std::numeric_limits<double>::infinity();

  for (std::uint64_t s = 0; s < samples; ++s) {
    const double l = 0.1 + 2.9 * uniform01(rng);
    const double lambda = std::exp(l);
    const int k = 3 + static_cast<int>(rng() % 4);

    std::optional<std::pair<double, double>> feet;
    for (int attempt = 0; attempt < kMaxAttempts && !feet; ++attempt) {
      const double a = std::exp(4 * uniform01(rng) - 2);
      const double b = a + (lambda * a - a) * uniform01(rng);
      if (b - a > kFootMargin && lambda * a - b > kFootMargin) feet.emplace(a, b);
    }
    if (!feet) {
      ++st.skips;
      continue;
    }
    const auto [a, b] = *feet;
    const double scale = std::pow(lambda, k);
    const HGeodesic g2 = HGeodesic::circular((a + b) / 2, (b - a) / 2);
    const HGeodesic g2k = HGeodesic::circular(scale * (a + b) / 2, scale * (b - a) / 2);

    const auto p1 = point_under(rng, a, b);
    const auto p2 = point_under(rng, scale * a, scale * b);
    bool ok = p1 && p2;
    if (ok) {
      try {
        ok = separates(g2, *p1, *p2) && separates(g2k, *p1, *p2);
      } catch (const DegenerateInputError&) {
        ok = false;
      }
    }
    if (!ok) {
      ++st.skips;
      continue;
    }
    ++st.trials;
    ++st.k_counts[k - 3];
    const double margin = hdistance(*p1, *p2) - l;
    st.min_margin = std::min(st.min_margin, margin);
    if (margin < -kTolerance) ++st.violations;
  }
  return st;
}

VerificationReport mc_check_separation_lemma(std::uint64_t samples, std::uint64_t seed) {
  const SeparationStats st = run_separation_trials(samples, seed);
  VerificationReport rep;
  rep.name = "hplane-separation";
  rep.passed = st.violations == 0 && st.trials > 0;
  std::ostringstream d;
  d.precision(12);
  d << "samples: " << samples << ", seed: " << seed << '\n';
  d << "trials: " << st.trials << '\n';
  d << "skips: " << st.skips << '\n';
  d << "violations: " << st.violations << '\n';
  d << "min margin (d - l): " << st.min_margin << '\n';
  d << "trials by k: 3:" << st.k_counts[0] << " 4:" << st.k_counts[1] << " 5:" << st.k_counts[2]
    << " 6:" << st.k_counts[3];
  rep.detail = d.str();
  return rep;
}

}  // namespace twistcalc

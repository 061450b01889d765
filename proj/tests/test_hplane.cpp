#include <doctest.h>

#include <cmath>
#include <random>

#include "twistcalc/errors.hpp"
#include "twistcalc/hplane.hpp"

using namespace twistcalc;

TEST_CASE("hdistance values") {
  CHECK(hdistance({0, 1}, {0, std::exp(1.0)}) == doctest::Approx(1).epsilon(1e-14));
  CHECK(hdistance({0.3, 2}, {0.3, 2}) == 0);
  CHECK(hdistance({0, 1}, {3, 4}) == doctest::Approx(std::acosh(3.25)).epsilon(1e-14));
  CHECK(hdistance({0, 1}, {3, 4}) == doctest::Approx(1.84724608571).epsilon(1e-10));
}

TEST_CASE("hdistance is a metric invariant under similarities") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xs(-10, 10), ys(0.01, 10), ts(-50, 50), ss(0.01, 100);
  const auto point = [&] { return HPoint{xs(rng), ys(rng)}; };
  for (int i = 0; i < 10000; ++i) {
    const auto p = point(), q = point(), r = point();
    CHECK(hdistance(p, r) <= hdistance(p, q) + hdistance(q, r) + 1e-9);
    CHECK(hdistance(p, q) == hdistance(q, p));
    const double t = ts(rng), s = ss(rng);
    const double d = hdistance(p, q);
    CHECK(hdistance({p.x + t, p.y}, {q.x + t, q.y}) == doctest::Approx(d).epsilon(1e-10));
    CHECK(hdistance({s * p.x, s * p.y}, {s * q.x, s * q.y}) == doctest::Approx(d).epsilon(1e-10));
  }
}

TEST_CASE("separates") {
  const auto axis = HGeodesic::vertical(0);
  CHECK(separates(axis, {-1, 1}, {1, 1}));
  CHECK_FALSE(separates(axis, {1, 1}, {2, 5}));
  const auto circle = HGeodesic::circular(0, 2);
  CHECK(separates(circle, {0, 1}, {0, 3}));
  CHECK_FALSE(separates(circle, {0, 1}, {1, 0.5}));
  CHECK_THROWS_AS(separates(circle, {0, 2}, {0, 3}), DegenerateInputError);
  CHECK_THROWS_AS(separates(axis, {0, 1}, {1, 1}), DegenerateInputError);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> xs(-4, 4), ys(0.01, 4);
  for (int i = 0; i < 1000; ++i) {
    const HPoint p{xs(rng), ys(rng)}, q{xs(rng), ys(rng)};
    CHECK(separates(circle, p, q) == separates(circle, q, p));
  }
}

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(HPoint::make(0, 0), DomainError);
  CHECK_THROWS_AS(HPoint::make(0, -1), DomainError);
  CHECK_THROWS_AS(HGeodesic::circular(0, 0), DomainError);
  CHECK(HGeodesic::vertical(1).is_vertical());
}

TEST_CASE("separation lemma by sampling") {
  const auto st = run_separation_trials(10000, 1);
  CHECK(st.violations == 0);
  CHECK(st.trials + st.skips == 10000);
  CHECK(st.k_counts[0] > 0);
  CHECK(st.min_margin >= -1e-9);
  CHECK(mc_check_separation_lemma(10000, 1).passed);

  const auto one = run_separation_trials(1, 1);
  CHECK(one.trials == 1);
  CHECK(mc_check_separation_lemma(1, 1).passed);
  CHECK(mc_check_separation_lemma(500, 77).render() == mc_check_separation_lemma(500, 77).render());
  CHECK_THROWS_AS(run_separation_trials(0, 1), DomainError);
}

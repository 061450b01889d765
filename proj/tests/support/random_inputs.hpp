#pragma once

#include <cstdint>
#include <random>

#include "twistcalc/hurwitz.hpp"

namespace twistcalc::testing {

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline HomologyClass random_class(std::mt19937_64& rng, unsigned genus = 2, long bound = 3) {
  std::vector<Integer> v(2 * genus);
  for (auto& x : v) x = draw(rng, -bound, bound);
  return HomologyClass(std::move(v));
}

inline TwistTuple random_tuple(std::mt19937_64& rng, std::size_t min_len = 3, std::size_t max_len = 12) {
  const auto l = static_cast<std::size_t>(draw(rng, static_cast<long>(min_len), static_cast<long>(max_len)));
  TwistTuple t(2);
  for (std::size_t i = 0; i < l; ++i) t.push_back(random_class(rng));
  return t;
}

inline MoveSequence random_moves(std::mt19937_64& rng, std::size_t length, std::size_t max_count = 50) {
  const auto n = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_count)));
  MoveSequence q;
  for (std::size_t i = 0; i < n; ++i)
    q.push_back(HurwitzMove{rng() % 2 ? Side::L : Side::R, static_cast<std::size_t>(draw(rng, 1, static_cast<long>(length) - 1))});
  return q;
}

}  // namespace twistcalc::testing

#pragma once

// Seeded local search for Hurwitz move sequences that make every
// off-diagonal algebraic intersection of a tuple nonzero.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistcalc/hurwitz.hpp"

namespace twistcalc {

enum class SearchStrategy { GreedyRandom, PureRandom };

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t max_moves = 200;
  double time_limit_seconds = 60.0;
  std::size_t restarts = 50;
  SearchStrategy strategy = SearchStrategy::GreedyRandom;
  /// Restarts evaluated concurrently; 0 picks the hardware concurrency.
  /// Never affects the outcome, only wall time.
  unsigned workers = 0;
};

struct SearchOutcome {
  bool found = false;
  MoveSequence sequence;
  std::uint64_t explored = 0;
  /// (global step, zero-pair count) after every accepted move, restarts
  /// laid end to end.  Step 0 is the starting score.
  std::vector<std::pair<std::uint64_t, std::size_t>> score_trace;
  std::size_t restart_used = 0;
  std::string detail;

  bool operator==(const SearchOutcome&) const = default;
};

std::size_t zero_pair_score(const IntersectionMatrix& m);

/// Throws PreconditionError when t has fewer than two entries and
/// DomainError on a non-positive limit.  Running out of moves, restarts or
/// time is reported as found = false.
SearchOutcome search_nonzero(const TwistTuple& t, const SearchConfig& cfg);

/// SplitMix64 finalizer applied to seed + worker; the per-restart seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t worker);

}  // namespace twistcalc

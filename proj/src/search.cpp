#include "twistcalc/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "twistcalc/errors.hpp"

namespace twistcalc {

namespace {

constexpr std::size_t kCandidateCap = 16;
constexpr std::size_t kStagnationWindow = 30;

using Clock = std::chrono::steady_clock;

struct RestartRun {
  bool found = false;
  bool timed_out = false;
  MoveSequence sequence;
  std::uint64_t explored = 0;
  std::vector<std::size_t> scores;  // after each accepted move
};

// Zero-pair count after `mv`, from the rows it touches.
std::size_t score_after(const IntersectionMatrix& m, std::size_t score, const HurwitzMove& mv) {
  const std::size_t l = m.size();
  const std::size_t i = mv.index - 1;
  const std::size_t i1 = i + 1;
  std::size_t before = 0;
  std::size_t after = 0;
  Integer tmp;
  for (std::size_t k = 0; k < l; ++k) {
    if (k == i || k == i1) continue;
    const bool zi = sgn(m(i, k)) == 0;
    const bool zi1 = sgn(m(i1, k)) == 0;
    before += zi + zi1;
    if (mv.side == Side::L) {
      tmp = m(i1, k) + m(i1, i) * m(i, k);
      after += (sgn(tmp) == 0) + zi;
    } else {
      tmp = m(i, k) - m(i, i1) * m(i1, k);
      after += zi1 + (sgn(tmp) == 0);
    }
  }
  return score - before + after;
}

HurwitzMove move_from_code(std::size_t code) {
  return HurwitzMove{code % 2 == 0 ? Side::L : Side::R, code / 2 + 1};
}

RestartRun run_restart(const IntersectionMatrix& start, std::size_t start_score, const SearchConfig& cfg,
                       std::uint64_t restart_seed, Clock::time_point deadline) {
  RestartRun run;
  std::mt19937_64 rng(restart_seed);
  const std::size_t n_moves = 2 * (start.size() - 1);
  const std::size_t sample = std::min(n_moves, kCandidateCap);
  std::vector<std::size_t> codes(n_moves);
  for (std::size_t c = 0; c < n_moves; ++c) codes[c] = c;

  IntersectionMatrix cur = start;
  std::size_t score = start_score;
  std::size_t best = start_score;
  std::size_t since_best = 0;

  while (run.sequence.size() < cfg.max_moves) {
    if (Clock::now() > deadline) {
      run.timed_out = true;
      return run;
    }
    HurwitzMove chosen;
    std::size_t chosen_score = 0;
    if (cfg.strategy == SearchStrategy::PureRandom) {
      chosen = move_from_code(rng() % n_moves);
      chosen_score = score_after(cur, score, chosen);
      ++run.explored;
    } else {
      for (std::size_t s = 0; s < sample; ++s) std::swap(codes[s], codes[s + rng() % (n_moves - s)]);
      std::size_t ties = 0;
      for (std::size_t s = 0; s < sample; ++s) {
        const HurwitzMove mv = move_from_code(codes[s]);
        const std::size_t sc = score_after(cur, score, mv);
        ++run.explored;
        if (ties == 0 || sc < chosen_score) {
          chosen = mv;
          chosen_score = sc;
          ties = 1;
        } else if (sc == chosen_score && rng() % ++ties == 0) {
          chosen = mv;
        }
      }
    }
    cur = flat_move_unchecked(cur, chosen);
    score = chosen_score;
    run.sequence.push_back(chosen);
    run.scores.push_back(score);
    if (score == 0) {
      run.found = true;
      return run;
    }
    if (score < best) {
      best = score;
      since_best = 0;
    } else if (cfg.strategy == SearchStrategy::GreedyRandom && ++since_best >= kStagnationWindow) {
      return run;
    }
  }
  return run;
}

void reverify(const TwistTuple& t, const SearchOutcome& out) {
  const TwistTuple moved = apply_sequence(t, out.sequence);
  const IntersectionMatrix flat = apply_sequence(matrix_of_tuple(t), out.sequence);
  if (!(matrix_of_tuple(moved) == flat)) throw InvariantError("search: sharp and flat levels disagree");
  if (zero_pair_score(flat) != 0) throw InvariantError("search: returned sequence leaves a zero pair");
  if (moved.size() != t.size()) throw InvariantError("search: tuple length changed");
  if (!(product_matrix(moved) == product_matrix(t))) throw InvariantError("search: product matrix changed");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t worker) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (worker + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t zero_pair_score(const IntersectionMatrix& m) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) zeros += sgn(m(i, j)) == 0;
  return zeros;
}

SearchOutcome search_nonzero(const TwistTuple& t, const SearchConfig& cfg) {
  if (t.size() < 2) throw PreconditionError("search_nonzero: tuple needs at least two entries");
  if (cfg.max_moves == 0 || cfg.restarts == 0 || !(cfg.time_limit_seconds > 0))
    throw DomainError("search_nonzero: limits must be positive");

  SearchOutcome out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_zero()) {
      out.detail = "entry " + std::to_string(i + 1) + " is the zero class; its pairing with every class is 0";
      return out;
    }
  }

  const IntersectionMatrix start = matrix_of_tuple(t);
  const std::size_t start_score = zero_pair_score(start);
  out.score_trace.emplace_back(0, start_score);
  if (start_score == 0) {
    out.found = true;
    out.detail = "already all nonzero";
    reverify(t, out);
    return out;
  }

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit_seconds));
  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.restarts));

  std::uint64_t step = 0;
  std::size_t best_seen = start_score;
  for (std::size_t first = 0; first < cfg.restarts; first += workers) {
    const std::size_t batch = std::min<std::size_t>(workers, cfg.restarts - first);
    std::vector<RestartRun> runs(batch);
    if (batch == 1) {
      runs[0] = run_restart(start, start_score, cfg, derive_seed(cfg.seed, first), deadline);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(batch);
      for (std::size_t w = 0; w < batch; ++w)
        pool.emplace_back([&, w] { runs[w] = run_restart(start, start_score, cfg, derive_seed(cfg.seed, first + w), deadline); });
      for (auto& th : pool) th.join();
    }
    for (std::size_t w = 0; w < batch; ++w) {
      const RestartRun& run = runs[w];
      out.explored += run.explored;
      for (std::size_t sc : run.scores) {
        out.score_trace.emplace_back(++step, sc);
        best_seen = std::min(best_seen, sc);
      }
      if (run.found) {
        out.found = true;
        out.sequence = run.sequence;
        out.restart_used = first + w;
        std::ostringstream d;
        d << "found at restart " << first + w << " with " << run.sequence.size() << " moves";
        out.detail = d.str();
        reverify(t, out);
        return out;
      }
      if (run.timed_out) {
        out.detail = "time limit reached during restart " + std::to_string(first + w) +
                     "; best zero-pair count " + std::to_string(best_seen);
        return out;
      }
    }
  }
  out.detail = "no sequence within " + std::to_string(cfg.restarts) + " restarts of at most " +
               std::to_string(cfg.max_moves) + " moves; best zero-pair count " + std::to_string(best_seen);
  return out;
}

}  // namespace twistcalc

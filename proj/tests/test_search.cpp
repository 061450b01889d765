#include <doctest.h>

#include <random>

#include "support/random_inputs.hpp"
#include "twistcalc/errors.hpp"
#include "twistcalc/hurwitz_io.hpp"
#include "twistcalc/search.hpp"

using namespace twistcalc;

namespace {

const auto c = chain_classes(2);

TwistTuple a2g1() { return concat(standard_tuple(StandardTuple::A2), TwistTuple(2, {c[0]})); }

SearchConfig acceptance_config() {
  SearchConfig cfg;
  cfg.seed = 42;
  cfg.max_moves = 200;
  cfg.restarts = 50;
  return cfg;
}

}  // namespace

TEST_CASE("zero_pair_score") {
  CHECK(zero_pair_score(IntersectionMatrix(IntMatrix::from_rows({{0, 1, 2}, {-1, 0, -3}, {-2, 3, 0}}))) == 0);
  CHECK(zero_pair_score(IntersectionMatrix::zero(6)) == 15);
  CHECK(zero_pair_score(matrix_of_tuple(TwistTuple(2, {c[0], c[1], c[2]}))) == 1);
}

TEST_CASE("trivial and degenerate inputs") {
  const TwistTuple good(2, {c[0], c[1]});
  const auto done = search_nonzero(good, SearchConfig{});
  CHECK(done.found);
  CHECK(done.sequence.empty());

  const TwistTuple with_zero(2, {c[0], HomologyClass::zero(2), c[1]});
  const auto none = search_nonzero(with_zero, SearchConfig{});
  CHECK_FALSE(none.found);
  CHECK(none.detail.find("zero class") != std::string::npos);

  CHECK_THROWS_AS(search_nonzero(TwistTuple(2, {c[0]}), SearchConfig{}), PreconditionError);
  SearchConfig bad;
  bad.max_moves = 0;
  CHECK_THROWS_AS(search_nonzero(good, bad), DomainError);
}

TEST_CASE("finds a certificate for A2 with gamma1") {
  const auto t = a2g1();
  const auto out = search_nonzero(t, acceptance_config());
  REQUIRE(out.found);
  CHECK(out.sequence.size() <= 200);
  const auto moved = apply_sequence(t, out.sequence);
  CHECK(matrix_of_tuple(moved) == apply_sequence(matrix_of_tuple(t), out.sequence));
  CHECK(matrix_of_tuple(moved).all_off_diagonal_nonzero());
  CHECK(product_matrix(moved) == product_matrix(t));
  CHECK(moved.size() == t.size());
  CHECK(out.score_trace.back().second == 0);
}

TEST_CASE("archived certificate is reproduced") {
  const auto archived = load_moves(std::filesystem::path(TWISTCALC_GOLDEN_DIR) / "search_a2g1_seed42.mov");
  CHECK(search_nonzero(a2g1(), acceptance_config()).sequence == archived);
}

TEST_CASE("outcome does not depend on the worker count") {
  auto cfg = acceptance_config();
  cfg.restarts = 12;
  cfg.max_moves = 40;
  cfg.workers = 1;
  const auto serial = search_nonzero(a2g1(), cfg);
  for (unsigned w : {2u, 3u, 8u}) {
    cfg.workers = w;
    CHECK(search_nonzero(a2g1(), cfg) == serial);
  }
}

TEST_CASE("repeated runs are identical and traces increase") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = testing::random_tuple(rng, 3, 10);
    SearchConfig cfg;
    cfg.seed = rng();
    cfg.max_moves = 60;
    cfg.restarts = 4;
    cfg.strategy = trial % 2 ? SearchStrategy::PureRandom : SearchStrategy::GreedyRandom;
    bool has_zero = false;
    for (const auto& e : t.entries()) has_zero = has_zero || e.is_zero();
    const auto a = search_nonzero(t, cfg);
    CHECK(a == search_nonzero(t, cfg));
    for (std::size_t i = 1; i < a.score_trace.size(); ++i) CHECK(a.score_trace[i].first > a.score_trace[i - 1].first);
    if (a.found) {
      CHECK_FALSE(has_zero);
      CHECK(zero_pair_score(apply_sequence(matrix_of_tuple(t), a.sequence)) == 0);
    }
  }
}

TEST_CASE("derived seeds differ per worker") {
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

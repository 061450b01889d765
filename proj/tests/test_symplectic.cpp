#include <doctest.h>

#include <random>

#include "support/random_inputs.hpp"
#include "twistcalc/errors.hpp"
#include "twistcalc/symplectic.hpp"
#include "twistcalc/words.hpp"

using namespace twistcalc;
using twistcalc::testing::random_class;

namespace {

const auto c = chain_classes(2);

TwistWord word(const char* text) { return parse_word(text, WordLibrary(2)); }

}  // namespace

TEST_CASE("pairing values") {
  CHECK(intersection_pairing(c[0], c[1]) == 1);
  CHECK(intersection_pairing(c[0], c[2]) == 0);
  const HomologyClass x{3, -2, 5, 7};
  CHECK(intersection_pairing(x, x) == 0);
  CHECK_THROWS_AS(intersection_pairing(c[0], HomologyClass{1, 0}), DimensionError);
}

TEST_CASE("pairing is skew and bilinear") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_class(rng), y = random_class(rng), z = random_class(rng);
    const Integer s = testing::draw(rng, -4, 4);
    CHECK(intersection_pairing(x, y) == -intersection_pairing(y, x));
    CHECK(intersection_pairing(x + s * z, y) == intersection_pairing(x, y) + s * intersection_pairing(z, y));
  }
}

TEST_CASE("chain classes") {
  CHECK(c == std::vector<HomologyClass>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  for (unsigned g = 1; g <= 5; ++g) {
    const auto cg = chain_classes(g);
    REQUIRE(cg.size() == 2 * g + 1);
    for (std::size_t i = 0; i < cg.size(); ++i)
      for (std::size_t j = 0; j < cg.size(); ++j) {
        const Integer p = intersection_pairing(cg[i], cg[j]);
        if (i + 1 == j || j + 1 == i)
          CHECK(abs(p) == 1);
        else
          CHECK(p == 0);
      }
  }
  CHECK_THROWS_AS(chain_classes(0), DomainError);
}

TEST_CASE("twist_apply") {
  CHECK(twist_apply(c[1], c[0]) == HomologyClass{1, 1, 0, 0});
  CHECK(twist_apply(c[1], c[0], -1) == HomologyClass{1, -1, 0, 0});
  const HomologyClass x{2, 1, -1, 3};
  CHECK(twist_apply(x, x) == x);
  CHECK_THROWS_AS(twist_apply(c[0], HomologyClass{1, 0}), DimensionError);
}

TEST_CASE("twists preserve the pairing and ignore orientation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = random_class(rng), x = random_class(rng), y = random_class(rng);
    CHECK(intersection_pairing(twist_apply(d, x), twist_apply(d, y)) == intersection_pairing(x, y));
    CHECK(twist_apply(d, x) == twist_apply(-d, x));
  }
}

TEST_CASE("transvection_matrix") {
  CHECK(transvection_matrix(c[0], 1).apply(c[1]) == HomologyClass{-1, 1, 0, 0});
  CHECK(transvection_matrix(c[3], 0).is_identity());
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_class(rng);
    const long k = testing::draw(rng, -5, 5);
    const auto m = transvection_matrix(d, k);
    CHECK(is_symplectic(m.entries()));
    CHECK((m * transvection_matrix(d, -k)).is_identity());
    const auto x = random_class(rng);
    HomologyClass iterated = x;
    for (long s = 0; s < std::labs(k); ++s) iterated = twist_apply(d, iterated, k > 0 ? 1 : -1);
    CHECK(m.apply(x) == iterated);
  }
}

TEST_CASE("symplectic matrices") {
  const auto j = SymplecticForm(2).matrix();
  CHECK(j.transpose() == -j);
  CHECK((j * j).is_scalar(-1));
  CHECK_THROWS_AS(SymplecticMatrix::from_entries(IntMatrix::from_rows({{2, 0}, {0, 1}})), InvariantError);
  const auto m = transvection_matrix(HomologyClass{1, 2, -1, 0}, 3) * transvection_matrix(c[2], -2);
  CHECK((m * m.inverse()).is_identity());
  CHECK(m.pow(-2) == m.inverse() * m.inverse());
  CHECK(m.pow(0).is_identity());
}

TEST_CASE("evaluate_word") {
  CHECK(evaluate_word(TwistWord(2)).is_identity());
  CHECK(evaluate_word(word("g2^-1 g1 g2")) == transvection_matrix(c[0] - c[1], 1));
  const auto t1 = transvection_matrix(c[0], 1), t5 = transvection_matrix(c[4], 1);
  CHECK(evaluate_word(word("g1 g5")) == t1 * t5);
  CHECK(t1 * t5 == t5 * t1);
  CHECK(evaluate_word(word("g1 g2")).apply(c[0]) == transvection_matrix(c[0], 1).apply(transvection_matrix(c[1], 1).apply(c[0])));
  CHECK_THROWS_AS(evaluate_word(TwistWord(0)), DomainError);
}

TEST_CASE("a word times its inverse is the identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    TwistWord w(2);
    const long n = testing::draw(rng, 1, 12);
    for (long s = 0; s < n; ++s) {
      long e = testing::draw(rng, -3, 3);
      if (e == 0) e = 1;
      w.append(TwistLetter{random_class(rng), e, std::nullopt});
    }
    TwistWord both = w;
    both.append(w.inverse());
    CHECK(evaluate_word(both).is_identity());
  }
}

TEST_CASE("word letters") {
  TwistWord w(2);
  CHECK_THROWS_AS(w.append(TwistLetter{c[0], 0, std::nullopt}), DomainError);
  CHECK_THROWS_AS(w.append(TwistLetter{HomologyClass{1, 0}, 1, std::nullopt}), DimensionError);
}

TEST_CASE("triangle_class") {
  CHECK(triangle_class(c[0], c[1]) == HomologyClass{1, -1, 0, 0});
  CHECK(triangle_class(c[2], c[3]) == HomologyClass{1, 0, 1, -1});
  CHECK_THROWS_AS(triangle_class(c[0], c[2]), PreconditionError);
}

TEST_CASE("derive_twist_class") {
  const HomologyClass s{0, 1, 0, 1};
  const auto got = derive_twist_class(transvection_matrix(s, 2), 2);
  REQUIRE(got);
  CHECK(*got == s);
  const auto zero = derive_twist_class(SymplecticMatrix::identity(2), 3);
  REQUIRE(zero);
  CHECK(zero->is_zero());
  CHECK_FALSE(derive_twist_class(transvection_matrix(c[0], 1) * transvection_matrix(c[1], 1), 2));
  CHECK_THROWS_AS(derive_twist_class(SymplecticMatrix::identity(2), 0), DomainError);
}

TEST_CASE("derive_twist_class inverts transvection_matrix up to sign") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_class(rng);
    if (s.is_zero()) s = c[0];
    const long power = testing::draw(rng, 1, 4);
    const auto got = derive_twist_class(transvection_matrix(s, power), power);
    REQUIRE(got);
    CHECK((*got == s || *got == -s));
    CHECK(*got == got->sign_normalized());
  }
}

TEST_CASE("class formatting and construction") {
  CHECK(HomologyClass{1, 0, -2, 3}.to_string() == "(1,0,-2,3)");
  CHECK(-(-HomologyClass{1, 2, 3, 4}) == HomologyClass{1, 2, 3, 4});
  CHECK_THROWS_AS(HomologyClass({1, 2, 3}), DomainError);
  CHECK(HomologyClass{0, -2, 1, 0}.sign_normalized() == HomologyClass{0, 2, -1, 0});
}

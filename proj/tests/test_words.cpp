#include <doctest.h>

#include "twistcalc/errors.hpp"
#include "twistcalc/words.hpp"

using namespace twistcalc;

TEST_CASE("tokens and powers") {
  const WordLibrary lib(2);
  const TwistWord w = parse_word("g1 g2^-1 g5^3", lib);
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[1].exponent == -1);
  CHECK(w.letters()[2].exponent == 3);
  CHECK(w.letters()[2].generator == chain_classes(2)[4]);
  CHECK(w.letters()[0].chain_index == 1u);
}

TEST_CASE("bad tokens") {
  const WordLibrary lib(2);
  CHECK_THROWS_AS(parse_word("g6", lib), ParseError);
  CHECK_THROWS_AS(parse_word("g0", lib), ParseError);
  CHECK_THROWS_AS(parse_word("g1^0", lib), ParseError);
  CHECK_THROWS_AS(parse_word("g1^", lib), ParseError);
  CHECK_THROWS_AS(parse_word("phi", lib), ParseError);
}

TEST_CASE("macros, comments and the main word") {
  const auto lib = parse_word_file(
      "# test\n"
      "genus 2\n"
      "let phi = g1 g5   # half\n"
      "let psi = phi^2 g3^-1\n"
      "psi\n"
      "g2\n");
  CHECK(lib.names() == std::vector<std::string>{"phi", "psi"});
  CHECK(lib.macro("psi").letters().size() == 5);
  CHECK(lib.main_word().letters().size() == 6);
  CHECK(evaluate_word(lib.macro("psi")) ==
        evaluate_word(lib.macro("phi")).pow(2) * transvection_matrix(chain_classes(2)[2], -1));
}

TEST_CASE("word file errors carry the line") {
  try {
    parse_word_file("let a = g1\n\nlet b = g9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_word_file("g1\ngenus 3\n"), ParseError);
  CHECK_THROWS_AS(parse_word_file("let g2 = g1\n"), ParseError);
  CHECK_THROWS_AS(load_word_file("/nonexistent/file.words"), IoError);
}

TEST_CASE("higher genus files") {
  const auto lib = parse_word_file("genus 3\nlet x = g7 g6\n");
  CHECK(lib.macro("x").genus() == 3);
  CHECK(evaluate_word(lib.macro("x")).genus() == 3);
}

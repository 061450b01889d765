#include <doctest.h>

#include <fstream>
#include <iterator>

#include "twistcalc/errors.hpp"
#include "twistcalc/hurwitz_io.hpp"
#include "twistcalc/verify.hpp"

using namespace twistcalc;

namespace {

const DataSet data(TWISTCALC_TEST_DATA);
const std::filesystem::path golden(TWISTCALC_GOLDEN_DIR);

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("shipped move counts") {
  CHECK(data.moves("q1.mov").size() == 83);
  CHECK(data.moves("q2.mov").size() == 53);
  CHECK(data.moves("q3.mov").size() == 129);
}

TEST_CASE("shipped tuples match the standard ones") {
  CHECK(data.tuple("a1.tup") == standard_tuple(StandardTuple::A1));
  CHECK(data.tuple("a2.tup") == standard_tuple(StandardTuple::A2));
  CHECK(data.tuple("a3.tup") == standard_tuple(StandardTuple::A3));
  const TwistTuple gamma1(2, {chain_classes(2)[0]});
  CHECK(data.tuple("a1g1.tup") == concat(standard_tuple(StandardTuple::A1), gamma1));
  CHECK(data.tuple("a3g1.tup") == concat(standard_tuple(StandardTuple::A3), gamma1));
}

TEST_CASE("sequences never touch the appended entry") {
  const std::size_t lengths[] = {20, 20, 30};
  for (int i = 1; i <= 3; ++i) {
    for (const auto& mv : data.moves("q" + std::to_string(i) + ".mov")) CHECK(mv.index < lengths[i - 1]);
  }
}

TEST_CASE("lemma cases agree with the independent golden matrices") {
  const std::size_t sizes[] = {21, 21, 31};
  for (int i = 1; i <= 3; ++i) {
    CAPTURE(i);
    const auto r = run_lemma_case(data, i);
    CHECK(r.sharp == r.flat);
    CHECK(r.flat.size() == sizes[i - 1]);
    CHECK(r.flat.entries() == load_matrix(golden / ("lemma" + std::to_string(i) + ".csv")));
    CHECK(r.flat.all_off_diagonal_nonzero());
    const auto rep = verify_lemma_case(data, i);
    CHECK(rep.passed);
    CHECK(rep.render() == verify_lemma_case(data, i).render());
  }
  CHECK_THROWS_AS(run_lemma_case(data, 4), DomainError);
}

TEST_CASE("first lemma case counts 420 nonzero entries") {
  const auto r = run_lemma_case(data, 1);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.flat.size(); ++i)
    for (std::size_t j = 0; j < r.flat.size(); ++j) nonzero += i != j && sgn(r.flat(i, j)) != 0;
  CHECK(nonzero == 420);
}

TEST_CASE("a failing lemma report localizes the zero pair") {
  const auto dir = std::filesystem::temp_directory_path() / "twistcalc_verify_case";
  std::filesystem::create_directories(dir);
  for (const char* f : {"a1g1.tup", "a2g1.tup", "a3g1.tup", "q1.mov", "q3.mov"})
    std::filesystem::copy_file(data.path(f), dir / f, std::filesystem::copy_options::overwrite_existing);
  save_text(dir / "q2.mov", "L1\n");
  const auto rep = verify_lemma_case(DataSet(dir), 2);
  CHECK_FALSE(rep.passed);
  CHECK(std::holds_alternative<IntMatrix>(rep.witness));
  CHECK(rep.detail.find("first zero pair") != std::string::npos);
  CHECK_THROWS_AS(DataSet(dir / "missing").tuple("a1.tup"), IoError);
}

TEST_CASE("relations on homology") {
  for (const auto& name : relation_names()) CHECK(check_relation(name).passed);
  CHECK(std::get<IntMatrix>(check_relation("chain4-pow5").witness).is_scalar(-1));
  CHECK(std::get<IntMatrix>(check_relation("chain5-pow6").witness).is_identity());
  CHECK(std::get<IntMatrix>(check_relation("palindrome-sq").witness).is_identity());
  CHECK_THROWS_AS(check_relation("chain3"), DomainError);
}

TEST_CASE("reports name the homology caveat") {
  CHECK(check_relation("chain5-pow6").detail.find("necessary condition") != std::string::npos);
  const auto text = check_relation("chain5-pow6").render();
  CHECK(text.substr(text.rfind("RESULT")) == "RESULT relation-chain5-pow6 PASS\n");
}

TEST_CASE("first monodromy family: the first identity") {
  const auto r = run_example1(data.words("ex41.words"));
  CHECK(r.p.entries() == IntMatrix::from_rows({{1, 0, 0, 0}, {-2, 1, 2, 0}, {0, 0, 1, 0}, {2, 0, -2, 1}}));
  REQUIRE(r.tau);
  CHECK(*r.tau == HomologyClass{0, 1, 0, -1});
  CHECK(r.first_closes);
}

TEST_CASE("first monodromy family: the second identity") {
  const auto words = data.words("ex41.words");
  const auto r = run_example1(words);
  CHECK((r.q.entries() - IntMatrix::identity(4)) ==
        IntMatrix::from_rows({{72, 16, 0, 0}, {-32, -8, 0, 0}, {0, 0, 72, 16}, {0, 0, -32, -8}}));
  CHECK(r.q_residual_rank == 4);
  CHECK_FALSE(r.q_residual_nilpotent);
  CHECK_FALSE(r.sigma);
  CHECK_FALSE(r.second_closes);
  CHECK(r.q_swapped.is_identity());
  const auto rep = example1_check(words);
  CHECK_FALSE(rep.passed);
  CHECK(std::get<IntMatrix>(rep.witness).rank() == 4);
}

TEST_CASE("every half-monodromy word is shipped") {
  CHECK(data.words("ex41.words").names().size() == 5);
  CHECK(data.words("ex42.words").names().size() == 7);
}

TEST_CASE("second monodromy family") {
  const auto words = data.words("ex42.words");
  const auto r = run_example2(words);
  CHECK(r.r_squared_identity);
  CHECK(r.words_symplectic);
  CHECK(r.r.is_minus_identity());
  CHECK(example2_check(words).passed);
}

TEST_CASE("ivanov_lower_bound") {
  CHECK(ivanov_lower_bound({{3, 1, 1}}, 0) == 1);
  CHECK(ivanov_lower_bound({{1, 1, 1}}, 0) == -1);
  CHECK(ivanov_lower_bound({{5, 2, 1}, {-3, 1, 1}}, 4) == 3);
  CHECK(ivanov_lower_bound({}, 2) == -2);
  CHECK_THROWS_AS(ivanov_lower_bound({{0, 1, 1}}, 0), DomainError);
  CHECK_THROWS_AS(ivanov_lower_bound({{2, -1, 1}}, 0), DomainError);
}

TEST_CASE("min_power_n") {
  CHECK(min_power_n(1, 1, 5) == 8);
  CHECK(min_power_n(1, 1, 0) == 3);
  CHECK(min_power_n(2, 3, 10) == 4);
  for (long i = 1; i <= 4; ++i)
    for (long j = 1; j <= 4; ++j)
      for (long x = 0; x <= 30; ++x) {
        const long n = min_power_n(i, j, x);
        CHECK((n - 2) * i * j - x >= 1);
        CHECK((n - 3) * i * j - x < 1);
      }
  CHECK_THROWS_AS(min_power_n(0, 1, 1), DomainError);
}

TEST_CASE("twisted concatenation scan") {
  const auto scan = scan_twisted_concatenation(data, 100);
  REQUIRE(scan.n);
  const auto expected = read_text(golden / "twisted.txt");
  CHECK(expected == "length " + std::to_string(scan.length) + "\nN " + std::to_string(*scan.n) + "\n");
  CHECK(*scan.n == 5);
  CHECK(scan.length == 90);
  CHECK(scan.matrix.all_off_diagonal_nonzero());
  CHECK_FALSE(scan_twisted_concatenation(data, 4).n);
  CHECK(verify_twisted_concatenation(data, 100).passed);
}

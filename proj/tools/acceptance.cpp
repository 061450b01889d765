// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance                 all criteria
//   acceptance --criterion N   only criterion N
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/random_inputs.hpp"
#include "twistcalc/bounds.hpp"
#include "twistcalc/hplane.hpp"
#include "twistcalc/search.hpp"
#include "twistcalc/verify.hpp"

using namespace twistcalc;

namespace {

constexpr double kLemmaSeconds = 1.0;
constexpr double kDiagramSeconds = 5.0;
constexpr double kSearchSeconds = 60.0;
constexpr double kTwistedSeconds = 10.0;
constexpr double kMonteCarloSeconds = 5.0;
constexpr double kLmaxRelTol = 1e-9;
constexpr double kExactRelTol = 1e-15;
constexpr double kCollarRelTol = 1e-12;
constexpr int kRandomTrials = 1000;
constexpr long kTwistedMaxN = 100;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b)); }

const DataSet& data() {
  static const DataSet d = DataSet::installed();
  return d;
}

Verdict lemma_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;
  const std::size_t moves[] = {83, 53, 129};
  const std::size_t sizes[] = {21, 21, 31};
  for (int i = 1; i <= 3; ++i) {
    const auto q = data().moves("q" + std::to_string(i) + ".mov");
    const auto r = run_lemma_case(data(), i);
    const bool case_ok = q.size() == moves[i - 1] && r.flat.size() == sizes[i - 1] && r.sharp == r.flat &&
                         r.flat.all_off_diagonal_nonzero();
    ok = ok && case_ok;
    d << "case " << i << ' ' << (case_ok ? "ok" : "FAILED") << "; ";
  }
  const double s = seconds_since(t0);
  d << "time " << s << " s (limit " << kLemmaSeconds << ")";
  return {ok && s < kLemmaSeconds, d.str()};
}

Verdict commutative_diagram() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  int agree = 0;
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const auto t = testing::random_tuple(rng);
    const auto q = testing::random_moves(rng, t.size());
    agree += matrix_of_tuple(apply_sequence(t, q)) == apply_sequence(matrix_of_tuple(t), q);
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << agree << '/' << kRandomTrials << " trials exact; time " << s << " s (limit " << kDiagramSeconds << ")";
  return {agree == kRandomTrials && s < kDiagramSeconds, d.str()};
}

Verdict hurwitz_invariants() {
  std::mt19937_64 rng(20240602);
  int ok = 0;
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const auto t = testing::random_tuple(rng, 2, 12);
    const auto m = matrix_of_tuple(t);
    const auto k = static_cast<std::size_t>(testing::draw(rng, 1, static_cast<long>(t.size()) - 1));
    const HurwitzMove l{Side::L, k}, r{Side::R, k};
    const auto q = testing::random_moves(rng, t.size(), 50);
    const bool pass = apply_sequence(t, {l, r}) == t && apply_sequence(t, {r, l}) == t &&
                      apply_sequence(m, {l, r}) == m && apply_sequence(m, {r, l}) == m &&
                      product_matrix(apply_sequence(t, q)) == product_matrix(t);
    ok += pass;
  }
  std::ostringstream d;
  d << ok << '/' << kRandomTrials << " trials exact";
  return {ok == kRandomTrials, d.str()};
}

Verdict relations() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& name : relation_names()) {
    const auto rep = check_relation(name);
    ok = ok && rep.passed;
    d << name << ' ' << (rep.passed ? "ok" : "FAILED") << "; ";
  }
  d << "chain4-pow5 maps to -I";
  return {ok, d.str()};
}

Verdict example_one() {
  const auto r = run_example1(data().words("ex41.words"));
  const bool squared_transvection = r.q_residual_rank <= 1 && r.q_residual_nilpotent && r.sigma.has_value();
  std::ostringstream d;
  d << "rank(Q-I) = " << r.q_residual_rank << ", (Q-I)^2 = 0: " << (r.q_residual_nilpotent ? "yes" : "no")
    << ", sigma " << (r.sigma ? r.sigma->to_string() : "none") << "; tau "
    << (r.tau ? r.tau->to_string() : "none") << ", first identity closes: " << (r.first_closes ? "yes" : "no")
    << ", second closes: " << (r.second_closes ? "yes" : "no");
  return {squared_transvection && r.first_closes && r.second_closes, d.str()};
}

Verdict example_two() {
  const auto r = run_example2(data().words("ex42.words"));
  std::ostringstream d;
  d << "R^2 = I: " << (r.r_squared_identity ? "yes" : "no") << ", R = "
    << (r.r.is_identity() ? "I" : r.r.is_minus_identity() ? "-I" : "other");
  return {r.r_squared_identity, d.str()};
}

Verdict search_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = data().tuple("a2g1.tup");
  SearchConfig cfg;
  cfg.seed = 42;
  cfg.max_moves = 200;
  cfg.restarts = 50;
  cfg.time_limit_seconds = kSearchSeconds;
  const auto out = search_nonzero(t, cfg);
  const double s = seconds_since(t0);
  bool reverified = false;
  if (out.found) {
    const auto moved = apply_sequence(t, out.sequence);
    const auto flat = apply_sequence(matrix_of_tuple(t), out.sequence);
    reverified = matrix_of_tuple(moved) == flat && flat.all_off_diagonal_nonzero();
  }
  std::ostringstream d;
  d << "found: " << (out.found ? "yes" : "no") << ", length " << out.sequence.size() << ", re-verified: "
    << (reverified ? "yes" : "no") << "; time " << s << " s (limit " << kSearchSeconds << ")";
  return {out.found && reverified && out.sequence.size() <= cfg.max_moves && s < kSearchSeconds, d.str()};
}

Verdict twisted() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto scan = scan_twisted_concatenation(data(), kTwistedMaxN);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "smallest N = " << (scan.n ? std::to_string(*scan.n) : "none") << ", length " << scan.length << "; time " << s
    << " s (limit " << kTwistedSeconds << ")";
  return {scan.n.has_value() && s < kTwistedSeconds, d.str()};
}

Verdict bounds_criterion() {
  const double lm = lmax(2, 1);
  const bool lmax_ok = rel_close(lm, 63 * (1 + std::exp(16.0)), kLmaxRelTol);
  const bool penner_ok = rel_close(penner_bound(2), std::log(2.0) / 12, kExactRelTol);
  const bool eppa_ok = rel_close(eppa_systole_bound(2), std::log(2.0) / 6, kExactRelTol);
  double worst = 0;
  for (int i = 1; i <= 2000; ++i) {
    const double l = 0.01 * i;
    worst = std::max(worst, std::fabs(std::sinh(l / 2) * std::sinh(collar_partner(l) / 2) - 1));
  }
  std::ostringstream d;
  d.precision(12);
  d << "lmax(2,1) = " << lm << ", penner " << (penner_ok ? "ok" : "FAILED") << ", eppa "
    << (eppa_ok ? "ok" : "FAILED") << ", worst collar residual " << worst << " (tol " << kCollarRelTol << ")";
  return {lmax_ok && penner_ok && eppa_ok && worst <= kCollarRelTol, d.str()};
}

Verdict monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto st = run_separation_trials(10000, 1);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "trials " << st.trials << ", skips " << st.skips << ", violations " << st.violations << ", min margin "
    << st.min_margin << "; time " << s << " s (limit " << kMonteCarloSeconds << ")";
  return {st.violations == 0 && st.trials > 0 && s < kMonteCarloSeconds, d.str()};
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"lemma reproduction", lemma_reproduction},
      {"sharp/flat commutative diagram", commutative_diagram},
      {"Hurwitz invariants", hurwitz_invariants},
      {"relations on homology", relations},
      {"first monodromy family closes", example_one},
      {"second monodromy family has order 2", example_two},
      {"search on A2 with gamma1", search_criterion},
      {"twisted concatenation", twisted},
      {"closed-form bounds", bounds_criterion},
      {"separation lemma Monte-Carlo", monte_carlo},
  };

  std::size_t only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::strtoul(argv[2], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::cerr << "criterion must be 1.." << criteria.size() << '\n';
      return 2;
    }
  } else if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }

  std::size_t failed = 0;
  std::size_t ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    ++ran;
    Verdict v{false, ""};
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].title << " -- " << v.detail
              << '\n';
  }
  std::cout << ran - failed << '/' << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

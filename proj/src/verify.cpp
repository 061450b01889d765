#include "twistcalc/verify.hpp"

#include <cstdlib>
#include <sstream>

#include "twistcalc/errors.hpp"
#include "twistcalc/hurwitz_io.hpp"

#ifndef TWISTCALC_DATA_DIR_DEFAULT
#define TWISTCALC_DATA_DIR_DEFAULT "data"
#endif

namespace twistcalc {

namespace {

constexpr const char* kHomologyCaveat =
    "note: computed on H1(S_2; Z); a pass is a necessary condition for the identity in Mod_2, not a proof";

std::string describe(const SymplecticMatrix& m) {
  if (m.is_identity()) return "I";
  if (m.is_minus_identity()) return "-I";
  return "non-scalar";
}

std::string inline_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ";" : "");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).get_str();
  }
  out << ']';
  return out.str();
}

std::size_t bit_length(const Integer& v) { return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

std::string VerificationReport::render() const {
  std::ostringstream out;
  out << "== " << name << '\n';
  if (!detail.empty()) out << detail << (detail.back() == '\n' ? "" : "\n");
  if (const auto* m = std::get_if<IntMatrix>(&witness)) {
    out << "witness matrix (" << m->rows() << "x" << m->cols() << "):\n" << m->to_csv();
  } else if (const auto* c = std::get_if<HomologyClass>(&witness)) {
    out << "witness class: " << c->to_string() << '\n';
  }
  out << "RESULT " << name << ' ' << (passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// DataSet

DataSet DataSet::installed() {
  if (const char* env = std::getenv("TWISTCALC_DATA_DIR"); env && *env) return DataSet(env);
  return DataSet(TWISTCALC_DATA_DIR_DEFAULT);
}

std::filesystem::path DataSet::path(const std::string& name) const {
  auto p = dir_ / name;
  if (!std::filesystem::is_regular_file(p)) throw IoError("data file not found: " + p.string());
  return p;
}

TwistTuple DataSet::tuple(const std::string& name) const { return load_tuple(path(name)); }
MoveSequence DataSet::moves(const std::string& name) const { return load_moves(path(name)); }
WordLibrary DataSet::words(const std::string& name) const { return load_word_file(path(name)); }

// ---------------------------------------------------------------------------
// Lemma

LemmaResult run_lemma_case(const DataSet& data, int which) {
  if (which < 1 || which > 3) throw DomainError("lemma case must be 1, 2 or 3");
  const std::string idx = std::to_string(which);
  const TwistTuple start = data.tuple("a" + idx + "g1.tup");
  const MoveSequence q = data.moves("q" + idx + ".mov");
  TwistTuple moved = apply_sequence(start, q);
  IntersectionMatrix sharp = matrix_of_tuple(moved);
  IntersectionMatrix flat = apply_sequence(matrix_of_tuple(start), q);
  return LemmaResult{std::move(moved), std::move(sharp), std::move(flat)};
}

VerificationReport verify_lemma_case(const DataSet& data, int which) {
  const LemmaResult r = run_lemma_case(data, which);
  const std::string idx = std::to_string(which);
  const MoveSequence q = data.moves("q" + idx + ".mov");
  const std::size_t l = r.sharp.size();

  VerificationReport rep;
  rep.name = "lemma-" + idx;
  std::ostringstream d;
  d << "tuple: a" << idx << "g1.tup (" << l << " entries), moves: q" << idx << ".mov (" << q.size() << " moves)\n";

  const bool agree = r.sharp == r.flat;
  std::size_t nonzero = 0;
  std::size_t max_bits = 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (i != j && sgn(r.flat(i, j)) != 0) ++nonzero;
      max_bits = std::max(max_bits, bit_length(r.flat(i, j)));
    }
  bool last_fixed = l > 0 && r.tuple[l - 1] == chain_classes(2)[0];
  d << "sharp and flat matrices agree: " << (agree ? "yes" : "NO") << '\n';
  d << "nonzero off-diagonal entries: " << nonzero << " of " << l * (l - 1) << '\n';
  d << "largest entry: " << max_bits << " bits\n";
  d << "last entry still gamma1: " << (last_fixed ? "yes" : "no") << '\n';
  d << "nonzero algebraic intersection certifies geometric intersection >= 1 for every pair\n";
  d << kHomologyCaveat;

  rep.passed = agree && r.flat.all_off_diagonal_nonzero();
  if (!agree) {
    rep.witness = r.sharp.entries() - r.flat.entries();
  } else if (!rep.passed) {
    const auto [i, j] = r.flat.first_zero_pair();
    d << "\nfirst zero pair: (" << i + 1 << ", " << j + 1 << ")";
    rep.witness = r.flat.entries();
  } else {
    rep.witness = r.flat.entries();
  }
  rep.detail = d.str();
  return rep;
}

// ---------------------------------------------------------------------------
// Relations

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names = {"chain4-pow5", "chain5-pow6", "palindrome-sq"};
  return names;
}

VerificationReport check_relation(const std::string& name) {
  WordLibrary lib(2);
  TwistWord word(2);
  bool expect_minus = false;
  if (name == "chain4-pow5") {
    word = parse_word("g1 g2 g3 g4", lib).power(5);
    expect_minus = true;
  } else if (name == "chain5-pow6") {
    word = parse_word("g1 g2 g3 g4 g5", lib).power(6);
  } else if (name == "palindrome-sq") {
    word = parse_word("g1 g2 g3 g4 g5 g5 g4 g3 g2 g1", lib).power(2);
  } else {
    throw DomainError("unknown relation '" + name + "'");
  }
  const SymplecticMatrix m = evaluate_word(word);
  VerificationReport rep;
  rep.name = "relation-" + name;
  rep.passed = expect_minus ? m.is_minus_identity() : m.is_identity();
  std::ostringstream d;
  d << "word length: " << word.letters().size() << '\n';
  d << "image on H1: " << describe(m) << " (expected " << (expect_minus ? "-I" : "I") << ")\n";
  if (expect_minus)
    d << "-I is the image of the hyperelliptic involution; the relation holds up to that central element\n";
  d << kHomologyCaveat;
  rep.detail = d.str();
  rep.witness = m.entries();
  return rep;
}

// ---------------------------------------------------------------------------
// Examples

namespace {

SymplecticMatrix squared(const WordLibrary& words, const std::string& name) {
  return evaluate_word(words.macro(name)).pow(2);
}

}  // namespace

Example1Result run_example1(const WordLibrary& words) {
  const SymplecticMatrix p2 = squared(words, "phi_2");
  const SymplecticMatrix p1 = squared(words, "phi_1");
  const SymplecticMatrix p =
      squared(words, "phi_m2") * squared(words, "phi_m1") * squared(words, "phi_0") * p1 * p2;
  const auto c = chain_classes(2);
  const SymplecticMatrix twists = transvection_matrix(c[1], 4) * transvection_matrix(c[3], 4);
  const SymplecticMatrix q = p2 * p1 * p2 * p1 * twists;
  const SymplecticMatrix q_swapped = p1 * p2 * p1 * p2 * twists;

  auto tau = derive_twist_class(p.inverse(), 2);
  auto sigma = derive_twist_class(q, 2);
  const IntMatrix residual = q.entries() - IntMatrix::identity(4);

  const bool first_closes = tau && (transvection_matrix(*tau, 2) * p).is_identity();
  const bool second_closes = sigma && (q * transvection_matrix(*sigma, -2)).is_identity();
  return Example1Result{p,
                        std::move(tau),
                        q,
                        std::move(sigma),
                        residual.rank(),
                        (residual * residual).is_zero(),
                        first_closes,
                        second_closes,
                        q_swapped};
}

VerificationReport example1_check(const WordLibrary& words) {
  const Example1Result r = run_example1(words);
  VerificationReport rep;
  rep.name = "example-1";
  std::ostringstream d;
  d << "P = (phi_-2^1/2)^2 (phi_-1^1/2)^2 (phi_0^1/2)^2 (phi_1^1/2)^2 (phi_2^1/2)^2 = "
    << inline_matrix(r.p.entries()) << '\n';
  if (r.tau) {
    d << "T_tau^2 = P^-1 forces [tau] = +-" << r.tau->to_string()
      << (r.tau->is_zero() ? " (zero class: consistent with a separating tau)" : " (nonzero: tau is non-separating)")
      << '\n';
  } else {
    d << "P^-1 is not a squared transvection: no class tau satisfies the first identity on H1\n";
  }
  d << "first identity with [tau] substituted evaluates to I: " << (r.first_closes ? "yes" : "no") << '\n';
  d << "Q = (phi_2^1/2)^2 (phi_1^1/2)^2 (phi_2^1/2)^2 (phi_1^1/2)^2 T_g2^4 T_g4^4 = " << inline_matrix(r.q.entries())
    << '\n';
  d << "rank(Q - I) = " << r.q_residual_rank << ", (Q - I)^2 = 0: " << (r.q_residual_nilpotent ? "yes" : "no") << '\n';
  if (r.sigma) {
    d << "T_sigma^2 = Q forces [sigma] = +-" << r.sigma->to_string() << '\n';
  } else {
    d << "Q is not a squared transvection: no class sigma satisfies the second identity on H1\n";
  }
  d << "second identity with [sigma] substituted evaluates to I: " << (r.second_closes ? "yes" : "no") << '\n';
  d << "diagnostic: with phi_1 and phi_2 exchanged, Q' = " << inline_matrix(r.q_swapped.entries()) << " ("
    << describe(r.q_swapped) << ")\n";
  d << kHomologyCaveat;
  rep.detail = d.str();
  rep.passed = r.first_closes && r.second_closes;
  if (!r.tau)
    rep.witness = r.p.inverse().entries() - IntMatrix::identity(4);
  else if (!r.sigma)
    rep.witness = r.q.entries() - IntMatrix::identity(4);
  else
    rep.witness = *r.sigma;
  return rep;
}

Example2Result run_example2(const WordLibrary& words) {
  static const std::vector<std::string> order = {"phi_m1", "phi_m1_2", "phi_m1_3", "phi_0",
                                                 "phi_1_3", "phi_1_2", "phi_1"};
  SymplecticMatrix r = SymplecticMatrix::identity(2);
  bool symplectic = true;
  for (const auto& name : order) {
    const SymplecticMatrix half = evaluate_word(words.macro(name));
    symplectic = symplectic && is_symplectic(half.entries());
    r = r * half.pow(2);
  }
  const bool sq = (r * r).is_identity();
  return Example2Result{r, sq, symplectic};
}

VerificationReport example2_check(const WordLibrary& words) {
  const Example2Result r = run_example2(words);
  VerificationReport rep;
  rep.name = "example-2";
  std::ostringstream d;
  d << "R = product of the seven squared half-monodromies (phi_-1 first) = " << inline_matrix(r.r.entries()) << '\n';
  d << "every half-monodromy word is symplectic: " << (r.words_symplectic ? "yes" : "no") << '\n';
  d << "R^2 = I: " << (r.r_squared_identity ? "yes" : "no") << '\n';
  d << "R is " << describe(r.r) << " on H1" << '\n';
  d << kHomologyCaveat;
  rep.detail = d.str();
  rep.passed = r.r_squared_identity && r.words_symplectic;
  rep.witness = r.r.entries();
  return rep;
}

// ---------------------------------------------------------------------------
// Integer bounds

long ivanov_lower_bound(const std::vector<IvanovTerm>& terms, long cross) {
  if (cross < 0) throw DomainError("ivanov_lower_bound: intersection numbers are non-negative");
  long sum = 0;
  for (const auto& t : terms) {
    if (t.twist_power == 0) throw DomainError("ivanov_lower_bound: twist power must be nonzero");
    if (t.meets_first < 0 || t.meets_second < 0)
      throw DomainError("ivanov_lower_bound: intersection numbers are non-negative");
    sum += (std::labs(t.twist_power) - 2) * t.meets_first * t.meets_second;
  }
  return sum - cross;
}

long min_power_n(long i_delta, long i_delta_prime, long cross_upper) {
  if (i_delta <= 0 || i_delta_prime <= 0) throw DomainError("min_power_n: intersection numbers must be positive");
  if (cross_upper < 0) throw DomainError("min_power_n: cross bound must be non-negative");
  const long product = i_delta * i_delta_prime;
  // (N - 2) * product >= cross_upper + 1
  const long steps = (cross_upper + 1 + product - 1) / product;
  return std::max(1L, steps + 2);
}

// ---------------------------------------------------------------------------
// Twisted concatenation

namespace {

TwistTuple lemma_block(const DataSet& data, int which) {
  const LemmaResult r = run_lemma_case(data, which);
  TwistTuple block(2);
  for (std::size_t i = 0; i + 1 < r.tuple.size(); ++i) block.push_back(r.tuple[i]);
  return block;
}

}  // namespace

TwistedScan scan_twisted_concatenation(const DataSet& data, long max_n) {
  if (max_n < 1) throw DomainError("scan_twisted_concatenation: max N must be positive");
  const TwistTuple d1 = lemma_block(data, 1);
  const TwistTuple d2 = lemma_block(data, 2);
  const TwistTuple d3 = lemma_block(data, 3);
  const HomologyClass gamma1 = chain_classes(2)[0];
  const std::vector<ConjugatedBlock> blocks = {{d1, 1}, {d2, 2}, {d3, 3}};

  TwistedScan scan;
  for (long n = 1; n <= max_n; ++n) {
    const TwistTuple t = twisted_concatenation(d1, blocks, gamma1, n);
    IntersectionMatrix m = matrix_of_tuple(t);
    scan.length = t.size();
    const bool ok = m.all_off_diagonal_nonzero();
    scan.matrix = std::move(m);
    if (ok) {
      scan.n = n;
      break;
    }
  }
  return scan;
}

VerificationReport verify_twisted_concatenation(const DataSet& data, long max_n) {
  const TwistedScan scan = scan_twisted_concatenation(data, max_n);
  VerificationReport rep;
  rep.name = "twisted-concat";
  std::ostringstream d;
  d << "tuple: D1 . T^N(D1) . T^2N(D2) . T^3N(D3), T = T_gamma1, D_i = q_i applied to A_i (gamma1 dropped)\n";
  d << "length: " << scan.length << ", scanned N = 1.." << max_n << '\n';
  if (scan.n) {
    d << "smallest N with every off-diagonal pairing nonzero: " << *scan.n << '\n';
  } else {
    const auto [i, j] = scan.matrix.first_zero_pair();
    d << "no N in range works; at N = " << max_n << " the first zero pair is (" << i + 1 << ", " << j + 1 << ")\n";
  }
  d << "pairwise nonzero algebraic intersection certifies pairwise intersecting curves\n";
  d << kHomologyCaveat;
  rep.detail = d.str();
  rep.passed = scan.n.has_value();
  return rep;
}

}  // namespace twistcalc

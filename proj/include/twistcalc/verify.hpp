#pragma once

// One-shot checkers for the genus-2 computations: the Hurwitz lemma on
// A_i . (gamma1), the chain relations, the two example families, and the
// integer bounds used by the twisted-concatenation argument.
//
// Every check runs at the level of H1, so a PASS is a necessary condition
// for the corresponding identity in Mod_2, never a proof of it: Torelli
// elements are invisible here.

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistcalc/hurwitz.hpp"
#include "twistcalc/words.hpp"

namespace twistcalc {

struct VerificationReport {
  std::string name;
  bool passed = false;
  /// Localizes a failure (first zero pair, residual matrix, offending class)
  /// or carries the main computed object on success.
  std::variant<std::monostate, IntMatrix, HomologyClass> witness;
  std::string detail;

  /// Deterministic multi-line rendering, ending in `RESULT <name> <PASS|FAIL>`.
  std::string render() const;
};

/// Shipped resources: tuples, move sequences and word files.
class DataSet {
 public:
  explicit DataSet(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $TWISTCALC_DATA_DIR when set, otherwise the directory fixed at build time.
  static DataSet installed();

  const std::filesystem::path& dir() const noexcept { return dir_; }
  /// Throws IoError if the file is absent; parse errors propagate as ParseError.
  TwistTuple tuple(const std::string& name) const;
  MoveSequence moves(const std::string& name) const;
  WordLibrary words(const std::string& name) const;
  std::filesystem::path path(const std::string& name) const;

 private:
  std::filesystem::path dir_;
};

struct LemmaResult {
  TwistTuple tuple;           // q_i applied at the sharp level
  IntersectionMatrix sharp;   // matrix_of_tuple of that tuple
  IntersectionMatrix flat;    // q_i applied at the flat level to M(A_i . gamma1)
};

/// Runs case 1, 2 or 3 at both levels.  Throws DomainError for other cases.
LemmaResult run_lemma_case(const DataSet& data, int which);
VerificationReport verify_lemma_case(const DataSet& data, int which);

/// chain4-pow5 -> -I, chain5-pow6 -> I, palindrome-sq -> I.
VerificationReport check_relation(const std::string& name);
const std::vector<std::string>& relation_names();

struct Example1Result {
  SymplecticMatrix p;                      // product of the five squared half-monodromies
  std::optional<HomologyClass> tau;        // solves T_tau^2 = P^-1
  SymplecticMatrix q;                      // sigma-free side of the second identity
  std::optional<HomologyClass> sigma;      // solves T_sigma^2 = Q
  std::size_t q_residual_rank = 0;         // rank(Q - I)
  bool q_residual_nilpotent = false;       // (Q - I)^2 = 0
  bool first_closes = false;               // T_tau^2 o P = I
  bool second_closes = false;              // Q o T_sigma^-2 = I
  SymplecticMatrix q_swapped;              // same with phi_1 and phi_2 exchanged
};

Example1Result run_example1(const WordLibrary& words);
VerificationReport example1_check(const WordLibrary& words);

struct Example2Result {
  SymplecticMatrix r;
  bool r_squared_identity = false;
  bool words_symplectic = false;
};

Example2Result run_example2(const WordLibrary& words);
VerificationReport example2_check(const WordLibrary& words);

struct IvanovTerm {
  long twist_power;         // r, nonzero
  long meets_first;         // Int(gamma1, alpha)
  long meets_second;        // Int(gamma2, alpha)
};

/// sum (|r| - 2) * i1 * i2 - cross.  Throws DomainError on r = 0 or negative counts.
long ivanov_lower_bound(const std::vector<IvanovTerm>& terms, long cross);

/// Smallest N >= 1 with (N - 2) * i * i' - cross >= 1.
long min_power_n(long i_delta, long i_delta_prime, long cross_upper);

struct TwistedScan {
  std::optional<long> n;              // smallest N that works, if any within range
  std::size_t length = 0;             // tuple length
  IntersectionMatrix matrix;          // the matrix at that N (or at max_n when none works)
};

/// Builds D_1 . conj(D_1, N) . conj(D_2, 2N) . conj(D_3, 3N), where D_i are the
/// first l_i entries of q_i applied to A_i . (gamma1) and conjugation is by
/// T_gamma1, and scans N = 1..max_n for all-nonzero off-diagonal pairings.
TwistedScan scan_twisted_concatenation(const DataSet& data, long max_n);
VerificationReport verify_twisted_concatenation(const DataSet& data, long max_n);

}  // namespace twistcalc

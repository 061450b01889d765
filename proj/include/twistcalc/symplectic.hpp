#pragma once

// Integer model of H1(S_g; Z): classes over the basis a1,b1,...,ag,bg,
// the intersection pairing, Dehn-twist transvections and twist words.
//
// Composition convention: a word (or tuple) w1 w2 ... wn denotes the map
// w1 o w2 o ... o wn, so the rightmost letter acts first.  Its matrix is
// the ordinary product M(w1) * M(w2) * ... * M(wn) acting on column vectors.

#include <optional>
#include <string>
#include <vector>

#include "twistcalc/int_matrix.hpp"

namespace twistcalc {

class HomologyClass {
 public:
  HomologyClass() = default;
  /// Throws DomainError when the coordinate count is zero or odd.
  explicit HomologyClass(std::vector<Integer> coords);
  HomologyClass(std::initializer_list<long> coords);

  static HomologyClass zero(unsigned genus);

  unsigned genus() const noexcept { return static_cast<unsigned>(coords_.size() / 2); }
  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// The representative of {x, -x} whose first nonzero coordinate is positive.
  HomologyClass sign_normalized() const;

  HomologyClass operator-() const;
  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  HomologyClass& operator*=(const Integer& s);

  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(const Integer& s, HomologyClass a) { return a *= s; }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  /// "(1,0,-2,3)"
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// The standard form J = diag([[0,1],[-1,0]], ...).
class SymplecticForm {
 public:
  explicit SymplecticForm(unsigned genus);
  unsigned genus() const noexcept { return genus_; }
  const IntMatrix& matrix() const noexcept { return j_; }

 private:
  unsigned genus_;
  IntMatrix j_;
};

/// A 2g x 2g integer matrix M with M^T J M = J.
class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(unsigned genus);
  /// Verifies the symplectic identity; throws InvariantError otherwise.
  static SymplecticMatrix from_entries(IntMatrix entries);

  unsigned genus() const noexcept { return static_cast<unsigned>(m_.rows() / 2); }
  const IntMatrix& entries() const noexcept { return m_; }

  HomologyClass apply(const HomologyClass& x) const;
  /// -J M^T J, exact.
  SymplecticMatrix inverse() const;
  SymplecticMatrix pow(long exponent) const;

  bool is_identity() const { return m_.is_identity(); }
  bool is_minus_identity() const { return m_.is_scalar(-1); }

  friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  explicit SymplecticMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;

  friend SymplecticMatrix transvection_matrix(const HomologyClass& delta, long exponent);
};

bool is_symplectic(const IntMatrix& m);

struct TwistLetter {
  HomologyClass generator;
  long exponent = 1;
  /// 1-based chain curve index when the letter came from a `g<i>` token.
  std::optional<unsigned> chain_index;
};

class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(unsigned genus) : genus_(genus) {}
  /// Throws DimensionError on genus mismatch, DomainError on a zero exponent.
  TwistWord(unsigned genus, std::vector<TwistLetter> letters);

  unsigned genus() const noexcept { return genus_; }
  const std::vector<TwistLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  void append(const TwistLetter& letter);
  void append(const TwistWord& word);
  /// Letters reversed with negated exponents.
  TwistWord inverse() const;
  /// Repetition; a negative count repeats the inverse.
  TwistWord power(long count) const;

 private:
  unsigned genus_ = 0;
  std::vector<TwistLetter> letters_;
};

/// x^T J y.  Throws DimensionError when the genera differ.
Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y);

/// Chain c1..c_{2g+1}: c1 = a1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1}, c_{2g+1} = a_g.
std::vector<HomologyClass> chain_classes(unsigned genus);

/// Image of x under T_delta^exponent: x + exponent * I(x, delta) * delta.
HomologyClass twist_apply(const HomologyClass& delta, const HomologyClass& x, long exponent = 1);

SymplecticMatrix transvection_matrix(const HomologyClass& delta, long exponent);

SymplecticMatrix evaluate_word(const TwistWord& word);

/// Class of the curve x followed around y: x - I(x,y) y.  Requires |I(x,y)| = 1.
HomologyClass triangle_class(const HomologyClass& x, const HomologyClass& y);

/// Solves M = transvection_matrix(s, power) for s.  Returns the zero class when
/// M = I and the sign-normalized s otherwise; nullopt when no such s exists.
std::optional<HomologyClass> derive_twist_class(const SymplecticMatrix& m, long power);

}  // namespace twistcalc

#pragma once

// Hurwitz moves on tuples of positive Dehn twists.
//
// A tuple (d1,...,dl) of oriented classes stands for (T_d1,...,T_dl).  The
// sharp level acts on the classes themselves; the flat level acts on the
// matrix of pairwise intersections m[i][j] = I(di, dj) through closed-form
// update rules, without ever looking at the classes.  Move indices are
// 1-based everywhere: L_k and R_k act on positions k and k+1.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twistcalc/symplectic.hpp"

namespace twistcalc {

enum class Side { L, R };

struct HurwitzMove {
  Side side = Side::L;
  std::size_t index = 1;  // 1-based, acts on (index, index + 1)

  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
  /// "L3" / "R12"
  std::string to_string() const;
};

class TwistTuple {
 public:
  explicit TwistTuple(unsigned genus) : genus_(genus) {}
  /// Throws DimensionError when an entry has a different genus.
  TwistTuple(unsigned genus, std::vector<HomologyClass> entries);

  unsigned genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<HomologyClass>& entries() const noexcept { return entries_; }
  const HomologyClass& operator[](std::size_t i) const { return entries_[i]; }

  void push_back(HomologyClass entry);
  /// Replaces the entry at 0-based position i.
  void set(std::size_t i, HomologyClass entry);

  friend bool operator==(const TwistTuple&, const TwistTuple&) = default;

 private:
  unsigned genus_;
  std::vector<HomologyClass> entries_;
};

/// Skew-symmetric integer matrix with zero diagonal.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  /// Throws InvariantError unless `m` is square, skew and zero on the diagonal.
  explicit IntersectionMatrix(IntMatrix m);
  static IntersectionMatrix zero(std::size_t size);

  std::size_t size() const noexcept { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& entries() const noexcept { return m_; }

  bool all_off_diagonal_nonzero() const;
  /// First (i, j), i < j, 0-based, with m[i][j] = 0; {size, size} when none.
  std::pair<std::size_t, std::size_t> first_zero_pair() const;

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  struct Unchecked {};
  IntersectionMatrix(IntMatrix m, Unchecked) : m_(std::move(m)) {}
  IntMatrix m_;

  friend IntersectionMatrix flat_move_unchecked(const IntersectionMatrix& m, HurwitzMove mv);
  friend IntersectionMatrix matrix_of_tuple(const TwistTuple& t);
};

using MoveSequence = std::vector<HurwitzMove>;

enum class Level { Sharp, Flat };

TwistTuple sharp_move(const TwistTuple& t, const HurwitzMove& mv);
IntersectionMatrix flat_move(const IntersectionMatrix& m, const HurwitzMove& mv);
/// Validates `m` first: InvariantError unless skew with zero diagonal.
IntersectionMatrix flat_move(const IntMatrix& m, const HurwitzMove& mv);
IntersectionMatrix flat_move_unchecked(const IntersectionMatrix& m, HurwitzMove mv);

IntersectionMatrix matrix_of_tuple(const TwistTuple& t);

/// Applies q left to right.  A move out of range throws BoundsError carrying
/// its 1-based position in q.
TwistTuple apply_sequence(const TwistTuple& t, const MoveSequence& q);
IntersectionMatrix apply_sequence(const IntersectionMatrix& m, const MoveSequence& q);

/// The inverse sequence: reversed, with L and R exchanged.
MoveSequence inverse_sequence(const MoveSequence& q);

enum class StandardTuple { A1, A2, A3 };

/// A1 = (c1..c5, c5..c1)^2, A2 = (c1,c2,c3,c4)^5, A3 = (c1,...,c5)^6 in genus 2.
TwistTuple standard_tuple(StandardTuple name);

TwistTuple concat(const TwistTuple& a, const TwistTuple& b);

/// M(d1) * ... * M(dl) with M(d) = transvection_matrix(d, 1).
SymplecticMatrix product_matrix(const TwistTuple& t);

/// Every entry x replaced by T_delta^power(x).
TwistTuple conjugate_tuple(const TwistTuple& t, const HomologyClass& delta, long power);

struct ConjugatedBlock {
  TwistTuple block;
  long multiplier;  // the block is conjugated by T_delta^(multiplier * N)
};

/// base . conj(block_1, m_1 N) . conj(block_2, m_2 N) ...
TwistTuple twisted_concatenation(const TwistTuple& base, const std::vector<ConjugatedBlock>& blocks,
                                 const HomologyClass& delta, long n);

}  // namespace twistcalc

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistcalc {

// Hurwitz orbits make entries grow exponentially in the number of moves
// (q1 already produces 92-bit intersections), so every exact quantity is a
// GMP integer.
using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar(long s) const;

  /// Rank over Q, computed by fraction-free Gaussian elimination.
  std::size_t rank() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& s);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// One line per row, entries comma separated (the matrix file format).
  std::string to_csv() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Integer power for square matrices; exponent must be non-negative.
IntMatrix power(const IntMatrix& m, unsigned exponent);

}  // namespace twistcalc

#include "twistcalc/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "twistcalc/errors.hpp"

namespace twistcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const { return is_scalar(1); }

bool IntMatrix::is_scalar(long s) const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? s : 0)) return false;
  return true;
}

std::size_t IntMatrix::rank() const {
  std::vector<mpq_class> a(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) a[i] = data_[i];
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (sgn(at(i, col)) == 0) continue;
      const mpq_class factor = at(i, col) / at(rank, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix difference of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product of incompatible shapes");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  if (!m.square()) throw DimensionError("power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace twistcalc

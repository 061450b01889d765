#include "twistcalc/hurwitz.hpp"

#include "twistcalc/errors.hpp"

namespace twistcalc {

TwistTuple::TwistTuple(unsigned genus, std::vector<HomologyClass> entries) : genus_(genus) {
  entries_.reserve(entries.size());
  for (auto& e : entries) push_back(std::move(e));
}

void TwistTuple::push_back(HomologyClass entry) {
  if (entry.genus() != genus_)
    throw DimensionError("tuple of genus " + std::to_string(genus_) + " given a class of genus " +
                         std::to_string(entry.genus()));
  entries_.push_back(std::move(entry));
}

void TwistTuple::set(std::size_t i, HomologyClass entry) {
  if (entry.genus() != genus_) throw DimensionError("tuple entry genus mismatch");
  entries_.at(i) = std::move(entry);
}

IntersectionMatrix::IntersectionMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw InvariantError("intersection matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (sgn(m_(i, i)) != 0) throw InvariantError("intersection matrix has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) throw InvariantError("intersection matrix is not skew-symmetric");
  }
}

IntersectionMatrix IntersectionMatrix::zero(std::size_t size) { return IntersectionMatrix(IntMatrix(size, size)); }

bool IntersectionMatrix::all_off_diagonal_nonzero() const { return first_zero_pair().first == size(); }

std::pair<std::size_t, std::size_t> IntersectionMatrix::first_zero_pair() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (sgn(m_(i, j)) == 0) return {i, j};
  return {size(), size()};
}

std::string HurwitzMove::to_string() const {
  return (side == Side::L ? "L" : "R") + std::to_string(index);
}

namespace {

void check_bounds(const HurwitzMove& mv, std::size_t length, std::size_t position) {
  if (mv.index < 1 || mv.index + 1 > length)
    throw BoundsError("move " + mv.to_string() + " out of range for a tuple of length " + std::to_string(length) +
                          (position ? " (move #" + std::to_string(position) + " of the sequence)" : ""),
                      position);
}

}  // namespace

TwistTuple sharp_move(const TwistTuple& t, const HurwitzMove& mv) {
  check_bounds(mv, t.size(), 0);
  const std::size_t i = mv.index - 1;
  TwistTuple out = t;
  if (mv.side == Side::L) {
    // (.., d_i, d_{i+1}, ..) -> (.., T_{d_i}(d_{i+1}), d_i, ..)
    out.set(i, twist_apply(t[i], t[i + 1], 1));
    out.set(i + 1, t[i]);
  } else {
    // (.., d_i, d_{i+1}, ..) -> (.., d_{i+1}, T_{d_{i+1}}^{-1}(d_i), ..)
    out.set(i, t[i + 1]);
    out.set(i + 1, twist_apply(t[i + 1], t[i], -1));
  }
  return out;
}

IntersectionMatrix flat_move_unchecked(const IntersectionMatrix& in, HurwitzMove mv) {
  const std::size_t l = in.size();
  check_bounds(mv, l, 0);
  const IntMatrix& m = in.m_;
  const std::size_t i = mv.index - 1;
  const std::size_t i1 = i + 1;
  IntMatrix out = m;

  out(i, i) = 0;
  out(i1, i1) = 0;
  out(i, i1) = m(i1, i);
  out(i1, i) = m(i, i1);
  if (mv.side == Side::L) {
    for (std::size_t k = 0; k < l; ++k) {
      if (k == i || k == i1) continue;
      out(i, k) = m(i1, k) + m(i1, i) * m(i, k);
      out(i1, k) = m(i, k);
      out(k, i) = m(k, i1) - m(i, i1) * m(k, i);
      out(k, i1) = m(k, i);
    }
  } else {
    for (std::size_t k = 0; k < l; ++k) {
      if (k == i || k == i1) continue;
      out(i, k) = m(i1, k);
      out(i1, k) = m(i, k) - m(i, i1) * m(i1, k);
      out(k, i) = m(k, i1);
      out(k, i1) = m(k, i) + m(i1, i) * m(k, i1);
    }
  }
  return IntersectionMatrix(std::move(out), IntersectionMatrix::Unchecked{});
}

IntersectionMatrix flat_move(const IntersectionMatrix& m, const HurwitzMove& mv) { return flat_move_unchecked(m, mv); }

IntersectionMatrix flat_move(const IntMatrix& m, const HurwitzMove& mv) {
  return flat_move_unchecked(IntersectionMatrix(m), mv);
}

IntersectionMatrix matrix_of_tuple(const TwistTuple& t) {
  const std::size_t l = t.size();
  IntMatrix m(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      m(i, j) = intersection_pairing(t[i], t[j]);
      m(j, i) = -m(i, j);
    }
  return IntersectionMatrix(std::move(m), IntersectionMatrix::Unchecked{});
}

TwistTuple apply_sequence(const TwistTuple& t, const MoveSequence& q) {
  for (std::size_t p = 0; p < q.size(); ++p) check_bounds(q[p], t.size(), p + 1);
  TwistTuple cur = t;
  for (const auto& mv : q) cur = sharp_move(cur, mv);
  return cur;
}

IntersectionMatrix apply_sequence(const IntersectionMatrix& m, const MoveSequence& q) {
  for (std::size_t p = 0; p < q.size(); ++p) check_bounds(q[p], m.size(), p + 1);
  IntersectionMatrix cur = m;
  for (const auto& mv : q) cur = flat_move_unchecked(cur, mv);
  return cur;
}

MoveSequence inverse_sequence(const MoveSequence& q) {
  MoveSequence inv;
  inv.reserve(q.size());
  for (auto it = q.rbegin(); it != q.rend(); ++it)
    inv.push_back(HurwitzMove{it->side == Side::L ? Side::R : Side::L, it->index});
  return inv;
}

TwistTuple standard_tuple(StandardTuple name) {
  const auto c = chain_classes(2);
  std::vector<int> pattern;
  int repeats = 0;
  switch (name) {
    case StandardTuple::A1:
      pattern = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
      repeats = 2;
      break;
    case StandardTuple::A2:
      pattern = {1, 2, 3, 4};
      repeats = 5;
      break;
    case StandardTuple::A3:
      pattern = {1, 2, 3, 4, 5};
      repeats = 6;
      break;
  }
  TwistTuple t(2);
  for (int r = 0; r < repeats; ++r)
    for (int idx : pattern) t.push_back(c[idx - 1]);
  return t;
}

TwistTuple concat(const TwistTuple& a, const TwistTuple& b) {
  if (a.genus() != b.genus()) throw DimensionError("concat: genus mismatch");
  TwistTuple out = a;
  for (const auto& e : b.entries()) out.push_back(e);
  return out;
}

SymplecticMatrix product_matrix(const TwistTuple& t) {
  SymplecticMatrix acc = SymplecticMatrix::identity(t.genus());
  for (const auto& e : t.entries()) acc = acc * transvection_matrix(e, 1);
  return acc;
}

TwistTuple conjugate_tuple(const TwistTuple& t, const HomologyClass& delta, long power) {
  if (delta.genus() != t.genus()) throw DimensionError("conjugate_tuple: genus mismatch");
  TwistTuple out(t.genus());
  for (const auto& e : t.entries()) out.push_back(twist_apply(delta, e, power));
  return out;
}

TwistTuple twisted_concatenation(const TwistTuple& base, const std::vector<ConjugatedBlock>& blocks,
                                 const HomologyClass& delta, long n) {
  if (n <= 0) throw DomainError("twisted_concatenation: N must be positive");
  TwistTuple out = base;
  for (const auto& b : blocks) out = concat(out, conjugate_tuple(b.block, delta, b.multiplier * n));
  return out;
}

}  // namespace twistcalc

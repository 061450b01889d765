#include "twistcalc/symplectic.hpp"

#include <sstream>

#include "twistcalc/errors.hpp"

namespace twistcalc {

namespace {

void require_same_genus(const HomologyClass& x, const HomologyClass& y, const char* op) {
  if (x.dimension() != y.dimension())
    throw DimensionError(std::string(op) + ": classes of genus " + std::to_string(x.genus()) +
                         " and " + std::to_string(y.genus()));
}

}  // namespace

// ---------------------------------------------------------------------------
// HomologyClass

HomologyClass::HomologyClass(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw DomainError("homology class needs 2g > 0 coordinates, got " + std::to_string(coords_.size()));
}

HomologyClass::HomologyClass(std::initializer_list<long> coords)
    : HomologyClass(std::vector<Integer>(coords.begin(), coords.end())) {}

HomologyClass HomologyClass::zero(unsigned genus) {
  if (genus == 0) throw DomainError("genus must be positive");
  return HomologyClass(std::vector<Integer>(2 * genus, Integer(0)));
}

bool HomologyClass::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

HomologyClass HomologyClass::sign_normalized() const {
  for (const auto& c : coords_) {
    if (sgn(c) > 0) return *this;
    if (sgn(c) < 0) return -*this;
  }
  return *this;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  require_same_genus(*this, other, "sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  require_same_genus(*this, other, "difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

HomologyClass& HomologyClass::operator*=(const Integer& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string HomologyClass::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i].get_str();
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// SymplecticForm / SymplecticMatrix

SymplecticForm::SymplecticForm(unsigned genus) : genus_(genus), j_(2 * genus, 2 * genus) {
  if (genus == 0) throw DomainError("genus must be positive");
  for (unsigned i = 0; i < genus; ++i) {
    j_(2 * i, 2 * i + 1) = 1;
    j_(2 * i + 1, 2 * i) = -1;
  }
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0 || m.rows() % 2 != 0) return false;
  const SymplecticForm form(static_cast<unsigned>(m.rows() / 2));
  return m.transpose() * form.matrix() * m == form.matrix();
}

SymplecticMatrix SymplecticMatrix::identity(unsigned genus) {
  if (genus == 0) throw DomainError("genus must be positive");
  return SymplecticMatrix(IntMatrix::identity(2 * genus));
}

SymplecticMatrix SymplecticMatrix::from_entries(IntMatrix entries) {
  if (!is_symplectic(entries)) throw InvariantError("matrix does not preserve the symplectic form");
  return SymplecticMatrix(std::move(entries));
}

HomologyClass SymplecticMatrix::apply(const HomologyClass& x) const {
  if (x.dimension() != m_.rows()) throw DimensionError("apply: genus mismatch");
  std::vector<Integer> out(x.dimension(), Integer(0));
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) out[i] += m_(i, j) * x[j];
  return HomologyClass(std::move(out));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const SymplecticForm form(genus());
  return SymplecticMatrix(-(form.matrix() * m_.transpose() * form.matrix()));
}

SymplecticMatrix SymplecticMatrix::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return SymplecticMatrix(power(m_, static_cast<unsigned>(exponent)));
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.m_.rows() != b.m_.rows()) throw DimensionError("product of symplectic matrices of different genus");
  return SymplecticMatrix(a.m_ * b.m_);
}

// ---------------------------------------------------------------------------
// TwistWord

TwistWord::TwistWord(unsigned genus, std::vector<TwistLetter> letters) : genus_(genus) {
  for (const auto& l : letters) append(l);
}

void TwistWord::append(const TwistLetter& letter) {
  if (letter.exponent == 0) throw DomainError("twist exponent must be nonzero");
  if (letter.generator.genus() != genus_) throw DimensionError("letter genus differs from word genus");
  letters_.push_back(letter);
}

void TwistWord::append(const TwistWord& word) {
  if (word.genus_ != genus_) throw DimensionError("word genus mismatch");
  letters_.insert(letters_.end(), word.letters_.begin(), word.letters_.end());
}

TwistWord TwistWord::inverse() const {
  TwistWord inv(genus_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    TwistLetter l = *it;
    l.exponent = -l.exponent;
    inv.letters_.push_back(std::move(l));
  }
  return inv;
}

TwistWord TwistWord::power(long count) const {
  const TwistWord base = count < 0 ? inverse() : *this;
  TwistWord out(genus_);
  for (long i = 0; i < (count < 0 ? -count : count); ++i) out.append(base);
  return out;
}

// ---------------------------------------------------------------------------
// Operations

Integer intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
  require_same_genus(x, y, "intersection_pairing");
  Integer sum = 0;
  for (std::size_t i = 0; i < x.dimension(); i += 2) sum += x[i] * y[i + 1] - x[i + 1] * y[i];
  return sum;
}

std::vector<HomologyClass> chain_classes(unsigned genus) {
  if (genus == 0) throw DomainError("chain_classes: genus must be positive");
  auto basis = [genus](unsigned index) {
    HomologyClass e = HomologyClass::zero(genus);
    std::vector<Integer> c = e.coords();
    c[index] = 1;
    return HomologyClass(std::move(c));
  };
  std::vector<HomologyClass> chain;
  chain.push_back(basis(0));
  for (unsigned i = 0; i < genus; ++i) {
    chain.push_back(basis(2 * i + 1));
    if (i + 1 < genus)
      chain.push_back(basis(2 * i) + basis(2 * i + 2));
    else
      chain.push_back(basis(2 * i));
  }
  return chain;
}

HomologyClass twist_apply(const HomologyClass& delta, const HomologyClass& x, long exponent) {
  require_same_genus(delta, x, "twist_apply");
  const Integer k = intersection_pairing(x, delta) * exponent;
  if (sgn(k) == 0) return x;
  return x + k * delta;
}

SymplecticMatrix transvection_matrix(const HomologyClass& delta, long exponent) {
  // M = I + k * delta (J delta)^T, since I(x, delta) = (J delta)^T x.
  const std::size_t n = delta.dimension();
  IntMatrix m = IntMatrix::identity(n);
  if (exponent == 0) return SymplecticMatrix(std::move(m));
  std::vector<Integer> j_delta(n);
  for (std::size_t i = 0; i < n; i += 2) {
    j_delta[i] = delta[i + 1];
    j_delta[i + 1] = -delta[i];
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) += exponent * delta[r] * j_delta[c];
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix evaluate_word(const TwistWord& word) {
  if (word.genus() == 0) throw DomainError("evaluate_word: word has no genus");
  SymplecticMatrix acc = SymplecticMatrix::identity(word.genus());
  for (const auto& letter : word.letters()) acc = acc * transvection_matrix(letter.generator, letter.exponent);
  return acc;
}

HomologyClass triangle_class(const HomologyClass& x, const HomologyClass& y) {
  const Integer p = intersection_pairing(x, y);
  if (abs(p) != 1)
    throw PreconditionError("triangle_class needs |I(x,y)| = 1, got I = " + p.get_str());
  return x - p * y;
}

std::optional<HomologyClass> derive_twist_class(const SymplecticMatrix& m, long power) {
  if (power <= 0) throw DomainError("derive_twist_class: power must be positive");
  const IntMatrix d = m.entries() - IntMatrix::identity(m.entries().rows());
  const unsigned genus = m.genus();
  if (d.is_zero()) return HomologyClass::zero(genus);

  // Every column of M - I = k I(., s) s is a multiple of s.
  const std::size_t n = d.rows();
  std::vector<Integer> column;
  for (std::size_t c = 0; c < n && column.empty(); ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) nonzero = nonzero || sgn(d(r, c)) != 0;
    if (!nonzero) continue;
    for (std::size_t r = 0; r < n; ++r) column.push_back(d(r, c));
  }
  Integer g = 0;
  for (const auto& v : column) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (auto& v : column) v /= g;
  const HomologyClass unit = HomologyClass(std::move(column)).sign_normalized();

  // Template R = unit (J unit)^T; require M - I = c R with c = power * m^2.
  const IntMatrix r = transvection_matrix(unit, 1).entries() - IntMatrix::identity(n);
  Integer c = 0;
  for (std::size_t i = 0; i < n && sgn(c) == 0; ++i)
    for (std::size_t j = 0; j < n && sgn(c) == 0; ++j)
      if (sgn(r(i, j)) != 0) {
        if (!mpz_divisible_p(d(i, j).get_mpz_t(), r(i, j).get_mpz_t())) return std::nullopt;
        c = d(i, j) / r(i, j);
      }
  if (sgn(c) == 0 || !(r * c == d)) return std::nullopt;
  if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(power))) return std::nullopt;
  const Integer square = c / power;
  if (sgn(square) <= 0 || !mpz_perfect_square_p(square.get_mpz_t())) return std::nullopt;
  const Integer multiple = sqrt(square);
  return multiple * unit;
}

}  // namespace twistcalc

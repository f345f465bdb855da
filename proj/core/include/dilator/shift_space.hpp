#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dilator/lattice.hpp"
#include "dilator/rational.hpp"

namespace dilator {

/// A product of k one-sided full shift spaces, factor i over the alphabet
/// {0, ..., d_i - 1}. The semigroup acts by the product shifts: a semigroup
/// element t drops the first t_i symbols of each factor, a d^t-to-1 covering.
class ShiftSystem {
 public:
  explicit ShiftSystem(std::vector<int> alphabets);

  int rank() const { return static_cast<int>(alphabets_.size()); }
  int alphabet(int factor) const { return alphabets_[static_cast<std::size_t>(factor)]; }
  const std::vector<int>& alphabets() const { return alphabets_; }

  bool operator==(const ShiftSystem& other) const = default;

 private:
  std::vector<int> alphabets_;
};

/// Finite prefix of a point: one finite string per factor. Words of length
/// >= n determine every cylinder function of depth <= n, so quantifying over
/// all words of a fixed length is exhaustive for cylinder data.
class Word {
 public:
  explicit Word(std::vector<std::vector<int>> symbols);
  static Word empty(int rank);

  int rank() const { return static_cast<int>(symbols_.size()); }
  const std::vector<int>& factor(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  LatticeElement lengths() const;

  /// First depth_i symbols of each factor. Throws if too short.
  Word truncated(const LatticeElement& depth) const;
  /// Drops the first t_i symbols of each factor (the shift by t).
  Word dropped(const LatticeElement& t) const;
  Word prepended(int factor, int symbol) const;
  /// prefix . w, factor by factor.
  Word prepend_word(const Word& prefix) const;

  /// Symbols as characters 0-9a-z, factors joined by '|'.
  std::string to_string() const;
  static Word parse(const std::string& text, const ShiftSystem& sys);

  bool operator==(const Word& other) const = default;

 private:
  std::vector<std::vector<int>> symbols_;
};

/// Deterministic lexicographic enumeration of all words with the given
/// per-factor lengths.
class WordSpace {
 public:
  WordSpace(const ShiftSystem& sys, LatticeElement lengths);

  std::size_t size() const { return size_; }
  const LatticeElement& lengths() const { return lengths_; }
  Word word_at(std::size_t index) const;
  std::size_t index_of(const Word& w) const;

 private:
  ShiftSystem sys_;
  LatticeElement lengths_;
  std::size_t size_;
};

/// Locally constant rational function on the product shift space: the value
/// depends only on the first depth_i symbols of each factor, tabulated on
/// the WordSpace of its depth. This is the exact model of the function
/// algebra; positivity means every table entry is >= 0.
class CylinderFunction {
 public:
  CylinderFunction(ShiftSystem sys, LatticeElement depth, std::vector<Rational> table);

  static CylinderFunction constant(const ShiftSystem& sys, const Rational& value);
  static CylinderFunction indicator(const ShiftSystem& sys, const Word& w);

  const ShiftSystem& system() const { return sys_; }
  const LatticeElement& depth() const { return depth_; }
  const std::vector<Rational>& table() const { return table_; }
  WordSpace word_space() const { return WordSpace(sys_, depth_); }

  /// Table lookup on the truncation of w. Throws if w is shorter than depth.
  Rational evaluate(const Word& w) const;

  /// Same function tabulated at a finer depth (componentwise >= current).
  CylinderFunction raised(const LatticeElement& new_depth) const;

  /// Pullback along the shift by t: x |-> f(shift^t x). Depth grows by t.
  CylinderFunction shift_pullback(const LatticeElement& t) const;

  /// Adjoint; the identity on rational scalars.
  CylinderFunction conjugated() const { return *this; }

  bool nonnegative() const;
  bool is_zero() const;

  /// Drops trailing coordinates the table does not depend on. Display aid
  /// only; equality is always decided at the join depth.
  CylinderFunction reduced() const;

  CylinderFunction& operator+=(const CylinderFunction& g);
  CylinderFunction& operator-=(const CylinderFunction& g);
  CylinderFunction& operator*=(const CylinderFunction& g);
  CylinderFunction& operator*=(const Rational& c);

  friend CylinderFunction operator+(CylinderFunction f, const CylinderFunction& g) { return f += g; }
  friend CylinderFunction operator-(CylinderFunction f, const CylinderFunction& g) { return f -= g; }
  friend CylinderFunction operator*(CylinderFunction f, const CylinderFunction& g) { return f *= g; }
  friend CylinderFunction operator*(const Rational& c, CylinderFunction f) { return f *= c; }

  /// Mathematical equality: compares tables at the join depth.
  bool operator==(const CylinderFunction& other) const;

 private:
  ShiftSystem sys_;
  LatticeElement depth_;
  std::vector<Rational> table_;
};

/// True iff f factors through dropping the first t symbols, i.e. f lies in
/// the range of the pullback by t. Decided by grouping the table on suffixes.
bool independent_of_prefix(const CylinderFunction& f, const LatticeElement& t);

/// The unique a with a.shift_pullback(t) == f, when it exists.
std::optional<CylinderFunction> shift_preimage(const CylinderFunction& f, const LatticeElement& t);

/// Entrywise quotient f/g at the join depth. Throws on a zero entry of g.
CylinderFunction pointwise_quotient(const CylinderFunction& f, const CylinderFunction& g);

/// Indicators of all words of the given depth; a partition of unity and a
/// linear basis for the depth-n table space.
std::vector<CylinderFunction> indicator_basis(const ShiftSystem& sys, const LatticeElement& depth);

}  // namespace dilator

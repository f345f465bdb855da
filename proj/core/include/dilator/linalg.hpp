#pragma once

#include <cstddef>
#include <vector>

#include "dilator/rational.hpp"

namespace dilator {

/// Dense exact-rational matrix with just enough elimination machinery for
/// span, membership, and intersection questions. Rank decisions are exact;
/// there are no thresholds anywhere.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Reduced row echelon form; fills pivot column indices when requested.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;

  /// Basis of the null space {u : A u = 0}, as vectors of length cols().
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Linear subspace of Q^n given by a column span, reduced to a canonical
/// basis so comparisons are deterministic.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> basis_;  // rows of an rref matrix
};

}  // namespace dilator

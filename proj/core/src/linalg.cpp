#include "dilator/linalg.hpp"

#include <stdexcept>

namespace dilator {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return RationalMatrix(0, 0);
  const std::size_t rows = cols.front().size();
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("ragged column set");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix m = *this;
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(&pivots);
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  // Vectors become rows; the rref rows are a canonical basis.
  RationalMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix r = m.rref(&pivots);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> row(ambient);
    for (std::size_t j = 0; j < ambient; ++j) row[j] = r.at(i, j);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
  // Reduce v against the rref basis rows.
  std::vector<Rational> r = v;
  for (const auto& row : basis_) {
    std::size_t lead = 0;
    while (lead < ambient_ && row[lead] == 0) ++lead;
    if (lead == ambient_) continue;
    if (r[lead] == 0) continue;
    const Rational factor = r[lead];
    for (std::size_t j = lead; j < ambient_; ++j) r[j] -= factor * row[j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
  // u in span(B1) and span(B2): solve B1 a - B2 b = 0 columnwise.
  RationalMatrix m(ambient_, basis_.size() + other.basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < other.basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i)
      m.at(i, basis_.size() + j) = -other.basis_[j][i];
  std::vector<std::vector<Rational>> vectors;
  for (const auto& u : m.kernel_basis()) {
    std::vector<Rational> v(ambient_, Rational(0));
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (std::size_t i = 0; i < ambient_; ++i) v[i] += u[j] * basis_[j][i];
    vectors.push_back(std::move(v));
  }
  return Subspace::span(ambient_, vectors);
}

}  // namespace dilator

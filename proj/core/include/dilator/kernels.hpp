#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dilator/rational.hpp"
#include "dilator/report.hpp"

namespace dilator {

/// Row family of rational probability vectors over a finite set Z, one row
/// per point of a quotient X of Z. Each row integrates functions on Z to a
/// function on X; this realizes exactly the positive unital maps between the
/// finite function algebras, and conditional expectations are the kernels
/// whose rows are supported inside their own fiber.
class FiniteKernel {
 public:
  FiniteKernel(std::vector<std::string> z_labels, std::vector<std::string> x_labels,
               std::vector<std::size_t> pi, std::vector<std::vector<Rational>> rows);

  static FiniteKernel from_json(const nlohmann::json& j);
  Json to_json() const;

  std::size_t z_size() const { return z_labels_.size(); }
  std::size_t x_size() const { return x_labels_.size(); }
  const std::string& z_label(std::size_t z) const { return z_labels_[z]; }
  const std::string& x_label(std::size_t x) const { return x_labels_[x]; }
  std::size_t pi(std::size_t z) const { return pi_[z]; }
  const std::vector<Rational>& row(std::size_t x) const { return rows_[x]; }

  /// The fiber weight of z inside its own fiber: row(pi(z)) at z.
  Rational weight(std::size_t z) const { return rows_[pi_[z]][z]; }

  /// Rows are probability vectors (entries in [0,1], sums exactly 1).
  bool rows_valid() const { return rows_valid_; }

  /// F(b)(x) = sum_z row_x(z) b(z). Throws unless the rows are probability
  /// vectors, since only those define a positive unital map.
  std::vector<Rational> apply(const std::vector<Rational>& b) const;

  /// Functions on X viewed on Z through the quotient map.
  std::vector<Rational> lift(const std::vector<Rational>& a) const;

  /// Rows are probability vectors: entries in [0,1], sums exactly 1.
  VerificationReport validate_rows() const;

  /// Support condition row by row, then the implied algebra laws verified
  /// on indicators: idempotence, the bimodule law, and fixing the range.
  VerificationReport is_conditional_expectation() const;

  struct FaithfulnessResult {
    bool faithful = false;
    /// Pointwise reciprocal weights when faithful; empty means infinite.
    std::vector<Rational> index;
    /// A z with weight zero; its indicator b satisfies F(b* b) = 0, b != 0.
    std::optional<std::size_t> witness_z;
  };

  /// On a finite discrete space, faithful iff every weight is positive.
  FaithfulnessResult faithfulness_and_index() const;

 private:
  std::vector<std::string> z_labels_, x_labels_;
  std::vector<std::size_t> pi_;
  std::vector<std::vector<Rational>> rows_;
  bool rows_valid_ = false;
};

/// Recovers the kernel rows from a positive unital map by evaluating it on
/// indicator functions; inverse of FiniteKernel::apply on finite spaces.
FiniteKernel kernel_from_map(std::vector<std::string> z_labels, std::vector<std::string> x_labels,
                             std::vector<std::size_t> pi,
                             const std::vector<std::vector<Rational>>& map_columns_on_indicators);

/// Full round-trip and law verification for one kernel; used by the CLI.
VerificationReport kernel_suite(const FiniteKernel& kernel);

}  // namespace dilator

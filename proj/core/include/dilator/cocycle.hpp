#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dilator/lattice.hpp"
#include "dilator/report.hpp"
#include "dilator/shift_space.hpp"

namespace dilator {

enum class CocycleMode { strict, relaxed };

std::string to_string(CocycleMode mode);
CocycleMode cocycle_mode_from_string(const std::string& text);

/// Raised when generator data is not a cocycle: two factorization orders of
/// the same semigroup element yield different weight tables.
class CocycleInconsistencyError : public std::runtime_error {
 public:
  CocycleInconsistencyError(const std::string& message, Json witness)
      : std::runtime_error(message), witness_(std::move(witness)) {}
  const Json& witness() const { return witness_; }

 private:
  Json witness_;
};

/// Weight data for the shift action: one generator table per factor, the
/// weight of prepending a symbol in that factor. Weights at higher levels
/// are products of generator weights along the orbit; normalization says
/// the weights over each fiber of the level-t shift sum to one.
///
/// Strict mode demands strictly positive weights (the faithful regime);
/// relaxed mode allows zeros and exists to exhibit non-faithful behavior.
class Cocycle {
 public:
  Cocycle(ShiftSystem sys, std::vector<CylinderFunction> generators, CocycleMode mode);

  const ShiftSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }
  const std::vector<CylinderFunction>& generators() const { return generators_; }
  const CylinderFunction& generator(int factor) const {
    return generators_[static_cast<std::size_t>(factor)];
  }
  CocycleMode mode() const { return mode_; }

  /// Exact normalization and positivity checks at generator level.
  /// Failures are report entries with witness words, never exceptions.
  VerificationReport validate() const;
  bool is_valid() const { return validate().all_ok(); }

  /// The level-t weight table, built along the canonical generator order
  /// (factor 0 steps first). Before mixing factors the pairwise exchange
  /// identities are checked exhaustively; since adjacent transpositions
  /// connect all factorization orders, their validity makes every order
  /// produce this same table. Throws CocycleInconsistencyError otherwise.
  CylinderFunction extend(const LatticeElement& t) const;

  /// The two-variable compatibility of weights with overlapping fibers:
  /// w(s,x) * W_r(C_x^s n C_y^r) == w(r,x) * W_s(C_x^r n C_y^s) for all
  /// levels r, s up to the bound and all words x, y, by exhaustive
  /// enumeration of the prefix-replacement sets.
  VerificationReport check_coherence(long long word_bound) const;

 private:
  ShiftSystem sys_;
  std::vector<CylinderFunction> generators_;
  CocycleMode mode_;

  void check_exchange_consistency() const;
  mutable bool exchange_checked_ = false;
};

}  // namespace dilator

#pragma once

#include "dilator/cocycle.hpp"
#include "dilator/lattice.hpp"
#include "dilator/report.hpp"
#include "dilator/shift_space.hpp"

namespace dilator {

/// The operator family attached to a shift system with weight data: the
/// pullback endomorphisms on the semigroup side, weighted fiber averages
/// (transfer operators) on the inverse side, the group-indexed family V
/// gluing both through the minimal decomposition, and the expectations
/// E_t = V_t V_{-t}. Everything acts exactly on cylinder functions.
class InteractionSystem {
 public:
  explicit InteractionSystem(Cocycle cocycle);

  const Cocycle& cocycle() const { return cocycle_; }
  const ShiftSystem& system() const { return cocycle_.system(); }
  int rank() const { return cocycle_.rank(); }
  const VerificationReport& validation() const { return validation_; }

  CylinderFunction one() const { return CylinderFunction::constant(system(), Rational(1)); }
  CylinderFunction omega(const LatticeElement& t) const { return cocycle_.extend(t); }

  /// L_t(b)(x) = sum over the level-t lifts y of x of omega(t,y) b(y).
  /// Positive, unital, and satisfies L_t(pullback_t(a) * b) = a * L_t(b).
  CylinderFunction transfer(const LatticeElement& t, const CylinderFunction& b) const;

  /// V_t for any group element: with t = s - r minimal, V_t = L_r after the
  /// pullback by s. Restricted to the semigroup this is the pullback action;
  /// on inverses it is the transfer family.
  CylinderFunction v_apply(const LatticeElement& t, const CylinderFunction& a) const;

  /// V computed through an explicit decomposition (r, s); used to confirm
  /// the result does not depend on the representative.
  CylinderFunction v_apply_via(const Decomposition& dec, const CylinderFunction& a) const;

  /// E_t = pullback_t after L_t: the weighted conditional expectation onto
  /// functions independent of the first t symbols.
  CylinderFunction expectation(const LatticeElement& t, const CylinderFunction& a) const;

  /// Pointwise reciprocal of omega(t); defined only for strict cocycles.
  CylinderFunction expectation_index(const LatticeElement& t) const;

 private:
  Cocycle cocycle_;
  VerificationReport validation_;
};

/// Exhaustive exact verification of the defining identities of the operator
/// family on the indicator basis of the given depth, for group elements in
/// the inf-ball of the given radius: identity at zero, both one-sided
/// composition laws, unitality, positivity, multiplicativity against the
/// range of the inverse operator, and independence of the decomposition.
VerificationReport axiom_suite(const InteractionSystem& is, long long depth_bound,
                               long long word_bound);

/// Structure of the associated partial action: ranges as exact subspaces,
/// the partial bijections and their inverses, composition extension,
/// commuting expectations, idempotence and range identification.
VerificationReport partial_action_suite(const InteractionSystem& is, long long depth_bound,
                                        long long word_bound);

/// Cross-system identity: V_t(a) = V'_{-r}((Index E'_r / Index E_r) *
/// pullback_s(a)) for t = s - r minimal. Both systems must share the shift
/// system and be strict.
VerificationReport compare_systems(const InteractionSystem& lhs, const InteractionSystem& rhs,
                                   long long depth_bound, long long word_bound);

}  // namespace dilator

#pragma once

#include "dilator/interaction.hpp"
#include "dilator/lattice.hpp"
#include "dilator/report.hpp"
#include "dilator/shift_space.hpp"

namespace dilator {

/// Element of the direct-limit algebra: the pair (level r, function a)
/// stands for the level-r translate of a under the inverse group action.
/// (r, a) and (r + u, pullback_u(a)) are the same element; equality is
/// decided by raising both sides to the join level and comparing tables,
/// which is always sound for cylinder data.
struct DilationElement {
  LatticeElement level;
  CylinderFunction fn;
};

/// The enveloping algebra carrying the group action beta that dilates the
/// semigroup pullback action, together with the conditional expectation F
/// back onto the embedded copy of the base algebra, computed through the
/// transfer operator at the representative's level.
class DilationAlgebra {
 public:
  explicit DilationAlgebra(InteractionSystem is);

  const InteractionSystem& interaction() const { return is_; }
  const ShiftSystem& system() const { return is_.system(); }
  int rank() const { return is_.rank(); }

  DilationElement embed(const CylinderFunction& a) const;
  DilationElement one() const { return embed(is_.one()); }
  DilationElement zero() const;

  /// Same element re-represented at a dominating level.
  DilationElement raise(const DilationElement& e, const LatticeElement& level) const;

  /// The group action: raise just enough that the level stays in the
  /// semigroup, then shift. Restricted to embedded elements and semigroup u
  /// this is the pullback action.
  DilationElement beta(const LatticeElement& u, const DilationElement& e) const;

  /// F((r, a)) = embed(L_r(a)); independent of the representative since
  /// transfer collapses exactly what raising inserts.
  DilationElement expectation(const DilationElement& e) const;

  /// F_t = beta_t F beta_{-t}, the expectation onto the translated copy.
  DilationElement translated_expectation(const LatticeElement& t, const DilationElement& e) const;

  DilationElement add(const DilationElement& a, const DilationElement& b) const;
  DilationElement sub(const DilationElement& a, const DilationElement& b) const;
  DilationElement mul(const DilationElement& a, const DilationElement& b) const;
  DilationElement scale(const Rational& c, const DilationElement& e) const;
  DilationElement conjugate(const DilationElement& e) const { return e; }

  bool equal(const DilationElement& a, const DilationElement& b) const;
  bool is_zero(const DilationElement& e) const { return e.fn.is_zero(); }
  /// Positivity is representative-wise: every table entry >= 0. Raising
  /// preserves the set of entries, so this does not depend on the level.
  bool is_nonnegative(const DilationElement& e) const { return e.fn.nonnegative(); }

  /// Mass the canonical spectrum-side measure over the base point x assigns
  /// to the level-r cylinder through the lift y: the level-r weight at y.
  /// y must be a word lift of x, i.e. dropping its first r symbols gives x.
  Rational fiber_measure(const Word& x, const LatticeElement& r, const Word& y) const;

 private:
  InteractionSystem is_;
};

/// The six identity families tying the dilation to the operator family it
/// extends: the dilation law F beta_t i = i V_t, commuting expectations,
/// unitality along orbits, the vanishing commutator residual, the induced
/// family closing back on V, and intersection of the embedded copy with its
/// translates.
VerificationReport dilation_suite(const DilationAlgebra& dil, long long depth_bound,
                                  long long word_bound);

/// Strict mode: certificate that no nonzero nonnegative element within the
/// level/depth bounds is annihilated by F (all extended weights positive).
/// Relaxed mode: searches for a concrete annihilated positive element and
/// reports it as a witness, or reports that none exists within bounds.
VerificationReport faithfulness(const DilationAlgebra& dil, long long level_bound,
                                long long depth_bound);

/// Consistency of the spectrum-side cylinder masses: lifts sum to one, and
/// integrating spanning elements against the masses reproduces F exactly.
VerificationReport fiber_measure_suite(const DilationAlgebra& dil, long long level_bound,
                                       long long depth_bound);

/// The dilation law alone forces the value of any conditional expectation on
/// spanning elements; recomputes F through that forcing path and compares.
VerificationReport expectation_forcing(const DilationAlgebra& dil, long long depth_bound,
                                       long long word_bound);

}  // namespace dilator

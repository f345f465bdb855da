#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

#include "dilator/rational.hpp"
#include "dilator/report.hpp"

namespace dilator {

/// Weight function on the circle for the squaring map, given on [0, pi] by
/// rational breakpoints (as multiples of pi) with linear interpolation, and
/// extended to (pi, 2pi] by w(t) = 1 - w(t - pi) so that the two points of
/// every fiber carry total weight one. Continuity forces w(pi) = 1 - w(0).
class PiecewiseLinearCocycle {
 public:
  /// Breakpoints strictly increasing from 0 to 1 (units of pi), values in
  /// [0,1]. Throws std::invalid_argument on any violation, including the
  /// endpoint compatibility w(pi) = 1 - w(0).
  PiecewiseLinearCocycle(std::vector<Rational> breakpoints, std::vector<Rational> values);

  /// Named presets: "w1" fair 1/2, "w2" linear ramp t/pi, "w3" flat zero on
  /// [0, pi/2] then the ramp 2t/pi - 1.
  static PiecewiseLinearCocycle preset(const std::string& name);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Exact value at a rational angle in units of pi, on [0, 2].
  Rational value_at(const Rational& angle_over_pi) const;

  /// Interpolated weight at an angle in radians (reduced mod 2 pi).
  double weight(double angle_radians) const;

  enum class Classification { index_finite, faithful_not_index_finite, not_faithful };

  /// Exact trichotomy by the zero set of the weight on the circle: empty,
  /// finite, or containing an interval. Piecewise linearity confines zeros
  /// to breakpoints unless a whole segment sits at 0 (or at 1, which the
  /// extension maps to an interval of zeros).
  Classification classify() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

std::string to_string(PiecewiseLinearCocycle::Classification c);

/// Two-point fiber average over the square roots of x with the given weight:
/// L(b)(x) = w(y) b(y) + w(-y) b(-y), y the principal root. Floating point;
/// requires |x| = 1 within 1e-12.
std::complex<double> transfer_numeric(const PiecewiseLinearCocycle& w,
                                      const std::function<std::complex<double>(std::complex<double>)>& b,
                                      std::complex<double> x);

/// Finitely supported exponent pattern for monomials on the inverse-limit
/// solenoid: the function z -> prod_k z(k)^{m(k)}. Since z(k) determines all
/// earlier coordinates by squaring, the monomial collapses to a single power
/// of z(mbar), with integer exponent c = sum_k m(k) d^{mbar - k}.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::map<int, long long> exponents);

  /// Parses "k:v" pairs, e.g. "0:1,1:2".
  static MonomialIndex parse(const std::string& text);

  const std::map<int, long long>& exponents() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  int mbar() const;
  long long collapsed_exponent(int degree = 2) const;

  MonomialIndex operator+(const MonomialIndex& other) const;
  MonomialIndex negated() const;
  std::string to_string() const;

 private:
  std::map<int, long long> m_;  // nonzero entries only
};

enum class SolenoidMode { sum, closed_form };

/// Expectation of the monomial onto the base circle under the fair weights
/// 1/d^n: sum mode averages over the d^mbar level-mbar roots of x; closed
/// form returns x^(c / d^mbar) when d^mbar divides c and zero otherwise
/// (roots of unity cancel). The closed form is the independent oracle for
/// the sum. root_offset relabels the principal root and must not change the
/// value. Requires |x| = 1 within 1e-12.
std::complex<double> solenoid_expectation(const MonomialIndex& m, std::complex<double> x,
                                          SolenoidMode mode, int degree = 2, int root_offset = 0);

}  // namespace dilator

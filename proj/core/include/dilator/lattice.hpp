#pragma once

#include <string>
#include <vector>

namespace dilator {

/// Element of the index group Z^k; semigroup elements are those with all
/// coordinates >= 0. The partial order r <= s means s - r lies in the
/// semigroup, which makes the semigroup part upward directed with joins
/// given by componentwise maxima.
///
/// This is the only index semigroup shipped. Everything downstream touches
/// it purely through the operations below, so an alternate directed
/// semigroup embedded in its enveloping group can be slotted in by
/// supplying the same surface: zero/unit/constant construction, addition
/// and subtraction in the group, the semigroup predicate and the order it
/// induces, join of semigroup elements, decompose into a minimal
/// (semigroup, semigroup) difference, and the two bounded enumerations.
class LatticeElement {
 public:
  explicit LatticeElement(std::vector<long long> coords);

  static LatticeElement zero(int rank);
  static LatticeElement unit(int rank, int axis);
  static LatticeElement constant(int rank, long long value);

  int rank() const { return static_cast<int>(coords_.size()); }
  long long operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<long long>& coords() const { return coords_; }

  bool is_semigroup() const;
  bool leq(const LatticeElement& other) const;
  long long norm_inf() const;
  /// Coordinate sum; the factorization length of a semigroup element.
  long long total() const;

  LatticeElement negated() const;
  std::string to_string() const;

  friend LatticeElement operator+(const LatticeElement& a, const LatticeElement& b);
  friend LatticeElement operator-(const LatticeElement& a, const LatticeElement& b);
  bool operator==(const LatticeElement& other) const = default;

 private:
  std::vector<long long> coords_;
};

/// Componentwise maximum; the least upper bound of two semigroup elements.
LatticeElement join(const LatticeElement& r, const LatticeElement& s);

/// Componentwise max(a, 0).
LatticeElement positive_part(const LatticeElement& a);

struct Decomposition {
  LatticeElement r;  // semigroup
  LatticeElement s;  // semigroup
};

/// Minimal decomposition t = s - r with r = max(-t, 0), s = max(t, 0).
/// Every other decomposition is (r + w, s + w) for a semigroup w.
Decomposition decompose(const LatticeElement& t);

/// All group elements with |t|_inf <= radius, in lexicographic order.
std::vector<LatticeElement> ball(long long radius, int rank);

/// All semigroup elements with every coordinate <= radius, lexicographic.
std::vector<LatticeElement> semigroup_box(long long radius, int rank);

}  // namespace dilator

#include "dilator/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dilator {

LatticeElement::LatticeElement(std::vector<long long> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("lattice element needs rank >= 1");
}

LatticeElement LatticeElement::zero(int rank) {
  return LatticeElement(std::vector<long long>(static_cast<std::size_t>(rank), 0));
}

LatticeElement LatticeElement::unit(int rank, int axis) {
  if (axis < 0 || axis >= rank) throw std::invalid_argument("axis out of range");
  std::vector<long long> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(axis)] = 1;
  return LatticeElement(std::move(c));
}

LatticeElement LatticeElement::constant(int rank, long long value) {
  return LatticeElement(std::vector<long long>(static_cast<std::size_t>(rank), value));
}

bool LatticeElement::is_semigroup() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c >= 0; });
}

bool LatticeElement::leq(const LatticeElement& other) const {
  return (other - *this).is_semigroup();
}

long long LatticeElement::norm_inf() const {
  long long m = 0;
  for (long long c : coords_) m = std::max(m, std::llabs(c));
  return m;
}

long long LatticeElement::total() const {
  long long s = 0;
  for (long long c : coords_) s += c;
  return s;
}

LatticeElement LatticeElement::negated() const {
  std::vector<long long> c(coords_);
  for (auto& v : c) v = -v;
  return LatticeElement(std::move(c));
}

std::string LatticeElement::to_string() const {
  if (rank() == 1) return std::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

namespace {
void require_same_rank(const LatticeElement& a, const LatticeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lattice rank mismatch");
}
}  // namespace

LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) {
  require_same_rank(a, b);
  std::vector<long long> c(a.coords());
  for (int i = 0; i < b.rank(); ++i) c[static_cast<std::size_t>(i)] += b[i];
  return LatticeElement(std::move(c));
}

LatticeElement operator-(const LatticeElement& a, const LatticeElement& b) {
  require_same_rank(a, b);
  std::vector<long long> c(a.coords());
  for (int i = 0; i < b.rank(); ++i) c[static_cast<std::size_t>(i)] -= b[i];
  return LatticeElement(std::move(c));
}

LatticeElement join(const LatticeElement& r, const LatticeElement& s) {
  require_same_rank(r, s);
  if (!r.is_semigroup() || !s.is_semigroup())
    throw std::invalid_argument("join requires semigroup elements");
  std::vector<long long> c(static_cast<std::size_t>(r.rank()));
  for (int i = 0; i < r.rank(); ++i) c[static_cast<std::size_t>(i)] = std::max(r[i], s[i]);
  return LatticeElement(std::move(c));
}

LatticeElement positive_part(const LatticeElement& a) {
  std::vector<long long> c(a.coords());
  for (auto& v : c) v = std::max(v, 0LL);
  return LatticeElement(std::move(c));
}

Decomposition decompose(const LatticeElement& t) {
  return Decomposition{positive_part(t.negated()), positive_part(t)};
}

namespace {
std::vector<LatticeElement> box(long long lo, long long hi, int rank) {
  std::vector<LatticeElement> out;
  std::vector<long long> cur(static_cast<std::size_t>(rank), lo);
  while (true) {
    out.emplace_back(cur);
    int i = rank - 1;
    while (i >= 0) {
      if (++cur[static_cast<std::size_t>(i)] <= hi) break;
      cur[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) return out;
  }
}
}  // namespace

std::vector<LatticeElement> ball(long long radius, int rank) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  return box(-radius, radius, rank);
}

std::vector<LatticeElement> semigroup_box(long long radius, int rank) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  return box(0, radius, rank);
}

}  // namespace dilator

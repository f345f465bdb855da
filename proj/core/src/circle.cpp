#include "dilator/circle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dilator {

PiecewiseLinearCocycle::PiecewiseLinearCocycle(std::vector<Rational> breakpoints,
                                               std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() || breakpoints_.size() < 2)
    throw std::invalid_argument("need matching breakpoint/value lists of size >= 2");
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
    throw std::invalid_argument("breakpoints must run from 0 to 1 (units of pi)");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (const auto& v : values_)
    if (v < 0 || v > 1) throw std::invalid_argument("values must lie in [0,1]");
  if (values_.back() != Rational(1) - values_.front())
    throw std::invalid_argument("continuity requires w(pi) = 1 - w(0)");
}

PiecewiseLinearCocycle PiecewiseLinearCocycle::preset(const std::string& name) {
  if (name == "w1")
    return PiecewiseLinearCocycle({Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
  if (name == "w2")
    return PiecewiseLinearCocycle({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  if (name == "w3")
    return PiecewiseLinearCocycle({Rational(0), Rational(1, 2), Rational(1)},
                                  {Rational(0), Rational(0), Rational(1)});
  throw std::invalid_argument("unknown preset '" + name + "' (expected w1, w2 or w3)");
}

Rational PiecewiseLinearCocycle::value_at(const Rational& angle_over_pi) const {
  Rational t = angle_over_pi;
  if (t < 0 || t > 2) throw std::invalid_argument("angle must lie in [0, 2] (units of pi)");
  bool flipped = false;
  if (t > 1) {
    t -= 1;
    flipped = true;
  }
  Rational base = 0;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (t >= breakpoints_[i] && t <= breakpoints_[i + 1]) {
      const Rational span = breakpoints_[i + 1] - breakpoints_[i];
      const Rational frac = (t - breakpoints_[i]) / span;
      base = values_[i] + frac * (values_[i + 1] - values_[i]);
      break;
    }
  }
  return flipped ? Rational(1) - base : base;
}

double PiecewiseLinearCocycle::weight(double angle_radians) const {
  const double two_pi = 2 * std::numbers::pi;
  double a = std::fmod(angle_radians, two_pi);
  if (a < 0) a += two_pi;
  double t = a / std::numbers::pi;
  bool flipped = false;
  if (t > 1) {
    t -= 1;
    flipped = true;
  }
  double base = static_cast<double>(values_.back());
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const double lo = static_cast<double>(breakpoints_[i]);
    const double hi = static_cast<double>(breakpoints_[i + 1]);
    if (t >= lo && t <= hi) {
      const double frac = (t - lo) / (hi - lo);
      base = static_cast<double>(values_[i]) +
             frac * (static_cast<double>(values_[i + 1]) - static_cast<double>(values_[i]));
      break;
    }
  }
  return flipped ? 1.0 - base : base;
}

PiecewiseLinearCocycle::Classification PiecewiseLinearCocycle::classify() const {
  bool has_interval = false;
  bool has_zero = false;
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] == 0 && values_[i + 1] == 0) has_interval = true;  // zero segment
    if (values_[i] == 1 && values_[i + 1] == 1) has_interval = true;  // extension zero segment
  }
  for (const auto& v : values_)
    if (v == 0 || v == 1) has_zero = true;
  if (has_interval) return Classification::not_faithful;
  if (has_zero) return Classification::faithful_not_index_finite;
  return Classification::index_finite;
}

std::string to_string(PiecewiseLinearCocycle::Classification c) {
  switch (c) {
    case PiecewiseLinearCocycle::Classification::index_finite: return "index_finite";
    case PiecewiseLinearCocycle::Classification::faithful_not_index_finite:
      return "faithful_not_index_finite";
    case PiecewiseLinearCocycle::Classification::not_faithful: return "not_faithful";
  }
  return "unknown";
}

namespace {
void require_unit_modulus(std::complex<double> x) {
  if (std::abs(std::abs(x) - 1.0) > 1e-12)
    throw std::domain_error("input must have unit modulus");
}
}  // namespace

std::complex<double> transfer_numeric(
    const PiecewiseLinearCocycle& w,
    const std::function<std::complex<double>(std::complex<double>)>& b, std::complex<double> x) {
  require_unit_modulus(x);
  const std::complex<double> y = std::sqrt(x);
  const std::complex<double> y2 = -y;
  return w.weight(std::arg(y)) * b(y) + w.weight(std::arg(y2)) * b(y2);
}

MonomialIndex::MonomialIndex(std::map<int, long long> exponents) {
  for (const auto& [k, v] : exponents) {
    if (k < 0) throw std::invalid_argument("monomial positions must be >= 0");
    if (v != 0) m_[k] = v;
  }
}

MonomialIndex MonomialIndex::parse(const std::string& text) {
  std::map<int, long long> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("monomial entries look like 'k:v', got '" + item + "'");
    const int k = std::stoi(item.substr(0, colon));
    const long long v = std::stoll(item.substr(colon + 1));
    if (m.count(k)) throw std::invalid_argument("duplicate monomial position " + std::to_string(k));
    m[k] = v;
  }
  return MonomialIndex(std::move(m));
}

int MonomialIndex::mbar() const {
  if (m_.empty()) return 0;
  return m_.rbegin()->first;
}

long long MonomialIndex::collapsed_exponent(int degree) const {
  const int top = mbar();
  long long c = 0;
  for (const auto& [k, v] : m_) {
    long long scale = 1;
    for (int i = 0; i < top - k; ++i) scale *= degree;
    c += v * scale;
  }
  return c;
}

MonomialIndex MonomialIndex::operator+(const MonomialIndex& other) const {
  std::map<int, long long> m = m_;
  for (const auto& [k, v] : other.m_) m[k] += v;
  return MonomialIndex(std::move(m));
}

MonomialIndex MonomialIndex::negated() const {
  std::map<int, long long> m;
  for (const auto& [k, v] : m_) m[k] = -v;
  return MonomialIndex(std::move(m));
}

std::string MonomialIndex::to_string() const {
  if (m_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : m_) {
    if (!out.empty()) out += ",";
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out;
}

std::complex<double> solenoid_expectation(const MonomialIndex& m, std::complex<double> x,
                                          SolenoidMode mode, int degree, int root_offset) {
  require_unit_modulus(x);
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  const int top = m.mbar();
  long long fiber = 1;
  for (int i = 0; i < top; ++i) fiber *= degree;
  const long long c = m.collapsed_exponent(degree);

  if (mode == SolenoidMode::closed_form) {
    if (c % fiber != 0) return {0.0, 0.0};
    const double e = static_cast<double>(c / fiber);
    return std::pow(x, std::complex<double>(e, 0.0));
  }

  const double two_pi = 2 * std::numbers::pi;
  const double phi = std::arg(x) + two_pi * static_cast<double>(root_offset);
  std::complex<double> sum{0.0, 0.0};
  for (long long j = 0; j < fiber; ++j) {
    const double angle = (phi + two_pi * static_cast<double>(j)) / static_cast<double>(fiber);
    const std::complex<double> root = std::polar(1.0, angle);
    sum += std::pow(root, std::complex<double>(static_cast<double>(c), 0.0));
  }
  return sum / static_cast<double>(fiber);
}

}  // namespace dilator

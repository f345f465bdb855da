#include "dilator/cocycle.hpp"

#include <stdexcept>

namespace dilator {

std::string to_string(CocycleMode mode) {
  return mode == CocycleMode::strict ? "strict" : "relaxed";
}

CocycleMode cocycle_mode_from_string(const std::string& text) {
  if (text == "strict") return CocycleMode::strict;
  if (text == "relaxed") return CocycleMode::relaxed;
  throw std::invalid_argument("mode must be 'strict' or 'relaxed', got '" + text + "'");
}

Cocycle::Cocycle(ShiftSystem sys, std::vector<CylinderFunction> generators, CocycleMode mode)
    : sys_(std::move(sys)), generators_(std::move(generators)), mode_(mode) {
  if (generators_.size() != static_cast<std::size_t>(sys_.rank()))
    throw std::invalid_argument("need exactly one generator table per factor");
  for (const auto& g : generators_)
    if (!(g.system() == sys_))
      throw std::invalid_argument("generator table lives on the wrong shift system");
}

VerificationReport Cocycle::validate() const {
  VerificationReport report;
  for (int i = 0; i < rank(); ++i) {
    const CylinderFunction& gen = generator(i);
    const WordSpace ws = gen.word_space();
    Json params{{"factor", i}, {"entries", ws.size()}};

    bool range_ok = true;
    for (std::size_t j = 0; j < ws.size() && range_ok; ++j) {
      const Rational& v = gen.table()[j];
      if (v < 0 || v > 1) {
        range_ok = false;
        report.add_fail("values_in_range", params,
                        Json{{"word", ws.word_at(j).to_string()}, {"value", format_rational(v)}});
      }
    }
    if (range_ok) report.add_pass("values_in_range", params);

    if (mode_ == CocycleMode::strict) {
      bool positive = true;
      for (std::size_t j = 0; j < ws.size() && positive; ++j) {
        if (gen.table()[j] <= 0) {
          positive = false;
          report.add_fail("strict_positivity", params,
                          Json{{"word", ws.word_at(j).to_string()},
                               {"value", format_rational(gen.table()[j])}});
        }
      }
      if (positive) report.add_pass("strict_positivity", params);
    }

    // Fiber sums over one prepended symbol in factor i must be exactly 1.
    std::vector<long long> need(gen.depth().coords());
    need[static_cast<std::size_t>(i)] = std::max(need[static_cast<std::size_t>(i)] - 1, 0LL);
    const WordSpace points(sys_, LatticeElement(need));
    bool normalized = true;
    Json norm_params{{"factor", i}, {"words", points.size()}};
    for (std::size_t j = 0; j < points.size() && normalized; ++j) {
      const Word x = points.word_at(j);
      Rational sum = 0;
      for (int c = 0; c < sys_.alphabet(i); ++c) sum += gen.evaluate(x.prepended(i, c));
      if (sum != 1) {
        normalized = false;
        report.add_fail("normalization", norm_params,
                        Json{{"word", x.to_string()}, {"sum", format_rational(sum)}});
      }
    }
    if (normalized) report.add_pass("normalization", norm_params);
  }
  return report;
}

void Cocycle::check_exchange_consistency() const {
  if (exchange_checked_) return;
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) {
      const LatticeElement e_i = LatticeElement::unit(rank(), i);
      const LatticeElement e_j = LatticeElement::unit(rank(), j);
      const CylinderFunction lhs = generator(i) * generator(j).shift_pullback(e_i);
      const CylinderFunction rhs = generator(j) * generator(i).shift_pullback(e_j);
      if (!(lhs == rhs)) {
        const LatticeElement d = join(lhs.depth(), rhs.depth());
        const CylinderFunction a = lhs.raised(d);
        const CylinderFunction b = rhs.raised(d);
        const WordSpace ws(sys_, d);
        for (std::size_t w = 0; w < ws.size(); ++w) {
          if (a.table()[w] != b.table()[w]) {
            throw CocycleInconsistencyError(
                "generator order changes the extended weight table",
                Json{{"factors", Json::array({i, j})},
                     {"word", ws.word_at(w).to_string()},
                     {"order_ij", format_rational(a.table()[w])},
                     {"order_ji", format_rational(b.table()[w])}});
          }
        }
      }
    }
  }
  exchange_checked_ = true;
}

CylinderFunction Cocycle::extend(const LatticeElement& t) const {
  if (t.rank() != rank()) throw std::invalid_argument("level rank mismatch");
  if (!t.is_semigroup()) throw std::invalid_argument("extend needs a semigroup element");
  int factors_used = 0;
  for (int i = 0; i < rank(); ++i)
    if (t[i] > 0) ++factors_used;
  if (factors_used >= 2) check_exchange_consistency();

  CylinderFunction result = CylinderFunction::constant(sys_, Rational(1));
  LatticeElement partial = LatticeElement::zero(rank());
  for (int i = 0; i < rank(); ++i) {
    for (long long step = 0; step < t[i]; ++step) {
      result *= generator(i).shift_pullback(partial);
      partial = partial + LatticeElement::unit(rank(), i);
    }
  }
  return result;
}

namespace {

/// Sum of weight over { z : z == x after prefix s, z == y after prefix r },
/// with x, y, z words of equal lengths. The set is a union of free prefix
/// choices of length min(r, s) per factor over a fixed tail; it is empty
/// iff x and y disagree somewhere past max(r, s).
Rational constrained_fiber_sum(const ShiftSystem& sys, const CylinderFunction& weight,
                               const Word& x, const LatticeElement& s, const Word& y,
                               const LatticeElement& r) {
  const LatticeElement lengths = x.lengths();
  const int k = sys.rank();
  std::vector<std::vector<int>> tail(static_cast<std::size_t>(k));
  std::vector<long long> free_len(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const long long li = lengths[i];
    const long long mi = std::min(r[i], s[i]);
    free_len[static_cast<std::size_t>(i)] = mi;
    auto& ti = tail[static_cast<std::size_t>(i)];
    for (long long j = mi; j < li; ++j) {
      const bool from_x = j >= s[i];  // position j (0-based) is beyond prefix s
      const bool from_y = j >= r[i];
      const int xv = x.factor(i)[static_cast<std::size_t>(j)];
      const int yv = y.factor(i)[static_cast<std::size_t>(j)];
      if (from_x && from_y && xv != yv) return Rational(0);
      ti.push_back(from_x ? xv : yv);
    }
  }
  const WordSpace prefixes(sys, LatticeElement(free_len));
  const Word tail_word{std::vector<std::vector<int>>(tail)};
  Rational sum = 0;
  for (std::size_t p = 0; p < prefixes.size(); ++p)
    sum += weight.evaluate(tail_word.prepend_word(prefixes.word_at(p)));
  return sum;
}

}  // namespace

VerificationReport Cocycle::check_coherence(long long word_bound) const {
  VerificationReport report;
  const int k = rank();
  for (const LatticeElement& r : semigroup_box(word_bound, k)) {
    for (const LatticeElement& s : semigroup_box(word_bound, k)) {
      const CylinderFunction wr = extend(r);
      const CylinderFunction ws = extend(s);
      const LatticeElement len = join(r, s) + join(wr.depth(), ws.depth());
      const WordSpace points(sys_, len);
      Json params{{"r", r.coords()}, {"s", s.coords()}, {"word_pairs", points.size() * points.size()}};
      bool ok = true;
      for (std::size_t xi = 0; xi < points.size() && ok; ++xi) {
        const Word x = points.word_at(xi);
        for (std::size_t yi = 0; yi < points.size() && ok; ++yi) {
          const Word y = points.word_at(yi);
          const Rational lhs = ws.evaluate(x) * constrained_fiber_sum(sys_, wr, x, s, y, r);
          const Rational rhs = wr.evaluate(x) * constrained_fiber_sum(sys_, ws, x, r, y, s);
          if (lhs != rhs) {
            ok = false;
            report.add_fail("coherence", params,
                            Json{{"x", x.to_string()},
                                 {"y", y.to_string()},
                                 {"lhs", format_rational(lhs)},
                                 {"rhs", format_rational(rhs)}});
          }
        }
      }
      if (ok) report.add_pass("coherence", params);
    }
  }
  return report;
}

}  // namespace dilator

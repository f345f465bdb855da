#include "dilator/dilation.hpp"

#include <functional>
#include <stdexcept>

#include "dilator/linalg.hpp"
#include "dilator/system_io.hpp"

namespace dilator {

DilationAlgebra::DilationAlgebra(InteractionSystem is) : is_(std::move(is)) {}

DilationElement DilationAlgebra::embed(const CylinderFunction& a) const {
  return DilationElement{LatticeElement::zero(rank()), a};
}

DilationElement DilationAlgebra::zero() const {
  return embed(CylinderFunction::constant(system(), Rational(0)));
}

DilationElement DilationAlgebra::raise(const DilationElement& e, const LatticeElement& level) const {
  if (!e.level.leq(level)) throw std::invalid_argument("raise: level must dominate");
  const LatticeElement w = level - e.level;
  return DilationElement{level, e.fn.shift_pullback(w)};
}

DilationElement DilationAlgebra::beta(const LatticeElement& u, const DilationElement& e) const {
  const LatticeElement w = positive_part(u - e.level);
  const DilationElement lifted = raise(e, e.level + w);
  return DilationElement{lifted.level - u, lifted.fn};
}

DilationElement DilationAlgebra::expectation(const DilationElement& e) const {
  return embed(is_.transfer(e.level, e.fn));
}

DilationElement DilationAlgebra::translated_expectation(const LatticeElement& t,
                                                        const DilationElement& e) const {
  return beta(t, expectation(beta(t.negated(), e)));
}

namespace {
LatticeElement join_levels(const DilationElement& a, const DilationElement& b) {
  return join(a.level, b.level);
}
}  // namespace

DilationElement DilationAlgebra::add(const DilationElement& a, const DilationElement& b) const {
  const LatticeElement l = join_levels(a, b);
  return DilationElement{l, raise(a, l).fn + raise(b, l).fn};
}

DilationElement DilationAlgebra::sub(const DilationElement& a, const DilationElement& b) const {
  const LatticeElement l = join_levels(a, b);
  return DilationElement{l, raise(a, l).fn - raise(b, l).fn};
}

DilationElement DilationAlgebra::mul(const DilationElement& a, const DilationElement& b) const {
  const LatticeElement l = join_levels(a, b);
  return DilationElement{l, raise(a, l).fn * raise(b, l).fn};
}

DilationElement DilationAlgebra::scale(const Rational& c, const DilationElement& e) const {
  return DilationElement{e.level, c * e.fn};
}

bool DilationAlgebra::equal(const DilationElement& a, const DilationElement& b) const {
  const LatticeElement l = join_levels(a, b);
  return raise(a, l).fn == raise(b, l).fn;
}

Rational DilationAlgebra::fiber_measure(const Word& x, const LatticeElement& r,
                                        const Word& y) const {
  if (!r.is_semigroup()) throw std::invalid_argument("fiber level must be a semigroup element");
  if (!(y.lengths() == x.lengths() + r) || !(y.dropped(r) == x))
    throw std::invalid_argument("y is not a level-r lift of x");
  return is_.omega(r).evaluate(y);
}

namespace {

class Family {
 public:
  Family(std::string name, Json params) : name_(std::move(name)), params_(std::move(params)) {}

  void check(bool pass, const std::function<Json()>& witness) {
    ++instances_;
    if (!pass) {
      ++failures_;
      if (failures_ == 1) witness_ = witness();
    }
  }

  void report_into(VerificationReport& report) const {
    Json p = params_.is_null() ? Json::object() : params_;
    p["instances"] = instances_;
    if (failures_ == 0) {
      report.add_pass(name_, p);
    } else {
      p["failures"] = failures_;
      report.add_fail(name_, p, witness_);
    }
  }

 private:
  std::string name_;
  Json params_;
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  Json witness_;
};

}  // namespace

VerificationReport dilation_suite(const DilationAlgebra& dil, long long depth_bound,
                                  long long word_bound) {
  VerificationReport report;
  const InteractionSystem& is = dil.interaction();
  const ShiftSystem& sys = dil.system();
  const int k = dil.rank();
  const LatticeElement depth = LatticeElement::constant(k, depth_bound);
  const std::vector<CylinderFunction> basis = indicator_basis(sys, depth);
  const WordSpace basis_words(sys, depth);
  const std::vector<LatticeElement> group_ball = ball(word_bound, k);
  const std::vector<LatticeElement> levels = semigroup_box(word_bound, k);
  const Json bounds{{"depth", depth_bound}, {"word_bound", word_bound}};

  const auto basis_name = [&](std::size_t i) { return basis_words.word_at(i).to_string(); };

  {
    // i V_t = F beta_t i on the embedded copy.
    Family fam("dilation_law", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const DilationElement lhs = dil.expectation(dil.beta(t, dil.embed(basis[i])));
        const DilationElement rhs = dil.embed(is.v_apply(t, basis[i]));
        fam.check(dil.equal(lhs, rhs), [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_name(i)},
                      {"lhs", dilation_to_json(lhs)},
                      {"rhs", dilation_to_json(rhs)}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // F F_t = F_t F on the spanning set.
    Family fam("commuting_expectations", bounds);
    for (const auto& t : group_ball) {
      for (const auto& r : levels) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const DilationElement e{r, basis[i]};
          const DilationElement lhs = dil.expectation(dil.translated_expectation(t, e));
          const DilationElement rhs = dil.translated_expectation(t, dil.expectation(e));
          fam.check(dil.equal(lhs, rhs), [&] {
            return Json{{"t", t.coords()},
                        {"level", r.coords()},
                        {"basis", basis_name(i)},
                        {"FFt", dilation_to_json(lhs)},
                        {"FtF", dilation_to_json(rhs)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    // F(beta_t(1)) = 1 along the whole orbit.
    Family fam("orbit_unitality", bounds);
    for (const auto& t : group_ball) {
      const DilationElement img = dil.expectation(dil.beta(t, dil.one()));
      fam.check(dil.equal(img, dil.one()),
                [&] { return Json{{"t", t.coords()}, {"image", dilation_to_json(img)}}; });
    }
    fam.report_into(report);
  }

  {
    // F((FF_t - F_tF)(b)^* (FF_t - F_tF)(b)) = 0 on the spanning set.
    Family fam("commutator_residual", bounds);
    for (const auto& t : group_ball) {
      for (const auto& r : levels) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const DilationElement e{r, basis[i]};
          const DilationElement g = dil.sub(dil.expectation(dil.translated_expectation(t, e)),
                                            dil.translated_expectation(t, dil.expectation(e)));
          const DilationElement residual = dil.expectation(dil.mul(dil.conjugate(g), g));
          fam.check(dil.is_zero(residual), [&] {
            return Json{{"t", t.coords()},
                        {"level", r.coords()},
                        {"basis", basis_name(i)},
                        {"residual", dilation_to_json(residual)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    // The family t -> F beta_t embed lands in the embedded copy and equals V.
    Family fam("induced_family_matches", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const DilationElement h = dil.expectation(dil.beta(t, dil.embed(basis[i])));
        const bool embedded = h.level == LatticeElement::zero(k);
        const bool matches = embedded && h.fn == is.v_apply(t, basis[i]);
        fam.check(matches, [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_name(i)},
                      {"value", dilation_to_json(h)}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // embed(A) meets beta_t(embed(A)) exactly in the embedded fixed space of
    // V_t V_{-t}, which is the depth-capped model of embed(A_t). The
    // translated copy uses a deeper truncation so the cap never cuts into
    // the intersection on the embedded side.
    Family fam("embedded_intersection", bounds);
    const LatticeElement R = LatticeElement::constant(k, word_bound);
    const std::vector<CylinderFunction> deep_basis =
        indicator_basis(sys, LatticeElement::constant(k, depth_bound + word_bound));
    for (const auto& t : group_ball) {
      std::vector<CylinderFunction> emb, translated;
      for (const auto& f : basis) emb.push_back(dil.raise(dil.embed(f), R).fn);
      for (const auto& g : deep_basis) translated.push_back(dil.raise(dil.beta(t, dil.embed(g)), R).fn);

      // Fixed space of V_t V_{-t} on the depth-D slice.
      std::vector<CylinderFunction> residuals;
      LatticeElement op_ambient = depth;
      for (const auto& f : basis) {
        CylinderFunction r = is.v_apply(t, is.v_apply(t.negated(), f)) - f;
        op_ambient = join(op_ambient, r.depth());
        residuals.push_back(std::move(r));
      }
      std::vector<std::vector<Rational>> cols;
      cols.reserve(residuals.size());
      for (const auto& r : residuals) cols.push_back(r.raised(op_ambient).table());
      std::vector<CylinderFunction> fixed;
      for (const auto& c : RationalMatrix::from_columns(cols).kernel_basis()) {
        CylinderFunction e = CylinderFunction::constant(sys, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (c[i] != 0) e += c[i] * basis[i];
        fixed.push_back(dil.raise(dil.embed(e), R).fn);
      }

      LatticeElement ambient = R;
      for (const auto& f : emb) ambient = join(ambient, f.depth());
      for (const auto& f : translated) ambient = join(ambient, f.depth());
      for (const auto& f : fixed) ambient = join(ambient, f.depth());
      const std::size_t n = WordSpace(sys, ambient).size();
      const auto span_of = [&](const std::vector<CylinderFunction>& fns) {
        std::vector<std::vector<Rational>> vecs;
        vecs.reserve(fns.size());
        for (const auto& f : fns) vecs.push_back(f.raised(ambient).table());
        return Subspace::span(n, vecs);
      };
      const Subspace meet = span_of(emb).intersect(span_of(translated));
      const Subspace expected = span_of(fixed);
      fam.check(meet == expected, [&] {
        return Json{{"t", t.coords()},
                    {"intersection_dim", meet.dim()},
                    {"expected_dim", expected.dim()}};
      });
    }
    fam.report_into(report);
  }

  return report;
}

VerificationReport faithfulness(const DilationAlgebra& dil, long long level_bound,
                                long long depth_bound) {
  VerificationReport report;
  const InteractionSystem& is = dil.interaction();
  const ShiftSystem& sys = dil.system();
  const int k = dil.rank();
  const Json bounds{{"level_bound", level_bound}, {"depth_bound", depth_bound}};

  if (is.cocycle().mode() == CocycleMode::strict) {
    Json level_data = Json::array();
    std::size_t spanning_checked = 0;
    for (const auto& r : semigroup_box(level_bound, k)) {
      const CylinderFunction w = is.omega(r);
      Rational min_weight = w.table().front();
      std::size_t argmin = 0;
      for (std::size_t i = 1; i < w.table().size(); ++i) {
        if (w.table()[i] < min_weight) {
          min_weight = w.table()[i];
          argmin = i;
        }
      }
      if (min_weight <= 0) {
        report.add_fail("faithfulness_certificate", bounds,
                        Json{{"level", r.coords()},
                             {"word", w.word_space().word_at(argmin).to_string()},
                             {"weight", format_rational(min_weight)}});
        return report;
      }
      level_data.push_back(Json{{"level", r.coords()}, {"min_weight", format_rational(min_weight)}});
      // Positive weights make every fiber term contribute: spot-check that
      // F(b^* b) keeps a positive entry for spanning indicators b.
      for (const auto& f : indicator_basis(sys, LatticeElement::constant(k, depth_bound))) {
        const DilationElement b{r, f};
        const DilationElement fb = dil.expectation(dil.mul(dil.conjugate(b), b));
        ++spanning_checked;
        bool positive_entry = false;
        for (const auto& v : fb.fn.table()) {
          if (v > 0) {
            positive_entry = true;
            break;
          }
        }
        if (!positive_entry) {
          report.add_fail("faithfulness_certificate", bounds,
                          Json{{"level", r.coords()}, {"note", "annihilated spanning indicator"}});
          return report;
        }
      }
    }
    Json data{{"levels", level_data}, {"spanning_elements_checked", spanning_checked}};
    report.add_certificate("faithfulness_certificate", bounds, data);
    return report;
  }

  // Relaxed mode: search for a nonzero nonnegative b with F(b^* b) = 0.
  for (long long d = 0; d <= depth_bound; ++d) {
    for (const auto& r : semigroup_box(level_bound, k)) {
      const WordSpace words(sys, LatticeElement::constant(k, d));
      for (std::size_t i = 0; i < words.size(); ++i) {
        const CylinderFunction f = CylinderFunction::indicator(sys, words.word_at(i));
        const DilationElement b{r, f};
        const DilationElement fb = dil.expectation(dil.mul(dil.conjugate(b), b));
        if (dil.is_zero(fb) && !dil.is_zero(b)) {
          report.add_witness("faithfulness_witness", bounds,
                             Json{{"level", r.coords()},
                                  {"word", words.word_at(i).to_string()},
                                  {"element", dilation_to_json(b)},
                                  {"element_nonzero", true},
                                  {"element_nonnegative", dil.is_nonnegative(b)},
                                  {"F_of_b_star_b_is_zero", true}});
          return report;
        }
      }
    }
  }
  report.add_pass("faithfulness_search", bounds);
  report.checks.back().details = Json{{"note", "no annihilated positive element within bounds"}};
  return report;
}

VerificationReport fiber_measure_suite(const DilationAlgebra& dil, long long level_bound,
                                       long long depth_bound) {
  VerificationReport report;
  const InteractionSystem& is = dil.interaction();
  const ShiftSystem& sys = dil.system();
  const int k = dil.rank();
  const LatticeElement depth = LatticeElement::constant(k, depth_bound);
  const std::vector<CylinderFunction> basis = indicator_basis(sys, depth);
  const WordSpace basis_words(sys, depth);
  const Json bounds{{"level_bound", level_bound}, {"depth_bound", depth_bound}};

  Family sums("fiber_masses_sum_to_one", bounds);
  Family integrals("expectation_via_fiber_masses", bounds);
  for (const auto& r : semigroup_box(level_bound, k)) {
    const CylinderFunction w = is.omega(r);
    std::vector<long long> xl(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      xl[static_cast<std::size_t>(i)] = std::max(depth_bound, std::max(w.depth()[i] - r[i], 0LL));
    const WordSpace points(sys, LatticeElement(xl));
    const WordSpace prefixes(sys, r);

    for (std::size_t xi = 0; xi < points.size(); ++xi) {
      const Word x = points.word_at(xi);
      Rational total = 0;
      for (std::size_t p = 0; p < prefixes.size(); ++p)
        total += dil.fiber_measure(x, r, x.prepend_word(prefixes.word_at(p)));
      sums.check(total == 1, [&] {
        return Json{{"level", r.coords()}, {"x", x.to_string()}, {"sum", format_rational(total)}};
      });
    }

    // Integrating a level r' <= r spanning element against the level-r
    // masses must reproduce F exactly.
    for (const auto& rp : semigroup_box(level_bound, k)) {
      if (!rp.leq(r)) continue;
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const DilationElement b{rp, basis[bi]};
        const DilationElement direct = dil.expectation(b);
        for (std::size_t xi = 0; xi < points.size(); ++xi) {
          const Word x = points.word_at(xi);
          Rational integral = 0;
          for (std::size_t p = 0; p < prefixes.size(); ++p) {
            const Word y = x.prepend_word(prefixes.word_at(p));
            integral += dil.fiber_measure(x, r, y) * basis[bi].evaluate(y.dropped(r - rp));
          }
          integrals.check(integral == direct.fn.evaluate(x), [&] {
            return Json{{"level", r.coords()},
                        {"element_level", rp.coords()},
                        {"basis", basis_words.word_at(bi).to_string()},
                        {"x", x.to_string()},
                        {"integral", format_rational(integral)},
                        {"expectation", format_rational(direct.fn.evaluate(x))}};
          });
        }
      }
    }
  }
  sums.report_into(report);
  integrals.report_into(report);
  return report;
}

VerificationReport expectation_forcing(const DilationAlgebra& dil, long long depth_bound,
                                       long long word_bound) {
  VerificationReport report;
  const InteractionSystem& is = dil.interaction();
  const ShiftSystem& sys = dil.system();
  const int k = dil.rank();
  const std::vector<CylinderFunction> basis =
      indicator_basis(sys, LatticeElement::constant(k, depth_bound));
  const WordSpace basis_words(sys, LatticeElement::constant(k, depth_bound));
  const Json bounds{{"depth", depth_bound}, {"word_bound", word_bound}};

  Family fam("forcing_determines_expectation", bounds);
  for (const auto& r : semigroup_box(word_bound, k)) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const DilationElement e{r, basis[i]};
      // (r, a) is beta_{-r}(embed(a)), so the dilation law pins F on it.
      const bool representation = dil.equal(dil.beta(r.negated(), dil.embed(basis[i])), e);
      const DilationElement forced = dil.embed(is.v_apply(r.negated(), basis[i]));
      const DilationElement direct = dil.expectation(e);
      fam.check(representation && dil.equal(forced, direct), [&] {
        return Json{{"level", r.coords()},
                    {"basis", basis_words.word_at(i).to_string()},
                    {"forced", dilation_to_json(forced)},
                    {"direct", dilation_to_json(direct)}};
      });
    }
  }
  fam.report_into(report);
  return report;
}

}  // namespace dilator

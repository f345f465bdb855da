#include "dilator/interaction.hpp"

#include <functional>
#include <stdexcept>

#include "dilator/linalg.hpp"

namespace dilator {

InteractionSystem::InteractionSystem(Cocycle cocycle)
    : cocycle_(std::move(cocycle)), validation_(cocycle_.validate()) {}

CylinderFunction InteractionSystem::transfer(const LatticeElement& t,
                                             const CylinderFunction& b) const {
  if (!t.is_semigroup()) throw std::invalid_argument("transfer needs a semigroup level");
  const CylinderFunction w = omega(t);
  std::vector<long long> rd(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i)
    rd[static_cast<std::size_t>(i)] = std::max(std::max(b.depth()[i], w.depth()[i]) - t[i], 0LL);
  const LatticeElement result_depth{std::vector<long long>(rd)};
  const WordSpace out(system(), result_depth);
  const WordSpace prefixes(system(), t);
  std::vector<Rational> table(out.size(), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Word x = out.word_at(i);
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
      const Word y = x.prepend_word(prefixes.word_at(p));
      table[i] += w.evaluate(y) * b.evaluate(y);
    }
  }
  return CylinderFunction(system(), result_depth, std::move(table));
}

CylinderFunction InteractionSystem::v_apply(const LatticeElement& t,
                                            const CylinderFunction& a) const {
  return v_apply_via(decompose(t), a);
}

CylinderFunction InteractionSystem::v_apply_via(const Decomposition& dec,
                                                const CylinderFunction& a) const {
  return transfer(dec.r, a.shift_pullback(dec.s));
}

CylinderFunction InteractionSystem::expectation(const LatticeElement& t,
                                                const CylinderFunction& a) const {
  if (!t.is_semigroup()) throw std::invalid_argument("expectation needs a semigroup level");
  return transfer(t, a).shift_pullback(t);
}

CylinderFunction InteractionSystem::expectation_index(const LatticeElement& t) const {
  if (cocycle_.mode() != CocycleMode::strict)
    throw std::invalid_argument("expectation index requires a strict cocycle");
  return pointwise_quotient(one(), omega(t));
}

namespace {

/// One identity family checked over many instances; reports aggregate counts
/// and the first failing instance as witness.
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

LatticeElement join_depths(const std::vector<CylinderFunction>& fns, LatticeElement seed) {
  for (const auto& f : fns) seed = join(seed, f.depth());
  return seed;
}

Subspace span_at(const ShiftSystem& sys, const std::vector<CylinderFunction>& fns,
                 const LatticeElement& depth) {
  std::vector<std::vector<Rational>> vectors;
  vectors.reserve(fns.size());
  for (const auto& f : fns) vectors.push_back(f.raised(depth).table());
  return Subspace::span(WordSpace(sys, depth).size(), vectors);
}

Json function_witness(const CylinderFunction& f) {
  Json table = Json::object();
  const WordSpace ws = f.word_space();
  for (std::size_t i = 0; i < ws.size(); ++i)
    table[ws.word_at(i).to_string()] = format_rational(f.table()[i]);
  return Json{{"depth", f.depth().coords()}, {"table", table}};
}

}  // namespace

VerificationReport axiom_suite(const InteractionSystem& is, long long depth_bound,
                               long long word_bound) {
  VerificationReport report;
  const ShiftSystem& sys = is.system();
  const int k = is.rank();
  const LatticeElement depth = LatticeElement::constant(k, depth_bound);
  const std::vector<CylinderFunction> basis = indicator_basis(sys, depth);
  const WordSpace basis_words(sys, depth);
  const std::vector<LatticeElement> group_ball = ball(word_bound, k);
  const CylinderFunction one = is.one();
  const Json bounds{{"depth", depth_bound}, {"word_bound", word_bound}};

  const auto basis_name = [&](std::size_t i) { return basis_words.word_at(i).to_string(); };

  {
    Family fam("v_zero_identity", bounds);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const bool pass = is.v_apply(LatticeElement::zero(k), basis[i]) == basis[i];
      fam.check(pass, [&] { return Json{{"basis", basis_name(i)}}; });
    }
    fam.report_into(report);
  }

  {
    Family fam("partial_representation_left", bounds);
    for (const auto& s : group_ball) {
      for (const auto& t : group_ball) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const CylinderFunction lhs = is.v_apply(s.negated(), is.v_apply(s, is.v_apply(t, basis[i])));
          const CylinderFunction rhs = is.v_apply(s.negated(), is.v_apply(s + t, basis[i]));
          fam.check(lhs == rhs, [&] {
            return Json{{"s", s.coords()},
                        {"t", t.coords()},
                        {"basis", basis_name(i)},
                        {"lhs", function_witness(lhs)},
                        {"rhs", function_witness(rhs)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    Family fam("partial_representation_right", bounds);
    for (const auto& s : group_ball) {
      for (const auto& t : group_ball) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const CylinderFunction lhs = is.v_apply(s, is.v_apply(t, is.v_apply(t.negated(), basis[i])));
          const CylinderFunction rhs = is.v_apply(s + t, is.v_apply(t.negated(), basis[i]));
          fam.check(lhs == rhs, [&] {
            return Json{{"s", s.coords()},
                        {"t", t.coords()},
                        {"basis", basis_name(i)},
                        {"lhs", function_witness(lhs)},
                        {"rhs", function_witness(rhs)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    Family fam("unitality", bounds);
    for (const auto& t : group_ball) {
      const CylinderFunction img = is.v_apply(t, one);
      fam.check(img == one, [&] {
        return Json{{"t", t.coords()}, {"image", function_witness(img)}};
      });
    }
    fam.report_into(report);
  }

  {
    Family fam("positivity", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction img = is.v_apply(t, basis[i]);
        fam.check(img.nonnegative(), [&] {
          return Json{{"t", t.coords()}, {"basis", basis_name(i)}, {"image", function_witness(img)}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // Multiplicativity against the range of the inverse operator, both
    // orders of the product.
    Family fam("multiplicativity_on_inverse_range", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction a = is.v_apply(t.negated(), basis[i]);
        const CylinderFunction va = is.v_apply(t, a);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const CylinderFunction vb = is.v_apply(t, basis[j]);
          const bool left = is.v_apply(t, a * basis[j]) == va * vb;
          const bool right = is.v_apply(t, basis[j] * a) == vb * va;
          fam.check(left && right, [&] {
            return Json{{"t", t.coords()},
                        {"range_basis", basis_name(i)},
                        {"basis", basis_name(j)},
                        {"order", left ? "right" : "left"}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    Family fam("decomposition_independence", bounds);
    const std::vector<LatticeElement> shifts = semigroup_box(word_bound, k);
    for (const auto& t : group_ball) {
      const Decomposition minimal = decompose(t);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction canonical = is.v_apply(t, basis[i]);
        for (const auto& w : shifts) {
          const Decomposition shifted{minimal.r + w, minimal.s + w};
          const CylinderFunction other = is.v_apply_via(shifted, basis[i]);
          fam.check(other == canonical, [&] {
            return Json{{"t", t.coords()},
                        {"shift", w.coords()},
                        {"basis", basis_name(i)},
                        {"canonical", function_witness(canonical)},
                        {"shifted", function_witness(other)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  return report;
}

VerificationReport partial_action_suite(const InteractionSystem& is, long long depth_bound,
                                        long long word_bound) {
  VerificationReport report;
  const ShiftSystem& sys = is.system();
  const int k = is.rank();
  const LatticeElement depth = LatticeElement::constant(k, depth_bound);
  const std::vector<CylinderFunction> basis = indicator_basis(sys, depth);
  const WordSpace basis_words(sys, depth);
  const std::vector<LatticeElement> group_ball = ball(word_bound, k);
  const std::vector<LatticeElement> sg_box = semigroup_box(word_bound, k);
  const Json bounds{{"depth", depth_bound}, {"word_bound", word_bound}};

  const auto images_of = [&](const LatticeElement& t) {
    std::vector<CylinderFunction> out;
    out.reserve(basis.size());
    for (const auto& f : basis) out.push_back(is.v_apply(t, f));
    return out;
  };

  {
    // For semigroup levels the range must be exactly the functions that do
    // not depend on the first t symbols.
    Family fam("range_is_prefix_independent_subspace", bounds);
    for (const auto& t : sg_box) {
      const std::vector<CylinderFunction> images = images_of(t);
      const LatticeElement ambient = join_depths(images, join(depth, t));
      const Subspace range = span_at(sys, images, ambient);
      std::vector<CylinderFunction> pulled;
      for (const auto& e : indicator_basis(sys, ambient - t)) pulled.push_back(e.shift_pullback(t));
      const Subspace expected = span_at(sys, pulled, ambient);
      fam.check(range == expected, [&] {
        return Json{{"t", t.coords()},
                    {"range_dim", range.dim()},
                    {"expected_dim", expected.dim()}};
      });
    }
    fam.report_into(report);
  }

  {
    // gamma_{-t} gamma_t is the identity on the domain, checked on the
    // spanning generators V_{-t}(basis) of the domain subalgebra.
    Family fam("partial_bijection_inverse", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction g = is.v_apply(t.negated(), basis[i]);
        const CylinderFunction back = is.v_apply(t.negated(), is.v_apply(t, g));
        fam.check(back == g, [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_words.word_at(i).to_string()},
                      {"generator", function_witness(g)},
                      {"round_trip", function_witness(back)}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // gamma_t is injective on the truncated domain: the image span keeps the
    // dimension of the domain span.
    Family fam("partial_bijection_injective", bounds);
    for (const auto& t : group_ball) {
      const std::vector<CylinderFunction> dom_gens = images_of(t.negated());
      std::vector<CylinderFunction> mapped;
      mapped.reserve(dom_gens.size());
      for (const auto& g : dom_gens) mapped.push_back(is.v_apply(t, g));
      LatticeElement ambient = join_depths(dom_gens, depth);
      ambient = join_depths(mapped, ambient);
      const Subspace domain = span_at(sys, dom_gens, ambient);
      const Subspace image = span_at(sys, mapped, ambient);
      fam.check(domain.dim() == image.dim(), [&] {
        return Json{{"t", t.coords()}, {"domain_dim", domain.dim()}, {"image_dim", image.dim()}};
      });
    }
    fam.report_into(report);
  }

  {
    // gamma_t gamma_{-t} fixes the generators of the range subalgebra, so
    // gamma_t maps onto it.
    Family fam("partial_bijection_fixes_range", bounds);
    for (const auto& t : group_ball) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction range_gen = is.v_apply(t, basis[i]);
        const CylinderFunction back = is.v_apply(t, is.v_apply(t.negated(), range_gen));
        fam.check(back == range_gen, [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_words.word_at(i).to_string()},
                      {"generator", function_witness(range_gen)},
                      {"round_trip", function_witness(back)}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // gamma_{s+t} extends gamma_s gamma_t: on the exactly computed domain
    // {c in A_{-t} : gamma_t(c) in A_{-s}}, both give the same value and c
    // lies in A_{-(s+t)}.
    Family fam("composition_extension", bounds);
    for (const auto& s : group_ball) {
      for (const auto& t : group_ball) {
        const std::vector<CylinderFunction> dom_gens = images_of(t.negated());
        std::vector<CylinderFunction> mapped;
        for (const auto& g : dom_gens) mapped.push_back(is.v_apply(t, g));
        const std::vector<CylinderFunction> target_gens = images_of(s.negated());
        LatticeElement ambient = join_depths(mapped, depth);
        ambient = join_depths(target_gens, ambient);
        const Subspace target = span_at(sys, target_gens, ambient);

        // Kernel of [mapped | -target_basis] gives the coefficient vectors
        // of domain elements.
        std::vector<std::vector<Rational>> cols;
        for (const auto& g : mapped) cols.push_back(g.raised(ambient).table());
        for (const auto& b : target.basis()) {
          std::vector<Rational> neg(b);
          for (auto& v : neg) v = -v;
          cols.push_back(std::move(neg));
        }
        const RationalMatrix m = RationalMatrix::from_columns(cols);
        const std::vector<CylinderFunction> sum_gens = images_of((s + t).negated());
        for (const auto& u : m.kernel_basis()) {
          CylinderFunction c = CylinderFunction::constant(sys, Rational(0));
          bool nonzero = false;
          for (std::size_t j = 0; j < dom_gens.size(); ++j) {
            if (u[j] == 0) continue;
            c += u[j] * dom_gens[j];
            nonzero = true;
          }
          if (!nonzero || c.is_zero()) continue;
          const CylinderFunction via_composite = is.v_apply(s, is.v_apply(t, c));
          const CylinderFunction via_sum = is.v_apply(s + t, c);
          LatticeElement amb2 = join_depths(sum_gens, c.depth());
          const bool in_sum_domain = span_at(sys, sum_gens, amb2).contains(c.raised(amb2).table());
          fam.check(via_composite == via_sum && in_sum_domain, [&] {
            return Json{{"s", s.coords()},
                        {"t", t.coords()},
                        {"element", function_witness(c)},
                        {"composite", function_witness(via_composite)},
                        {"direct", function_witness(via_sum)},
                        {"in_domain_of_sum", in_sum_domain}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    Family fam("expectations_commute", bounds);
    for (const auto& r : sg_box) {
      for (const auto& s : sg_box) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const CylinderFunction rs = is.expectation(r, is.expectation(s, basis[i]));
          const CylinderFunction sr = is.expectation(s, is.expectation(r, basis[i]));
          fam.check(rs == sr, [&] {
            return Json{{"r", r.coords()},
                        {"s", s.coords()},
                        {"basis", basis_words.word_at(i).to_string()},
                        {"E_r_E_s", function_witness(rs)},
                        {"E_s_E_r", function_witness(sr)}};
          });
        }
      }
    }
    fam.report_into(report);
  }

  {
    Family fam("expectation_idempotent", bounds);
    for (const auto& t : sg_box) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction once = is.expectation(t, basis[i]);
        fam.check(is.expectation(t, once) == once, [&] {
          return Json{{"t", t.coords()}, {"basis", basis_words.word_at(i).to_string()}};
        });
      }
    }
    fam.report_into(report);
  }

  {
    // The range of E_t is exactly the prefix-independent functions: every
    // image drops its dependence on the first t symbols, and every pullback
    // is fixed.
    Family fam("expectation_range", bounds);
    for (const auto& t : sg_box) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CylinderFunction img = is.expectation(t, basis[i]);
        fam.check(independent_of_prefix(img, t), [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_words.word_at(i).to_string()},
                      {"image", function_witness(img)}};
        });
        const CylinderFunction pulled = basis[i].shift_pullback(t);
        fam.check(is.expectation(t, pulled) == pulled, [&] {
          return Json{{"t", t.coords()},
                      {"basis", basis_words.word_at(i).to_string()},
                      {"pullback_not_fixed", true}};
        });
      }
    }
    fam.report_into(report);
  }

  return report;
}

VerificationReport compare_systems(const InteractionSystem& lhs, const InteractionSystem& rhs,
                                   long long depth_bound, long long word_bound) {
  if (!(lhs.system() == rhs.system()))
    throw std::invalid_argument("compared systems must share the shift system");
  if (lhs.cocycle().mode() != CocycleMode::strict || rhs.cocycle().mode() != CocycleMode::strict)
    throw std::invalid_argument("comparison requires strict cocycles");

  VerificationReport report;
  const ShiftSystem& sys = lhs.system();
  const int k = lhs.rank();
  const LatticeElement depth = LatticeElement::constant(k, depth_bound);
  const std::vector<CylinderFunction> basis = indicator_basis(sys, depth);
  const WordSpace basis_words(sys, depth);
  const Json bounds{{"depth", depth_bound}, {"word_bound", word_bound}};

  Family fam("index_transport_identity", bounds);
  for (const auto& t : ball(word_bound, k)) {
    const Decomposition dec = decompose(t);
    // Index E'_r / Index E_r is the weight ratio omega_lhs(r) / omega_rhs(r).
    const CylinderFunction ratio = pointwise_quotient(lhs.omega(dec.r), rhs.omega(dec.r));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const CylinderFunction left = lhs.v_apply(t, basis[i]);
      const CylinderFunction right = rhs.transfer(dec.r, ratio * basis[i].shift_pullback(dec.s));
      fam.check(left == right, [&] {
        return Json{{"t", t.coords()},
                    {"basis", basis_words.word_at(i).to_string()},
                    {"lhs", function_witness(left)},
                    {"rhs", function_witness(right)}};
      });
    }
  }
  fam.report_into(report);
  return report;
}

}  // namespace dilator

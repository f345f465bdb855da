#include <doctest.h>

#include <random>

#include "dilator/interaction.hpp"
#include "test_util.hpp"

using namespace dilator;
using namespace dilator::test;

namespace {

/// Brute-force transfer oracle: enumerate the level-t prefixes and sum the
/// pointwise product of the plain generator-weight product with the input.
Rational oracle_transfer_value(const Cocycle& c, long long t, const CylinderFunction& b,
                               const Word& x) {
  const ShiftSystem& sys = c.system();
  const WordSpace prefixes(sys, LatticeElement({t}));
  Rational sum = 0;
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    const Word y = x.prepend_word(prefixes.word_at(p));
    Rational weight = 1;
    Word cursor = y;
    for (long long j = 0; j < t; ++j) {
      weight *= c.generator(0).evaluate(cursor);
      cursor = cursor.dropped(LatticeElement({1}));
    }
    sum += weight * b.evaluate(y);
  }
  return sum;
}

}  // namespace

TEST_CASE("transfer computes weighted fiber sums") {
  const ShiftSystem sys = binary();
  const InteractionSystem fair(fair_cocycle());
  const InteractionSystem biased(biased_cocycle());
  const CylinderFunction i0 = CylinderFunction::indicator(sys, w("0", sys));

  CHECK(fair.transfer(LatticeElement({1}), i0) == CylinderFunction::constant(sys, q(1, 2)));
  CHECK(biased.transfer(LatticeElement({1}), i0) == CylinderFunction::constant(sys, q(1, 3)));
  CHECK(fair.transfer(LatticeElement({2}), fair.one()) == fair.one());
  CHECK(biased.transfer(LatticeElement({3}), biased.one()) == biased.one());
  CHECK_THROWS_AS(fair.transfer(LatticeElement({-1}), i0), std::invalid_argument);

  SUBCASE("matches the brute-force oracle") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 20; ++iter) {
      const Cocycle c = random_strict_cocycle(rng);
      const InteractionSystem is(c);
      const CylinderFunction b = random_function(sys, LatticeElement({2}), rng);
      for (long long t = 0; t <= 3; ++t) {
        const CylinderFunction result = is.transfer(LatticeElement({t}), b);
        const WordSpace probe(sys, LatticeElement({3}));
        for (std::size_t i = 0; i < probe.size(); ++i) {
          const Word x = probe.word_at(i);
          CHECK(result.evaluate(x) == oracle_transfer_value(c, t, b, x));
        }
      }
    }
  }
}

TEST_CASE("transfer identity and section property") {
  const ShiftSystem sys = binary();
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 15; ++iter) {
    const InteractionSystem is(random_strict_cocycle(rng));
    const CylinderFunction a = random_function(sys, LatticeElement({2}), rng);
    const CylinderFunction b = random_function(sys, LatticeElement({2}), rng);
    for (long long t = 0; t <= 2; ++t) {
      const LatticeElement lvl({t});
      CHECK(is.transfer(lvl, a.shift_pullback(lvl) * b) == a * is.transfer(lvl, b));
      CHECK(is.transfer(lvl, a.shift_pullback(lvl)) == a);
    }
  }
}

TEST_CASE("v_apply glues the pullback and transfer sides") {
  const ShiftSystem sys = binary();
  const InteractionSystem fair(fair_cocycle());
  const InteractionSystem biased(biased_cocycle());
  const CylinderFunction i0 = CylinderFunction::indicator(sys, w("0", sys));
  const CylinderFunction i1 = CylinderFunction::indicator(sys, w("1", sys));

  CHECK(fair.v_apply(LatticeElement({0}), i0) == i0);
  CHECK(fair.v_apply(LatticeElement({-1}), i1) == CylinderFunction::constant(sys, q(1, 2)));
  CHECK(biased.v_apply(LatticeElement({-1}), i1) == CylinderFunction::constant(sys, q(2, 3)));
  CHECK(fair.v_apply(LatticeElement({1}), i0) == i0.shift_pullback(LatticeElement({1})));
}

TEST_CASE("expectation averages over the fiber of the level map") {
  const ShiftSystem sys = binary();
  const InteractionSystem fair(fair_cocycle());
  const InteractionSystem biased(biased_cocycle());
  const CylinderFunction i0 = CylinderFunction::indicator(sys, w("0", sys));

  CHECK(fair.expectation(LatticeElement({1}), i0) == CylinderFunction::constant(sys, q(1, 2)));
  CHECK(biased.expectation(LatticeElement({1}), i0) == CylinderFunction::constant(sys, q(1, 3)));

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 15; ++iter) {
    const CylinderFunction a = random_function(sys, LatticeElement({2}), rng);
    const LatticeElement t({1 + static_cast<long long>(rng() % 2)});
    CHECK(biased.expectation(t, a.shift_pullback(t)) == a.shift_pullback(t));
    // Bimodule law over the range subalgebra.
    const CylinderFunction b = random_function(sys, LatticeElement({2}), rng);
    CHECK(biased.expectation(t, a.shift_pullback(t) * b) ==
          a.shift_pullback(t) * biased.expectation(t, b));
  }
}

TEST_CASE("operators are stochastic matrices on the indicator basis") {
  const InteractionSystem biased(biased_cocycle());
  const ShiftSystem sys = binary();
  const LatticeElement depth({2});
  const auto basis = indicator_basis(sys, depth);
  for (const auto& t : ball(2, 1)) {
    // Row sums: the images of the partition of unity add to 1; entries stay
    // nonnegative.
    CylinderFunction sum = CylinderFunction::constant(sys, q(0));
    for (const auto& f : basis) {
      const CylinderFunction img = biased.v_apply(t, f);
      CHECK(img.nonnegative());
      sum += img;
    }
    CHECK(sum == biased.one());
  }
}

TEST_CASE("axiom suite passes exactly for the reference cocycles") {
  CHECK(axiom_suite(InteractionSystem(fair_cocycle()), 2, 2).all_ok());
  CHECK(axiom_suite(InteractionSystem(biased_cocycle()), 2, 2).all_ok());
  CHECK(axiom_suite(InteractionSystem(product_cocycle()), 1, 1).all_ok());
}

TEST_CASE("axiom suite catches a broken normalization with a witness") {
  const ShiftSystem sys = binary();
  const Cocycle broken(sys, {table1(sys, {q(3, 4), q(1, 2)})}, CocycleMode::strict);
  const InteractionSystem is(broken);
  CHECK(!is.validation().all_ok());
  const auto report = axiom_suite(is, 2, 2);
  CHECK(!report.all_ok());
  bool witnessed = false;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::fail && !c.details.is_null()) witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("partial action structure") {
  const InteractionSystem fair(fair_cocycle());
  CHECK(partial_action_suite(fair, 2, 2).all_ok());
  CHECK(partial_action_suite(InteractionSystem(biased_cocycle()), 2, 2).all_ok());

  SUBCASE("nested expectations collapse to the deeper one") {
    const ShiftSystem sys = binary();
    for (const auto& f : indicator_basis(sys, LatticeElement({2}))) {
      const CylinderFunction e2 = fair.expectation(LatticeElement({2}), f);
      CHECK(fair.expectation(LatticeElement({1}), e2) == e2);
      CHECK(fair.expectation(LatticeElement({2}), fair.expectation(LatticeElement({1}), f)) == e2);
    }
  }
}

TEST_CASE("index transport between two strict systems") {
  const InteractionSystem fair(fair_cocycle());
  const InteractionSystem biased(biased_cocycle());
  const ShiftSystem sys = binary();

  SUBCASE("frozen single instance") {
    // Level-one indices are the reciprocal weights; the transported value of
    // the inverse-direction operator agrees: (1/3) * (3/2) = 1/2.
    const CylinderFunction i0 = CylinderFunction::indicator(sys, w("0", sys));
    const CylinderFunction lhs = fair.v_apply(LatticeElement({-1}), i0);
    CHECK(lhs == CylinderFunction::constant(sys, q(1, 2)));
    const CylinderFunction ratio = pointwise_quotient(fair.omega(LatticeElement({1})),
                                                      biased.omega(LatticeElement({1})));
    const CylinderFunction rhs = biased.transfer(LatticeElement({1}), ratio * i0);
    CHECK(rhs == lhs);
  }

  SUBCASE("full suite") {
    CHECK(compare_systems(fair, biased, 2, 2).all_ok());
    CHECK(compare_systems(biased, fair, 2, 2).all_ok());
    CHECK(compare_systems(fair, fair, 2, 2).all_ok());
  }

  SUBCASE("relaxed cocycles are rejected") {
    const InteractionSystem relaxed(relaxed_zero_cocycle());
    CHECK_THROWS_AS(compare_systems(fair, relaxed, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(relaxed.expectation_index(LatticeElement({1})), std::invalid_argument);
  }

  SUBCASE("index is the reciprocal weight table") {
    const CylinderFunction idx = biased.expectation_index(LatticeElement({1}));
    CHECK(idx.evaluate(w("0", sys)) == q(3));
    CHECK(idx.evaluate(w("1", sys)) == q(3, 2));
  }
}

#include <doctest.h>

#include <random>

#include "dilator/dilation.hpp"
#include "test_util.hpp"

using namespace dilator;
using namespace dilator::test;

TEST_CASE("embedding is an injective unital homomorphism") {
  const DilationAlgebra dil{InteractionSystem(fair_cocycle())};
  const ShiftSystem sys = binary();
  const CylinderFunction a = CylinderFunction::indicator(sys, w("0", sys));
  const CylinderFunction b = CylinderFunction::indicator(sys, w("1", sys));

  CHECK(dil.embed(a).level == LatticeElement({0}));
  CHECK(dil.equal(dil.embed(dil.interaction().one()), dil.one()));
  CHECK(!dil.equal(dil.embed(a), dil.embed(b)));
  CHECK(dil.equal(dil.mul(dil.embed(a), dil.embed(b)), dil.embed(a * b)));
  CHECK(dil.equal(dil.add(dil.embed(a), dil.embed(b)), dil.embed(a + b)));
}

TEST_CASE("direct limit equality identifies raised representatives") {
  const DilationAlgebra dil{InteractionSystem(biased_cocycle())};
  const ShiftSystem sys = binary();
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    const CylinderFunction a = random_function(sys, LatticeElement({2}), rng);
    const DilationElement e{LatticeElement({1}), a};
    const DilationElement lifted{LatticeElement({3}), a.shift_pullback(LatticeElement({2}))};
    CHECK(dil.equal(e, lifted));
    CHECK(!dil.equal(e, dil.add(e, dil.one())));
  }
}

TEST_CASE("beta is a group action dilating the pullback") {
  const DilationAlgebra dil{InteractionSystem(fair_cocycle())};
  const ShiftSystem sys = binary();
  const CylinderFunction a = CylinderFunction::indicator(sys, w("0", sys));

  SUBCASE("frozen instances") {
    const DilationElement down = dil.beta(LatticeElement({-1}), dil.embed(a));
    CHECK(down.level == LatticeElement({1}));
    CHECK(down.fn == a);
    CHECK(dil.equal(dil.beta(LatticeElement({1}), down), dil.embed(a)));
    CHECK(dil.equal(dil.beta(LatticeElement({1}), dil.embed(a)),
                    dil.embed(a.shift_pullback(LatticeElement({1})))));
  }

  SUBCASE("group law on random elements") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 30; ++iter) {
      const DilationElement e{LatticeElement({static_cast<long long>(rng() % 3)}),
                              random_function(sys, LatticeElement({2}), rng)};
      const LatticeElement u({static_cast<long long>(rng() % 5) - 2});
      const LatticeElement v({static_cast<long long>(rng() % 5) - 2});
      CHECK(dil.equal(dil.beta(u, dil.beta(v, e)), dil.beta(u + v, e)));
      CHECK(dil.equal(dil.beta(LatticeElement({0}), e), e));
      // Each translation is a *-automorphism of the limit algebra.
      const DilationElement f{LatticeElement({static_cast<long long>(rng() % 3)}),
                              random_function(sys, LatticeElement({2}), rng)};
      CHECK(dil.equal(dil.beta(u, dil.mul(e, f)), dil.mul(dil.beta(u, e), dil.beta(u, f))));
      CHECK(dil.equal(dil.beta(u, dil.add(e, f)), dil.add(dil.beta(u, e), dil.beta(u, f))));
    }
  }
}

TEST_CASE("expectation onto the embedded copy") {
  const ShiftSystem sys = binary();
  const DilationAlgebra fair{InteractionSystem(fair_cocycle())};
  const CylinderFunction i0 = CylinderFunction::indicator(sys, w("0", sys));

  SUBCASE("frozen value on a level-one element") {
    const DilationElement e{LatticeElement({1}), i0};
    CHECK(fair.equal(fair.expectation(e), fair.embed(CylinderFunction::constant(sys, q(1, 2)))));
  }

  SUBCASE("restricts to the identity on the embedded copy") {
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 20; ++iter) {
      const CylinderFunction a = random_function(sys, LatticeElement({2}), rng);
      CHECK(fair.equal(fair.expectation(fair.embed(a)), fair.embed(a)));
    }
  }

  SUBCASE("does not depend on the representative") {
    std::mt19937_64 rng(34);
    for (int iter = 0; iter < 20; ++iter) {
      const CylinderFunction a = random_function(sys, LatticeElement({2}), rng);
      const DilationElement e1{LatticeElement({1}), a};
      const DilationElement e2{LatticeElement({2}), a.shift_pullback(LatticeElement({1}))};
      CHECK(fair.equal(fair.expectation(e1), fair.expectation(e2)));
    }
  }

  SUBCASE("is idempotent, unital, positive, and a bimodule map") {
    const DilationAlgebra dil{InteractionSystem(biased_cocycle())};
    std::mt19937_64 rng(35);
    CHECK(dil.equal(dil.expectation(dil.one()), dil.one()));
    for (int iter = 0; iter < 20; ++iter) {
      const DilationElement e{LatticeElement({1 + static_cast<long long>(rng() % 2)}),
                              random_function(sys, LatticeElement({2}), rng)};
      CHECK(dil.equal(dil.expectation(dil.expectation(e)), dil.expectation(e)));
      const CylinderFunction a = random_function(sys, LatticeElement({1}), rng);
      const CylinderFunction b = random_function(sys, LatticeElement({1}), rng);
      const DilationElement lhs = dil.expectation(dil.mul(dil.embed(a), dil.mul(e, dil.embed(b))));
      const DilationElement rhs = dil.mul(dil.embed(a), dil.mul(dil.expectation(e), dil.embed(b)));
      CHECK(dil.equal(lhs, rhs));
      // Positivity on squares.
      const DilationElement sq = dil.mul(dil.conjugate(e), e);
      CHECK(dil.is_nonnegative(dil.expectation(sq)));
    }
  }
}

TEST_CASE("product raises both operands to the join level") {
  const DilationAlgebra dil{InteractionSystem(fair_cocycle())};
  const ShiftSystem sys = binary();
  const CylinderFunction a = CylinderFunction::indicator(sys, w("0", sys));
  const CylinderFunction b = CylinderFunction::indicator(sys, w("1", sys));
  const DilationElement p = dil.mul(DilationElement{LatticeElement({1}), a},
                                    DilationElement{LatticeElement({2}), b});
  CHECK(p.level == LatticeElement({2}));
  CHECK(p.fn == a.shift_pullback(LatticeElement({1})) * b);
  const DilationElement e{LatticeElement({1}), a};
  CHECK(dil.equal(dil.mul(e, e), e));
  CHECK(dil.equal(dil.add(DilationElement{LatticeElement({1}), a},
                          DilationElement{LatticeElement({1}), b}),
                  DilationElement{LatticeElement({1}), a + b}));
}

TEST_CASE("dilation suite passes for the reference systems") {
  CHECK(dilation_suite(DilationAlgebra{InteractionSystem(fair_cocycle())}, 2, 2).all_ok());
  CHECK(dilation_suite(DilationAlgebra{InteractionSystem(biased_cocycle())}, 2, 2).all_ok());
  CHECK(dilation_suite(DilationAlgebra{InteractionSystem(product_cocycle())}, 1, 1).all_ok());
}

TEST_CASE("dilation suite flags a broken cocycle") {
  const ShiftSystem sys = binary();
  const Cocycle broken(sys, {table1(sys, {q(1), q(1, 2)})}, CocycleMode::strict);
  const auto report = dilation_suite(DilationAlgebra{InteractionSystem(broken)}, 2, 2);
  CHECK(!report.all_ok());
  bool law_or_unit = false;
  for (const auto& c : report.checks) {
    if ((c.name == "dilation_law" || c.name == "orbit_unitality") && c.status == CheckStatus::fail)
      law_or_unit = true;
  }
  CHECK(law_or_unit);
}

TEST_CASE("faithfulness certificate and witness") {
  SUBCASE("strict cocycles certify") {
    const auto fair = faithfulness(DilationAlgebra{InteractionSystem(fair_cocycle())}, 4, 3);
    REQUIRE(fair.checks.size() == 1);
    CHECK(fair.checks.front().status == CheckStatus::certificate);
    CHECK(faithfulness(DilationAlgebra{InteractionSystem(biased_cocycle())}, 4, 3).all_ok());
  }

  SUBCASE("planted zero weight yields a verified witness") {
    const DilationAlgebra dil{InteractionSystem(relaxed_zero_cocycle())};
    const auto report = faithfulness(dil, 4, 3);
    REQUIRE(report.checks.size() == 1);
    const auto& check = report.checks.front();
    CHECK(check.status == CheckStatus::witness);
    CHECK(check.details.at("level") == Json::array({1}));
    CHECK(check.details.at("word") == "0");
    CHECK(check.details.at("element_nonzero") == true);
    CHECK(check.details.at("element_nonnegative") == true);
    CHECK(check.details.at("F_of_b_star_b_is_zero") == true);
    // Re-verify the reported witness independently.
    const CylinderFunction f = CylinderFunction::indicator(binary(), w("0", binary()));
    const DilationElement b{LatticeElement({1}), f};
    CHECK(dil.is_zero(dil.expectation(dil.mul(dil.conjugate(b), b))));
    CHECK(!dil.is_zero(b));
  }

  SUBCASE("relaxed but everywhere positive finds nothing") {
    const ShiftSystem sys = binary();
    const Cocycle relaxed_fair(sys, {table1(sys, {q(1, 2), q(1, 2)})}, CocycleMode::relaxed);
    const auto report = faithfulness(DilationAlgebra{InteractionSystem(relaxed_fair)}, 3, 2);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks.front().status == CheckStatus::pass);
  }
}

TEST_CASE("fiber measures") {
  const DilationAlgebra fair{InteractionSystem(fair_cocycle())};
  const DilationAlgebra biased{InteractionSystem(biased_cocycle())};
  const ShiftSystem sys = binary();
  const Word x = w("01", sys);

  SUBCASE("frozen masses") {
    // Level two, fair: every one of the four lifts carries mass 1/4.
    const WordSpace prefixes(sys, LatticeElement({2}));
    for (std::size_t p = 0; p < prefixes.size(); ++p)
      CHECK(fair.fiber_measure(x, LatticeElement({2}), x.prepend_word(prefixes.word_at(p))) ==
            q(1, 4));
    // Level zero: the whole fiber.
    CHECK(fair.fiber_measure(x, LatticeElement({0}), x) == q(1));
    // Biased level one.
    CHECK(biased.fiber_measure(x, LatticeElement({1}), x.prepended(0, 0)) == q(1, 3));
    CHECK(biased.fiber_measure(x, LatticeElement({1}), x.prepended(0, 1)) == q(2, 3));
  }

  SUBCASE("rejects non-lifts") {
    CHECK_THROWS_AS(fair.fiber_measure(x, LatticeElement({1}), x), std::invalid_argument);
    CHECK_THROWS_AS(fair.fiber_measure(x, LatticeElement({1}), w("110", sys)),
                    std::invalid_argument);
  }

  SUBCASE("suite cross-checks masses against the expectation") {
    CHECK(fiber_measure_suite(fair, 3, 2).all_ok());
    CHECK(fiber_measure_suite(biased, 3, 2).all_ok());
  }
}

TEST_CASE("the dilation law forces the expectation on spanning elements") {
  CHECK(expectation_forcing(DilationAlgebra{InteractionSystem(fair_cocycle())}, 2, 2).all_ok());
  CHECK(expectation_forcing(DilationAlgebra{InteractionSystem(biased_cocycle())}, 2, 2).all_ok());
}

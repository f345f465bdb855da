#include <doctest.h>

#include <random>

#include "dilator/cocycle.hpp"
#include "dilator/system_io.hpp"
#include "test_util.hpp"

using namespace dilator;
using namespace dilator::test;

namespace {

/// Independent oracle for the level-n weight on a single factor: the plain
/// product of generator values along the successive shifts of the word,
/// computed pointwise with no table machinery.
Rational oracle_weight(const CylinderFunction& generator, long long n, const Word& word) {
  Rational out = 1;
  Word x = word;
  for (long long j = 0; j < n; ++j) {
    out *= generator.evaluate(x);
    x = x.dropped(LatticeElement({1}));
  }
  return out;
}

}  // namespace

TEST_CASE("validate accepts the reference cocycles") {
  CHECK(fair_cocycle().validate().all_ok());
  CHECK(biased_cocycle().validate().all_ok());
  CHECK(relaxed_zero_cocycle().validate().all_ok());
  CHECK(product_cocycle().validate().all_ok());
}

TEST_CASE("validate flags broken normalization with the offending sum") {
  const ShiftSystem sys = binary();
  const Cocycle third(sys, {table1(sys, {q(1, 3), q(1, 3)})}, CocycleMode::strict);
  const auto report = third.validate();
  CHECK(!report.all_ok());
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.name == "normalization" && c.status == CheckStatus::fail) {
      found = true;
      CHECK(c.details.at("sum").get<std::string>() == "2/3");
    }
  }
  CHECK(found);
}

TEST_CASE("strict positivity is mode dependent") {
  const ShiftSystem sys = binary();
  const Cocycle strict_zero(sys, {table1(sys, {q(0), q(1)})}, CocycleMode::strict);
  CHECK(!strict_zero.validate().all_ok());
  CHECK(relaxed_zero_cocycle().validate().all_ok());
}

TEST_CASE("extend iterates the composition identity") {
  SUBCASE("fair level 2 is constant 1/4") {
    const CylinderFunction w2 = fair_cocycle().extend(LatticeElement({2}));
    CHECK(w2 == CylinderFunction::constant(binary(), q(1, 4)));
  }

  SUBCASE("biased level 2 table, frozen from the product oracle") {
    const ShiftSystem sys = binary();
    const CylinderFunction w2 = biased_cocycle().extend(LatticeElement({2}));
    CHECK(w2.evaluate(w("00", sys)) == q(1, 9));
    CHECK(w2.evaluate(w("01", sys)) == q(2, 9));
    CHECK(w2.evaluate(w("10", sys)) == q(2, 9));
    CHECK(w2.evaluate(w("11", sys)) == q(4, 9));
    // Level-2 fiber sum is exactly one.
    CHECK(q(1, 9) + q(2, 9) + q(2, 9) + q(4, 9) == q(1));
  }

  SUBCASE("level 0 is the constant 1") {
    CHECK(biased_cocycle().extend(LatticeElement({0})) ==
          CylinderFunction::constant(binary(), q(1)));
  }

  SUBCASE("matches the pointwise product oracle on random cocycles") {
    std::mt19937_64 rng(11);
    const ShiftSystem sys = binary();
    for (int iter = 0; iter < 20; ++iter) {
      const Cocycle c = random_strict_cocycle(rng);
      for (long long n = 0; n <= 4; ++n) {
        const CylinderFunction table = c.extend(LatticeElement({n}));
        const WordSpace probe(sys, LatticeElement({n + 1}));
        for (std::size_t i = 0; i < probe.size(); ++i) {
          const Word x = probe.word_at(i);
          CHECK(table.evaluate(x) == oracle_weight(c.generator(0), n, x));
        }
      }
    }
  }
}

TEST_CASE("extended levels stay normalized and compose") {
  std::mt19937_64 rng(12);
  const ShiftSystem sys = binary();
  for (int iter = 0; iter < 10; ++iter) {
    const Cocycle c = random_strict_cocycle(rng);
    for (long long n = 1; n <= 3; ++n) {
      const CylinderFunction table = c.extend(LatticeElement({n}));
      // Fiber sums over all level-n prefixes.
      const WordSpace tails(sys, LatticeElement({1}));
      const WordSpace prefixes(sys, LatticeElement({n}));
      for (std::size_t ti = 0; ti < tails.size(); ++ti) {
        Rational sum = 0;
        for (std::size_t p = 0; p < prefixes.size(); ++p)
          sum += table.evaluate(tails.word_at(ti).prepend_word(prefixes.word_at(p)));
        CHECK(sum == 1);
      }
    }
    // Composition: w(t+u) = w(t) * w(u) after the level-t shift.
    for (long long t = 0; t <= 2; ++t) {
      for (long long u = 0; u <= 2; ++u) {
        const CylinderFunction lhs = c.extend(LatticeElement({t + u}));
        const CylinderFunction rhs =
            c.extend(LatticeElement({t})) * c.extend(LatticeElement({u})).shift_pullback(LatticeElement({t}));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("coherence holds for the reference cocycles") {
  CHECK(fair_cocycle().check_coherence(2).all_ok());
  CHECK(biased_cocycle().check_coherence(2).all_ok());
  CHECK(product_cocycle().check_coherence(1).all_ok());
}

TEST_CASE("coherence outcome for a depth-2 single-factor cocycle") {
  // A normalized generator that reads two symbols. For a single factor the
  // composition identity alone determines every level; this records that the
  // two-variable coherence identity then comes along automatically.
  const ShiftSystem sys = binary();
  const CylinderFunction gen(sys, LatticeElement({2}), {q(1, 3), q(1, 4), q(2, 3), q(3, 4)});
  const Cocycle c(sys, {gen}, CocycleMode::strict);
  REQUIRE(c.validate().all_ok());
  CHECK(c.check_coherence(2).all_ok());
}

TEST_CASE("rank-2 extension agrees with every interleaving") {
  const Cocycle c = product_cocycle();
  const LatticeElement e1({1, 0}), e2({0, 1});
  const CylinderFunction canonical = c.extend(LatticeElement({1, 1}));
  const CylinderFunction order12 = c.generator(0) * c.generator(1).shift_pullback(e1);
  const CylinderFunction order21 = c.generator(1) * c.generator(0).shift_pullback(e2);
  CHECK(canonical == order12);
  CHECK(canonical == order21);
}

TEST_CASE("cross-factor dependence that breaks the exchange identity is rejected") {
  const ShiftSystem sys({2, 2});
  // Normalized in its own factor for each fixed other-factor symbol, but the
  // two step orders disagree.
  CylinderFunction g1(sys, LatticeElement({1, 1}), {q(1, 3), q(1, 4), q(2, 3), q(3, 4)});
  CylinderFunction g2(sys, LatticeElement({0, 1}), {q(1, 2), q(1, 2)});
  const Cocycle c(sys, {g1, g2}, CocycleMode::strict);
  CHECK(c.validate().all_ok());
  CHECK_THROWS_AS(c.extend(LatticeElement({1, 1})), CocycleInconsistencyError);
  try {
    c.extend(LatticeElement({1, 1}));
  } catch (const CocycleInconsistencyError& e) {
    CHECK(!e.witness().is_null());
    CHECK(e.witness().contains("word"));
  }
}

TEST_CASE("system files round trip") {
  const Json j = system_to_json(biased_cocycle());
  const Cocycle back = system_from_json(j);
  CHECK(system_to_json(back) == j);
  CHECK(back.mode() == CocycleMode::strict);
  CHECK(back.generator(0) == biased_cocycle().generator(0));

  SUBCASE("rationals canonicalize on the way in") {
    nlohmann::json raw = {
        {"factors", {{{"alphabet", 2}}}},
        {"mode", "strict"},
        {"generators", {{{"depth", {1}}, {"table", {{"0", "2/6"}, {"1", "4/6"}}}}}}};
    const Cocycle parsed = system_from_json(raw);
    CHECK(system_to_json(parsed).at("generators")[0].at("table").at("0") == "1/3");
  }

  SUBCASE("malformed files raise input errors") {
    nlohmann::json raw = {{"factors", nlohmann::json::array()},
                          {"mode", "strict"},
                          {"generators", nlohmann::json::array()}};
    CHECK_THROWS_AS(system_from_json(raw), std::invalid_argument);
    nlohmann::json wrong_size = {
        {"factors", {{{"alphabet", 2}}}},
        {"mode", "strict"},
        {"generators", {{{"depth", {1}}, {"table", {{"0", "1/2"}}}}}}};
    CHECK_THROWS_AS(system_from_json(wrong_size), std::invalid_argument);
  }
}

#include <doctest.h>

#include <random>

#include "foxknot/alexander.hpp"
#include "foxknot/error.hpp"
#include "foxknot/family.hpp"
#include "foxknot/foxcalc.hpp"

using namespace foxknot;

TEST_CASE("FamilyParams validation") {
  CHECK_THROWS_AS(FamilyParams(0, 1), Error);
  CHECK_THROWS_AS(FamilyParams(1, 0), Error);
  CHECK_THROWS_AS(FamilyParams(-3, 2), Error);
  CHECK(FamilyParams(2, 5).m() == 5);
}

TEST_CASE("family presentation") {
  const Presentation p = presentation(FamilyParams(1, 1));
  CHECK(p.generators() == std::vector<std::string>{"a", "w"});
  CHECK(p.meridian() == kGenA);
  REQUIRE(p.relators().size() == 1);
  // r1 r2^-1 = w (a w) a^-1 (a w)^-1 (w a)^-1 a^-1 (w a) reduced by hand.
  CHECK(render(p.relators()[0], p.generators()) == "w a w a^-1 w^-1 a^-2 w^-1 a^-1 w a");

  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      const Presentation q = presentation(FamilyParams(n, m));
      CHECK(exponent_sum(q.relators()[0], kGenA) == -2);
      CHECK(exponent_sum(q.relators()[0], kGenW) == 1);
      CHECK(compute_weights(q) == Weights{{1, 2}});
    }
  }
}

TEST_CASE("longitude") {
  const Word l11 = longitude(FamilyParams(1, 1));
  CHECK(exponent_sum(l11, kGenA) == -8);
  CHECK(exponent_sum(l11, kGenW) == 4);
  CHECK(exponent_sum(l11, kGenA) + 2 * exponent_sum(l11, kGenW) == 0);

  const Word l32 = longitude(FamilyParams(3, 2));
  CHECK(exponent_sum(l32, kGenA) == -22);
  CHECK(exponent_sum(l32, kGenW) == 11);

  const std::vector<std::string> names{"a", "w"};
  CHECK(render(l11, names) == "a^-11 w a w a w a w");

  const Weights weights{{1, 2}};
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t m = 1; m <= 20; ++m) {
      const FamilyParams params(n, m);
      CHECK(abelian_degree(longitude(params), weights) == 0);
      // Meridian power 2n + 9m + 2 is nullhomologous only for n = 2.
      const bool alt_ok = abelian_degree(longitude_with_meridian_power(params, 2 * n + 9 * m + 2), weights) == 0;
      CHECK(alt_ok == (n == 2));
    }
  }
}

TEST_CASE("relator abelianizes to 1") {
  const Weights weights{{1, 2}};
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t m = 1; m <= 20; ++m) {
      CHECK(abelianize(presentation(FamilyParams(n, m)).relators()[0], weights) == LaurentPoly::constant(1));
    }
  }
}

TEST_CASE("genus and slope bound") {
  CHECK(genus(FamilyParams(1, 1)) == 3);
  for (std::int64_t n = 1; n <= 8; ++n) CHECK(genus(FamilyParams(n, 1)) == n + 2);
  CHECK(closed_form_family(4, 3).span() == 2 * genus(FamilyParams(4, 3)));
  CHECK(slope_bound(FamilyParams(1, 1)) == 5);
  CHECK(slope_bound(FamilyParams(3, 1)) == 9);
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (std::int64_t m = 1; m <= 50; ++m) {
      const FamilyParams params(n, m);
      CHECK(slope_bound(params) == 2 * genus(params) - 1);
    }
  }
}

TEST_CASE("SurgerySlope normalization") {
  const SurgerySlope s(6, -4);
  CHECK(s.p() == -3);
  CHECK(s.q() == 2);
  CHECK(SurgerySlope(0, 5) == SurgerySlope(0, 1));
  CHECK_THROWS_AS(SurgerySlope(1, 0), Error);
  CHECK(SurgerySlope(9, 2).at_least(4));
  CHECK_FALSE(SurgerySlope(7, 2).at_least(4));
  CHECK(SurgerySlope(INT64_MAX, 1).at_least(INT64_MAX));
}

TEST_CASE("classify_surgery") {
  const auto c1 = classify_surgery(FamilyParams(3, 1), SurgerySlope(13, 1));
  CHECK(c1.verdict == Verdict::NotLeftOrderable);
  CHECK(c1.slope_bound == 9);
  CHECK_FALSE(c1.near_zero_note);

  CHECK(classify_surgery(FamilyParams(1, 1), SurgerySlope(5, 1)).verdict == Verdict::NotLeftOrderable);
  CHECK(classify_surgery(FamilyParams(1, 1), SurgerySlope(4, 1)).verdict == Verdict::NoConclusion);
  const auto c2 = classify_surgery(FamilyParams(1, 1), SurgerySlope(-3, 1));
  CHECK(c2.verdict == Verdict::NoConclusion);
  CHECK(c2.near_zero_note);
  CHECK(c2.slope_bound == 5);
  CHECK(classify_surgery(FamilyParams(1, 1), SurgerySlope(49, 10)).verdict == Verdict::NoConclusion);
  CHECK(classify_surgery(FamilyParams(1, 1), SurgerySlope(51, 10)).verdict == Verdict::NotLeftOrderable);
}

TEST_CASE("classification is monotone in the slope") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> num(-200, 200);
  std::uniform_int_distribution<std::int64_t> den(1, 20);
  std::uniform_int_distribution<std::int64_t> par(1, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const FamilyParams params(par(rng), par(rng));
    const SurgerySlope s(num(rng), den(rng));
    const SurgerySlope t(num(rng), den(rng));
    const bool s_le_t = s.p() * t.q() <= t.p() * s.q();
    const auto& lo = s_le_t ? s : t;
    const auto& hi = s_le_t ? t : s;
    if (classify_surgery(params, lo).verdict == Verdict::NotLeftOrderable) {
      CHECK(classify_surgery(params, hi).verdict == Verdict::NotLeftOrderable);
    }
  }
}

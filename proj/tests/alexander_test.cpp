#include <doctest.h>

#include <cmath>
#include <complex>

#include "foxknot/alexander.hpp"
#include "foxknot/error.hpp"
#include "foxknot/family.hpp"

using namespace foxknot;

namespace {

LaurentPoly poly(std::int64_t lo, std::initializer_list<long long> c) { return LaurentPoly::from_coefficients(lo, c); }

const LaurentPoly kTrefoil = poly(0, {1, -1, 1});
const LaurentPoly kT34 = poly(0, {1, -1, 0, 1, 0, -1, 1});
const LaurentPoly kT35 = poly(0, {1, -1, 0, 1, -1, 1, 0, -1, 1});

const char* kTrefoilText = "gens: x y\nrel: x y x = y x y\n";

// Frozen from tests/oracles/fox_oracle.py (letter-by-letter Fox calculus).
struct FrozenFamily {
  std::int64_t n;
  std::int64_t m;
  std::initializer_list<long long> coeffs;
};
const FrozenFamily kFrozen[] = {
    {1, 2, {1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1}},
    {1, 3, {1, -1, 0, 1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1}},
    {2, 2, {1, -1, 0, 1, -1, 0, 1, -1, 1, 0, -1, 1, 0, -1, 1}},
    {2, 3, {1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1}},
    {3, 1, {1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1}},
    {3, 2, {1, -1, 0, 1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1, 0, -1, 1}},
    {3, 3, {1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1}},
};

}  // namespace

TEST_CASE("alexander_matrix") {
  SUBCASE("trefoil") {
    const AlexanderMatrix a = alexander_matrix(parse_presentation(kTrefoilText));
    REQUIRE(a.rows() == 1);
    REQUIRE(a.cols() == 2);
    CHECK(a.at(0, 0) == kTrefoil);
    CHECK(a.at(0, 1) == -kTrefoil);
  }
  SUBCASE("K(1,1) a-column") {
    const AlexanderMatrix a = alexander_matrix(presentation(FamilyParams(1, 1)));
    CHECK(a.at(0, kGenA) == poly(-3, {-1, 0, 1, -1, -1, 1, 0, -1}));
    CHECK(a.at(0, kGenW) == poly(-3, {1, -1, 0, 1, 0, -1, 1}));
  }
  SUBCASE("identity relator gives a zero row") {
    const AlexanderMatrix a = alexander_matrix(parse_presentation("gens: x y\nrel: x y x^-1 y^-1 y x y^-1 x^-1\n"),
                                               Weights{{1, 0}});
    CHECK(a.at(0, 0).is_zero());
    CHECK(a.at(0, 1).is_zero());
  }
}

TEST_CASE("determinant by cofactors") {
  const LaurentPoly t = LaurentPoly::t_power(1);
  const LaurentPoly one = LaurentPoly::constant(1);
  CHECK(determinant({}) == one);
  CHECK(determinant({{t, one}, {one, t}}) == t * t - one);
  CHECK(determinant({{t, one, LaurentPoly{}}, {one, t, one}, {LaurentPoly{}, one, t}}) == t * t * t - t - t);
}

TEST_CASE("alexander_polynomial examples") {
  CHECK(alexander_polynomial(parse_presentation(kTrefoilText)) == kTrefoil);
  CHECK(alexander_polynomial(presentation(FamilyParams(1, 1))) == kT34);
  CHECK(alexander_polynomial(presentation(FamilyParams(2, 1))) == kT35);
  for (const auto& f : kFrozen) {
    CAPTURE(f.n);
    CAPTURE(f.m);
    CHECK(alexander_polynomial(presentation(FamilyParams(f.n, f.m))) == poly(0, f.coeffs));
  }
}

TEST_CASE("alexander_polynomial on other presentations") {
  SUBCASE("figure eight") {
    const Presentation p = parse_presentation("gens: x y\nrel: (x^-1 y x y^-1) x (x^-1 y x y^-1)^-1 y^-1\n");
    CHECK(alexander_polynomial(p) == poly(0, {-1, 3, -1}));
    CHECK(alexander_polynomial(p, GeneratorId{1}) == poly(0, {-1, 3, -1}));
  }
  SUBCASE("three-generator Wirtinger trefoil, every column") {
    const Presentation p = parse_presentation("gens: x y z\nrel: x y x^-1 z^-1\nrel: y z y^-1 x^-1\n");
    for (GeneratorId j = 0; j < 3; ++j) CHECK(alexander_polynomial(p, j) == kTrefoil);
  }
  SUBCASE("columns with different weights") {
    const Presentation p = parse_presentation("gens: a b c\nrel: b a^-2\nrel: c a^-3\n");
    for (GeneratorId j = 0; j < 3; ++j) CHECK(alexander_polynomial(p, j) == LaurentPoly::constant(1));
  }
  SUBCASE("unknot") {
    CHECK(alexander_polynomial(parse_presentation("gens: x\n")) == LaurentPoly::constant(1));
  }
}

TEST_CASE("alexander_polynomial errors") {
  auto code = [](const Presentation& p, std::optional<GeneratorId> j = std::nullopt) {
    try {
      alexander_polynomial(p, j);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Overflow;  // sentinel
  };
  CHECK(code(parse_presentation("gens: x y\nrel: x y x^-1 y^-1\n")) == Errc::H1RankNotOne);
  CHECK(code(parse_presentation("gens: x y\nrel: y\n"), GeneratorId{1}) == Errc::ZeroWeightColumn);
  // <x, y | x^2 y^-2>: weights (1, 1) but the quotient is not a knot group.
  CHECK(code(parse_presentation("gens: x y\nrel: x^2 y^-2\n")) == Errc::NotAKnotPolynomial);
}

TEST_CASE("auto column prefers the smallest positive weight") {
  CHECK(auto_column(Weights{{1, 2}}) == 0);
  CHECK(auto_column(Weights{{2, 1}}) == 1);
  CHECK(auto_column(Weights{{0, -1, 3, 3}}) == 2);
  CHECK_THROWS_AS(auto_column(Weights{{0, -1}}), Error);
}

TEST_CASE("closed_form_family") {
  CHECK(closed_form_family(1, 1) == kT34);
  CHECK(closed_form_family(2, 1) == kT35);
  CHECK(closed_form_family(3, 2).span() == 16);
  CHECK(closed_form_family(4, 3).span() == 2 * (4 + 9 - 1));
  for (const auto& f : kFrozen) CHECK(closed_form_family(f.n, f.m) == poly(0, f.coeffs));
  CHECK_THROWS_AS(closed_form_family(0, 1), Error);
}

TEST_CASE("torus_knot_alexander") {
  CHECK(torus_knot_alexander(2, 3) == kTrefoil);
  CHECK(torus_knot_alexander(3, 2) == kTrefoil);
  CHECK(torus_knot_alexander(3, 4) == kT34);
  CHECK(torus_knot_alexander(3, 5) == kT35);
  CHECK(torus_knot_alexander(2, 5) == poly(0, {1, -1, 1, -1, 1}));
  try {
    torus_knot_alexander(2, 4);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
  CHECK_THROWS_AS(torus_knot_alexander(1, 4), Error);
}

TEST_CASE("f_polynomial") {
  const CosineSum f11 = f_polynomial(1, 1);
  REQUIRE(f11.terms.size() == 3);
  CHECK(f11.terms[0].twice_frequency == 9);
  CHECK(f11.terms[1].twice_frequency == 7);
  CHECK(f11.terms[2].twice_frequency == -1);
  CHECK(f11(0.0) == doctest::Approx(6.0));

  // |Delta(e^{i theta})| * |2 cos(theta/2) (2 cos(theta) + 1)| = |f(e^{i theta})|.
  for (auto [n, m] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {1, 1}, {3, 4}}) {
    const LaurentPoly delta = closed_form_family(n, m);
    const CosineSum f = f_polynomial(n, m);
    for (double theta : {0.3, 1.0, 2.5}) {
      const double lhs = std::abs(eval_unit_circle(delta, theta)) *
                         std::abs(2 * std::cos(theta / 2) * (2 * std::cos(theta) + 1));
      CHECK(lhs == doctest::Approx(std::abs(f(theta))).epsilon(1e-9));
    }
  }
}

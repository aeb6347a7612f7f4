#include <random>

#include "doctest.h"
#include "rcomm/coeff.hpp"
#include "support.hpp"

using namespace rcomm;
using rcomm::testing::random_param_poly;
using rcomm::testing::random_rational;

namespace {

ParamPoly P(const char* text, std::size_t arity = 3) { return ParamPoly::parse(text, arity); }

}  // namespace

TEST_CASE("coeff_add examples") {
  CHECK(coeff_add(P("a1 + 1/2"), P("-1*a1")) == P("1/2"));
  ParamPoly p = P("3*a1^2 + -2/7*a2*a3");
  CHECK(coeff_add(p, ParamPoly(3)) == p);
  CHECK(coeff_add(P("3/4*a2"), P("1/4*a2")) == P("a2"));
}

TEST_CASE("coeff_mul examples") {
  CHECK(coeff_mul(P("a1"), P("a2")) == P("a1*a2"));
  ParamPoly p = P("5/3*a1*a3 + 2");
  CHECK(coeff_mul(p, ParamPoly::constant(Rational(1), 3)) == p);
  CHECK(coeff_mul(P("a1 + 1"), P("a1 + -1")) == P("a1^2 + -1"));
}

TEST_CASE("coeff_is_zero examples") {
  CHECK(coeff_is_zero(ParamPoly(3)));
  CHECK_FALSE(coeff_is_zero(P("a3")));
  CHECK(coeff_is_zero(coeff_mul(P("a1 + 1"), P("a1 + -1")) - P("a1^2") + P("1")));
}

TEST_CASE("rational normalization and errors") {
  CHECK(Rational(6, -8).to_string() == "-3/4");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parameter polynomials keep their arity") {
  CHECK_THROWS_AS(ParamPoly(2) + ParamPoly(3), std::invalid_argument);
  CHECK_THROWS_AS(P("a1", 2) * P("a1", 3), std::invalid_argument);
  CHECK_THROWS_AS(ParamPoly::parameter(3, 3), std::out_of_range);
  CHECK_THROWS_AS(P("a4", 3), std::invalid_argument);
  CHECK(P("a1", 3).with_arity(5) == P("a1", 5));
  CHECK_THROWS_AS(P("a3", 3).with_arity(2), std::invalid_argument);
}

TEST_CASE("evaluation and degree") {
  ParamPoly p = P("2*a1^2*a2 + -1/2*a3 + 7");
  std::vector<Rational> at{Rational(3), Rational(-1, 2), Rational(4)};
  CHECK(p.evaluate(at) == Rational(2 * 9) * Rational(-1, 2) - Rational(2) + Rational(7));
  CHECK(p.degree() == 3);
  CHECK(p.constant_term() == Rational(7));
  CHECK_FALSE(p.is_constant());
  CHECK(P("5/3").is_constant());
}

TEST_CASE("property: ring axioms on random parameter polynomials") {
  std::mt19937_64 rng(20261017);
  const std::size_t arity = 3;
  const ParamPoly zero(arity), one(Rational(1), arity);
  for (int trial = 0; trial < 600; ++trial) {
    ParamPoly a = random_param_poly(rng, arity), b = random_param_poly(rng, arity), c = random_param_poly(rng, arity);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE((a - a).is_zero());
    REQUIRE((a * zero).is_zero());
    REQUIRE(a + (-a) == zero);
  }
}

TEST_CASE("property: rational arithmetic stays normalized and agrees with cross-multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int trial = 0; trial < 800; ++trial) {
    long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    Rational x(p, q), y(r, s);
    REQUIRE(x + y == Rational(p * s + r * q, q * s));
    REQUIRE(x * y == Rational(p * r, q * s));
    REQUIRE(x - y == Rational(p * s - r * q, q * s));
    mpz_class g;
    mpz_class n(x.numerator()), d(x.denominator());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    REQUIRE(g == 1);
    REQUIRE(d > 0);
    if (!y.is_zero()) REQUIRE((x / y) * y == x);
  }
}

TEST_CASE("property: parameter polynomial text round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t arity = 1 + trial % 5;
    ParamPoly p = random_param_poly(rng, arity, 5, 3);
    REQUIRE(ParamPoly::parse(p.to_string(), arity) == p);
    Rational r = random_rational(rng, 100000, 1000);
    REQUIRE(Rational::parse(r.to_string()) == r);
  }
}

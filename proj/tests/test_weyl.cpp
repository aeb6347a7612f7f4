#include <random>

#include "doctest.h"
#include "rcomm/oracle.hpp"
#include "rcomm/weyl.hpp"
#include "support.hpp"

using namespace rcomm;
using rcomm::testing::random_op;

namespace {

const AlgebraSignature kPlain(4);
const AlgebraSignature kLocal(2, 0b11, 2);

Operator op(const char* text, const AlgebraSignature& sig = kPlain) { return Operator::parse(sig, text); }
Operator X(std::size_t i, int p = 1, const AlgebraSignature& sig = kPlain) { return Operator::x(sig, i, p); }
Operator D(std::size_t i, int p = 1, const AlgebraSignature& sig = kPlain) { return Operator::d(sig, i, p); }
Operator L(std::size_t a, std::size_t b) { return X(a) * D(b) - X(b) * D(a); }

}  // namespace

TEST_CASE("op_add examples") {
  Operator xd = X(0) * D(0);
  CHECK(op_is_zero(op_add(xd, -xd)));
  CHECK(op_add(xd, Operator::zero(kPlain)) == xd);
  Operator half = X(0, 2) * Rational(1, 2);
  CHECK(op_add(half, half) == X(0, 2));
}

TEST_CASE("op_mul examples") {
  CHECK(op_mul(D(0), X(0)) == X(0) * D(0) + Operator::identity(kPlain));
  CHECK(op_mul(X(0) * D(1), X(1) * D(0)) == op("1 * x1 * x2 * d1 * d2 + 1 * x1 * d1"));
  const AlgebraSignature one_local(1, 0b1);
  CHECK(op_mul(D(0, 1, one_local), X(0, -1, one_local)) ==
        X(0, -1, one_local) * D(0, 1, one_local) - X(0, -2, one_local));
}

TEST_CASE("op_commutator examples") {
  CHECK(op_commutator(D(0), X(0, 2)) == Rational(2) * X(0));
  Operator a = op("3/2 * x1^2 * d3 + (-1) * x4 * d4^2");
  CHECK(op_is_zero(op_commutator(a, a)));
  CHECK(op_commutator(L(0, 1), L(1, 2)) == L(0, 2));
}

TEST_CASE("op_apply examples") {
  auto poly = [](const char* t) { return Polynomial::parse(kPlain, t); };
  CHECK(op_apply(X(0) * D(0), poly("1 * x1^3")) == poly("3 * x1^3"));
  CHECK(op_apply(D(0, 2), poly("1 * x1^2")) == poly("2"));
  CHECK(op_apply(L(0, 1), poly("1 * x1 * x2")) == poly("1 * x1^2 + (-1) * x2^2"));
}

TEST_CASE("op_is_zero examples") {
  CHECK(op_is_zero(Operator::zero(kPlain)));
  CHECK(op_is_zero(op_commutator(D(0), X(0)) - Operator::identity(kPlain)));
  CHECK(op_is_zero(op_commutator(L(0, 1), L(2, 3))));
}

TEST_CASE("signature and exponent errors") {
  const AlgebraSignature other(3);
  CHECK_THROWS_AS(X(0) * Operator::x(other, 0), std::invalid_argument);
  CHECK_THROWS_AS(X(0) + Operator::x(other, 0), std::invalid_argument);
  CHECK_THROWS(Operator::x(kPlain, 0, -1));
  CHECK_THROWS(Operator::x(kPlain, 4));
  CHECK_THROWS(op("1 * x5"));
  CHECK_THROWS(op("1 * q1"));
  CHECK_THROWS_AS(op_apply(X(0), Polynomial(other)), std::invalid_argument);
}

TEST_CASE("parameters in coefficients") {
  Operator jm = Rational(1, 2) * D(0, 2, kLocal) +
                Operator::monomial(kLocal, [] {
                  Monomial m;
                  m.x[0] = -2;
                  return m;
                }(), ParamPoly::parameter(0, 2) * Rational(1, 2));
  Operator jp = Rational(1, 2) * X(0, 2, kLocal);
  Operator j0 = Rational(1, 2) * X(0, 1, kLocal) * D(0, 1, kLocal) + Operator::scalar(kLocal, Rational(1, 4));
  CHECK(op_commutator(jp, jm) == Rational(-2) * j0);
  std::vector<Rational> a{Rational(0), Rational(0)};
  CHECK(jm.substitute(a) == Rational(1, 2) * D(0, 2, kLocal));
}

TEST_CASE("property: associativity, Jacobi, bilinearity and degree bound") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 600; ++trial) {
    const AlgebraSignature& sig = trial % 2 ? kPlain : kLocal;
    Operator a = random_op(rng, sig, 3), b = random_op(rng, sig, 3), c = random_op(rng, sig, 3);
    REQUIRE((a * b) * c == a * (b * c));
    Operator jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    REQUIRE(op_is_zero(jacobi));
    REQUIRE(commutator(a + b, c) == commutator(a, c) + commutator(b, c));
    REQUIRE(commutator(a, b) == -commutator(b, a));
    REQUIRE((a * b).derivative_degree() <= a.derivative_degree() + b.derivative_degree());
  }
}

TEST_CASE("property: non-localized operations never produce negative powers") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    Operator p = random_op(rng, kPlain, 4) * random_op(rng, kPlain, 4);
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < kPlain.num_vars; ++i) REQUIRE(t.mono.x[i] >= 0);
    }
  }
}

TEST_CASE("property: operator text round-trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 600; ++trial) {
    const AlgebraSignature& sig = trial % 2 ? kPlain : kLocal;
    Operator a = random_op(rng, sig, 5);
    REQUIRE(Operator::parse(sig, a.to_string()) == a);
  }
}

TEST_CASE("property: serial and parallel products agree") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    const AlgebraSignature& sig = trial % 2 ? kPlain : kLocal;
    Operator a = random_op(rng, sig, 6), b = random_op(rng, sig, 6);
    REQUIRE(mul_serial(a, b) == mul_parallel(a, b));
  }
}

TEST_CASE("property: composition agrees with the normal-ordered product") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 500; ++trial) {
    const AlgebraSignature& sig = trial % 2 ? kPlain : kLocal;
    Operator a = random_op(rng, sig, 3), b = random_op(rng, sig, 3);
    REQUIRE(oracle_apply_check(a, b, 1, std::uint64_t(trial)));
  }
}

TEST_CASE("property: expression composition matches the expanded value") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 500; ++trial) {
    const AlgebraSignature& sig = trial % 2 ? kPlain : kLocal;
    Expr a = Expr::leaf(random_op(rng, sig, 2)), b = Expr::leaf(random_op(rng, sig, 2));
    Expr c = Expr::leaf(random_op(rng, sig, 2));
    Expr e = commutator(a * b, c) + Rational(3, 2) * (c * a) - b;
    auto frng = trial_rng(std::uint64_t(trial), 0);
    Polynomial f = random_test_function(sig, 4, frng);
    REQUIRE(e.apply(f) == op_apply(e.value(), f));
  }
}

#include "doctest.h"
#include "rcomm/howe.hpp"
#include "rcomm/racah.hpp"

using namespace rcomm;

TEST_CASE("make_JA examples") {
  SO2nContext ctx(3);
  const auto& sig = ctx.signature();
  SU11Triple a1 = make_JA(ctx, PairUnion(ctx, {1}));
  Operator expected = Rational(1, 2) * (Operator::identity(sig) + Operator::x(sig, 0) * Operator::d(sig, 0) +
                                        Operator::x(sig, 1) * Operator::d(sig, 1));
  CHECK(a1.J0.value() == expected);

  SU11Triple a12 = make_JA(ctx, PairUnion(ctx, {1, 2}));
  CHECK(holds({"t", "a", {}, commutator(a12.J0, a12.Jp), a12.Jp}));

  SU11Triple total = make_JA(ctx, PairUnion(ctx, {1, 2, 3}));
  Operator sum = Operator::zero(sig);
  for (int i = 1; i <= 3; ++i) sum += make_JA(ctx, PairUnion(ctx, {i})).Jp.value();
  CHECK(total.Jp.value() == sum);
}

TEST_CASE("pair unions reject bad input") {
  SO2nContext ctx(3);
  CHECK_THROWS_AS(PairUnion(ctx, {}), std::invalid_argument);
  CHECK_THROWS_AS(PairUnion(ctx, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PairUnion(ctx, {4}), std::invalid_argument);
  PairUnion a(ctx, {3, 1});
  CHECK(a.cardinality() == 4);
  CHECK(a.variables() == std::vector<int>{1, 2, 5, 6});
  CHECK(all_pair_unions(ctx).size() == 7);
}

TEST_CASE("casimir_CA examples") {
  SO2nContext ctx(3);
  const auto& sig = ctx.signature();
  Expr l12 = ctx.L(1, 2);
  CHECK(holds({"t", "single", {}, casimir_CA_expr(ctx, PairUnion(ctx, {1})),
               Rational(-1, 4) * (l12 * l12 + Expr::scalar(sig, Rational(1)))}));
  Expr six = Expr::scalar(sig, Rational(0));
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = mu + 1; nu <= 4; ++nu) six = six + ctx.L(mu, nu) * ctx.L(mu, nu);
  }
  CHECK(holds({"t", "double", {}, casimir_CA_expr(ctx, PairUnion(ctx, {1, 2})), Rational(-1, 4) * six}));
  PairUnion a(ctx, {2, 3});
  CHECK(commutator(casimir_CA(ctx, a), make_JA(ctx, a).J0.value()).is_zero());
}

TEST_CASE("verify_decomposition examples") {
  SO2nContext ctx3(3);
  CHECK(verify_decomposition(ctx3, PairUnion(ctx3, {1, 2})));
  CHECK(verify_decomposition(ctx3, PairUnion(ctx3, {1, 2, 3})));
  SO2nContext ctx4(4);
  CHECK(verify_decomposition(ctx4, PairUnion(ctx4, {1, 2, 3, 4})));
  CHECK_THROWS(decomposition_identity(ctx3, PairUnion(ctx3, {2})));
}

TEST_CASE("verify_commutant_correspondence examples") {
  SO2nContext ctx(3);
  const auto& sig = ctx.signature();
  CommutantBasis b(ctx);
  CHECK(holds({"t", "G", {1}, casimir_CA_expr(ctx, PairUnion(ctx, {1})) + Rational(1, 4) * b.G(1),
               Expr::scalar(sig, Rational(-1, 4))}));
  CHECK(holds({"t", "K", {1, 2}, casimir_CA_expr(ctx, PairUnion(ctx, {1, 2})),
               Rational(-1, 4) * b.K(1, 2)}));
  RelationReport r = verify_commutant_correspondence(SO2nContext(4));
  CHECK(r.size() == 4 + 6);
  CHECK(r.all_passed());
}

TEST_CASE("the full Howe sweep passes at n = 3") {
  SO2nContext ctx(3);
  RelationReport r = verify_identities(howe_identities(ctx));
  CHECK(r.size() > 50);
  CHECK(r.all_passed());
}

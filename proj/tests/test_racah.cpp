#include "doctest.h"
#include "rcomm/howe.hpp"
#include "rcomm/racah.hpp"

using namespace rcomm;

namespace {

std::size_t count(const RelationReport& r, const std::string& rel, bool skipped = false) {
  std::size_t c = 0;
  for (const auto& e : r.entries()) c += e.relation == rel && e.skipped == skipped;
  return c;
}

}  // namespace

TEST_CASE("make_G examples") {
  SO2nContext ctx(3);
  Operator l12 = make_L(ctx, 1, 2);
  Operator g1 = make_G(ctx, 1);
  CHECK(g1 == l12 * l12);
  CHECK(commutator(g1, l12).is_zero());
  CHECK(commutator(g1, make_L(ctx, 3, 4)).is_zero());
}

TEST_CASE("make_K examples") {
  SO2nContext ctx(3);
  Operator k12 = make_K(ctx, 1, 2);
  CHECK(commutator(k12, make_L(ctx, 1, 2)).is_zero());
  CHECK(commutator(k12, make_L(ctx, 3, 4)).is_zero());
  CHECK(commutator(k12, make_L(ctx, 5, 6)).is_zero());
  CHECK(Rational(-1, 4) * k12 == casimir_CA(ctx, PairUnion(ctx, {1, 2})));
  CHECK_THROWS(make_K(ctx, 2, 1));
  CHECK_THROWS(make_K(ctx, 1, 1));
}

TEST_CASE("commutant property at n = 3") {
  CommutantBasis b{SO2nContext(3)};
  RelationReport r = verify_identities(commutant_identities(b));
  CHECK(r.size() == 9 + 9);
  CHECK(r.all_passed());
}

TEST_CASE("verify_racah_relations at n = 3") {
  RelationReport r = verify_racah_relations(SO2nContext(3));
  CHECK(count(r, "7a") == 6);
  CHECK(count(r, "7b") == 6);
  CHECK(count(r, "7c", true) == 1);
  CHECK(count(r, "7d", true) == 1);
  CHECK(count(r, "7e", true) == 1);
  CHECK(r.all_passed());
  for (const auto& e : r.entries()) {
    if (!e.skipped) CHECK(e.residual_terms == 0);
  }
}

TEST_CASE("7e at (1,2,3,4,5) for n = 5") {
  CommutantBasis b{SO2nContext(5)};
  auto ids = racah_identities(b);
  bool found = false;
  for (const auto& id : ids) {
    if (id.relation == "7e" && id.tuple == std::vector<int>{1, 2, 3, 4, 5}) {
      found = true;
      CHECK(holds(id));
    }
  }
  CHECK(found);
}

TEST_CASE("the printed one-index shift breaks 7b") {
  CommutantBasis printed(SO2nContext(3), CasimirShift::printed);
  RelationReport r = verify_racah_relations(printed);
  CHECK(count(r, "7b") == 6);
  std::size_t failing_7b = 0;
  for (const auto& e : r.entries()) failing_7b += e.relation == "7b" && !e.passed;
  CHECK(failing_7b == 6);
}

TEST_CASE("index symmetries") {
  CommutantBasis b{SO2nContext(4)};
  CHECK(verify_identities(racah_symmetry_identities(b)).all_passed());
  CHECK_THROWS(b.F(1, 1, 2));
  CHECK_THROWS(b.P(2, 2));
  CHECK_THROWS(b.G(5));
}

TEST_CASE("verify_dependency examples") {
  CommutantBasis b3{SO2nContext(3)};
  CHECK(verify_dependency(b3, {1, 2}));
  CHECK(verify_dependency(b3, {1, 2, 3}));
  CommutantBasis b4{SO2nContext(4)};
  CHECK(verify_dependency(b4, {1, 2, 3, 4}));
  CHECK_THROWS(dependency_casimir(b3, {1}));
  CHECK_THROWS(dependency_casimir(b3, {1, 1}));
}

TEST_CASE("serial and parallel racah sweeps agree at n = 4") {
  CommutantBasis b{SO2nContext(4)};
  RelationReport s = verify_racah_relations(b, Schedule::serial);
  RelationReport p = verify_racah_relations(b, Schedule::parallel, 4);
  REQUIRE(s.size() == p.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(s.entries()[k].relation == p.entries()[k].relation);
    CHECK(s.entries()[k].tuple == p.entries()[k].tuple);
    CHECK(s.entries()[k].passed == p.entries()[k].passed);
  }
  CHECK(s.all_passed());
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "rcomm/howe.hpp"
#include "rcomm/oracle.hpp"
#include "rcomm/racah.hpp"
#include "rcomm/reduction.hpp"
#include "support.hpp"

using namespace rcomm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// Every identity checked symbolically below, with its verdict, for the
// oracle criterion.
std::vector<Identity> g_checked;
std::vector<bool> g_verdicts;

RelationReport check(std::vector<Identity> ids) {
  RelationReport r = verify_identities(ids);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    g_checked.push_back(std::move(ids[k]));
    g_verdicts.push_back(r.entries()[k].passed);
  }
  return r;
}

std::vector<Identity> only(const std::vector<Identity>& ids, const std::vector<std::string>& relations) {
  std::vector<Identity> out;
  for (const auto& id : ids) {
    if (std::find(relations.begin(), relations.end(), id.relation) != relations.end()) out.push_back(id);
  }
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome o2n_structure() {
  std::ostringstream d;
  bool ok = true;
  double t3 = 0, t5 = 0;
  for (int n : {3, 4, 5}) {
    auto start = Clock::now();
    RelationReport r = check(o2n_identities(SO2nContext(n)));
    double t = seconds_since(start);
    if (n == 3) t3 = t;
    if (n == 5) t5 = t;
    ok = ok && r.all_passed();
    d << "n=" << n << ": " << r.passed_count() << "/" << r.size() << " in " << fmt(t) << "; ";
  }
  ok = ok && t3 < 1.0 && t5 < 60.0;
  return {ok, d.str()};
}

Outcome casimir_centrality() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 4}) {
    SO2nContext ctx(n);
    RelationReport full = check(casimir_centrality_identities(ctx));
    RelationReport truncated = check(casimir_centrality_identities(ctx, n));
    ok = ok && full.all_passed() && truncated.failed_count() > 0;
    d << "n=" << n << ": bound 2n " << full.passed_count() << "/" << full.size() << " central, bound n fails "
      << truncated.failed_count() << "/" << truncated.size() << "; ";
  }
  return {ok, d.str()};
}

Outcome racah_relations() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 4}) {
    CommutantBasis b{SO2nContext(n)};
    RelationReport r = check(racah_identities(b));
    ok = ok && r.all_passed() && r.size() == (n == 3 ? 12u : 96u);
    d << "n=" << n << ": " << r.passed_count() << "/" << r.size() << "; ";
  }
  // The whole n = 5 sweep is timed; its 7e instances go to the oracle.
  auto start = Clock::now();
  CommutantBasis b5{SO2nContext(5)};
  auto ids5 = racah_identities(b5);
  RelationReport r5 = verify_identities(ids5);
  double t = seconds_since(start);
  check(only(ids5, {"7e"}));
  ok = ok && r5.all_passed() && r5.for_relation("7e").size() == 120 && t < 600.0;
  d << "n=5: " << r5.passed_count() << "/" << r5.size() << " incl. 120 of 7e in " << fmt(t);
  return {ok, d.str()};
}

Outcome commutant_property() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 4, 5}) {
    RelationReport r = check(commutant_identities(CommutantBasis{SO2nContext(n)}));
    ok = ok && r.all_passed();
    d << "n=" << n << ": " << r.passed_count() << "/" << r.size() << "; ";
  }
  return {ok, d.str()};
}

Outcome howe_layer() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 4}) {
    SO2nContext ctx(n);
    auto ids = howe_identities(ctx);
    std::size_t unions = all_pair_unions(ctx).size();
    RelationReport r = check(ids);
    std::size_t closed = r.for_relation("closed-form").size();
    std::size_t decomp = r.for_relation("decomposition").size();
    std::size_t corr = r.for_relation("correspondence-G").size() + r.for_relation("correspondence-K").size();
    ok = ok && r.all_passed() && closed == unions && corr == std::size_t(n + n * (n - 1) / 2) && decomp > 0;
    d << "n=" << n << ": " << r.passed_count() << "/" << r.size() << " (closed forms " << closed << ", decompositions "
      << decomp << ", correspondences " << corr << "); ";
  }
  return {ok, d.str()};
}

Outcome reduction_layer() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {2, 3, 4}) {
    ReducedContext ctx(n);
    std::vector<Identity> ids;
    for (auto& id : reduction_identities(ctx)) {
      if (id.relation != "Q-symmetry" && id.relation != "C-pair-symmetry") ids.push_back(std::move(id));
    }
    RelationReport r = check(ids);
    ok = ok && r.all_passed() && r.for_relation("total-casimir").size() == 1 &&
         r.for_relation("C-single").size() == std::size_t(n) && r.for_relation("reduced-J:[J+,J-]=-2J0").size() == std::size_t(n);
    d << "n=" << n << ": " << r.passed_count() << "/" << r.size() << "; ";
  }
  return {ok, d.str()};
}

Outcome superintegrability() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {3, 4}) {
    ReducedContext ctx(n);
    RelationReport sym = check(only(reduction_identities(ctx), {"Q-symmetry", "C-pair-symmetry"}));
    RelationReport rac = check(reduced_racah_identities(ReducedRacahBasis(ctx)));
    ok = ok && sym.all_passed() && rac.all_passed() && sym.for_relation("Q-symmetry").size() == std::size_t(n * (n - 1) / 2);
    d << "n=" << n << ": [Q,C] " << sym.for_relation("Q-symmetry").size() << " ok, reduced relations "
      << rac.passed_count() << "/" << rac.size() << "; ";
  }
  ReducedContext ctx5(5);
  RelationReport e5 = check(only(reduced_racah_identities(ReducedRacahBasis(ctx5)), {"7e"}));
  ok = ok && e5.all_passed();
  d << "n=5 reduced 7e " << e5.passed_count() << "/" << e5.size();
  return {ok, d.str()};
}

Outcome oracle_concordance() {
  auto start = Clock::now();
  RelationReport r = oracle_sweep(g_checked, g_verdicts, 100, 20261017);
  std::size_t failing = std::count(g_verdicts.begin(), g_verdicts.end(), false);
  ReportEntry leibniz = leibniz_sweep(AlgebraSignature(4, 0b1100, 2), 1000, 20261017);
  std::ostringstream d;
  d << r.passed_count() << "/" << r.size() << " identities concordant at 100 trials (" << failing
    << " symbolically failing, all detected); composition check 1000 trials " << (leibniz.passed ? "ok" : "FAILED")
    << "; " << fmt(seconds_since(start));
  return {r.all_passed() && leibniz.passed, d.str()};
}

Outcome property_suites() {
  using rcomm::testing::random_op;
  using rcomm::testing::random_param_poly;
  constexpr int kCases = 500;
  std::mt19937_64 rng(8675309);
  int bad_ring = 0, bad_weyl = 0, bad_text = 0;
  for (int t = 0; t < kCases; ++t) {
    ParamPoly a = random_param_poly(rng, 3), b = random_param_poly(rng, 3), c = random_param_poly(rng, 3);
    bad_ring += !(a + b == b + a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                  a * b == b * a && (a - a).is_zero());
  }
  const AlgebraSignature plain(3), local(2, 0b11, 2);
  for (int t = 0; t < kCases; ++t) {
    const AlgebraSignature& sig = t % 2 ? plain : local;
    Operator a = random_op(rng, sig, 3), b = random_op(rng, sig, 3), c = random_op(rng, sig, 3);
    Operator jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    bad_weyl += !((a * b) * c == a * (b * c) && jacobi.is_zero());
  }
  for (int t = 0; t < kCases; ++t) {
    const AlgebraSignature& sig = t % 2 ? plain : local;
    Operator a = random_op(rng, sig, 5);
    ParamPoly p = random_param_poly(rng, 4, 5, 3);
    bad_text += !(Operator::parse(sig, a.to_string()) == a && ParamPoly::parse(p.to_string(), 4) == p);
  }
  std::ostringstream d;
  d << kCases << " cases each: ring axioms " << bad_ring << " failures, associativity/Jacobi " << bad_weyl
    << " failures, text round-trip " << bad_text << " failures";
  return {bad_ring == 0 && bad_weyl == 0 && bad_text == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"o(2n) structure relations, n = 3, 4, 5", o2n_structure},
      {"quadratic Casimir centrality with bound 2n; bound n fails", casimir_centrality},
      {"commutant relations 7a-7e of the Racah algebra", racah_relations},
      {"invariants commute with every L_{2s-1,2s}", commutant_property},
      {"Howe layer: closed form, decomposition, correspondence", howe_layer},
      {"reduction layer: closed forms and total Casimir", reduction_layer},
      {"superintegrability and reduced relations", superintegrability},
      {"oracle concordance", oracle_concordance},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %s  -- %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

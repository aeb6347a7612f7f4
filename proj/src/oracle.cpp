#include "rcomm/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rcomm {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(trial), std::uint32_t(trial >> 32),
                    std::uint32_t(salt), std::uint32_t(salt >> 32)};
  return std::mt19937_64(seq);
}

namespace {

Rational small_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  long p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(p, den(rng));
}

}  // namespace

TestPoint random_test_point(const AlgebraSignature& sig, std::mt19937_64& rng) {
  TestPoint p;
  // Zero is excluded everywhere, not only on localized coordinates, so the
  // same draw serves both kinds of signature.
  for (std::size_t i = 0; i < sig.num_vars; ++i) p.coordinates.push_back(small_rational(rng, true));
  for (std::size_t i = 0; i < sig.num_params; ++i) p.params.push_back(small_rational(rng, false));
  return p;
}

Polynomial random_test_function(const AlgebraSignature& sig, int max_exponent, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 8);
  std::vector<Polynomial::Term> terms;
  const int n_terms = count(rng);
  for (int t = 0; t < n_terms; ++t) {
    Polynomial::Term term;
    for (std::size_t i = 0; i < sig.num_vars; ++i) {
      const int lo = sig.is_localized(i) ? -2 : 0;
      term.exps[i] = std::int8_t(std::uniform_int_distribution<int>(lo, max_exponent)(rng));
    }
    term.coeff = ParamPoly(small_rational(rng, true), sig.num_params);
    terms.push_back(std::move(term));
  }
  return Polynomial::from_terms(sig, std::move(terms));
}

int test_function_degree(int derivative_degree) { return std::max(4, derivative_degree + 1); }

bool oracle_equiv(const Operator& a, const Operator& b, int trials, std::uint64_t seed) {
  if (a.signature() != b.signature()) throw std::invalid_argument("oracle_equiv: signature mismatch");
  const auto& sig = a.signature();
  const int degree = test_function_degree(std::max(a.derivative_degree(), b.derivative_degree()));
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    Polynomial f = random_test_function(sig, degree, rng);
    TestPoint p = random_test_point(sig, rng);
    if (op_apply(a, f).evaluate(p.coordinates, p.params) != op_apply(b, f).evaluate(p.coordinates, p.params)) {
      return false;
    }
  }
  return true;
}

namespace {

bool expr_trial(const Expr& a, const Expr& b, int degree, std::uint64_t seed, int trial, int expand_depth) {
  const auto& sig = a.signature();
  auto rng = trial_rng(seed, std::uint64_t(trial));
  Polynomial f = random_test_function(sig, degree, rng);
  TestPoint p = random_test_point(sig, rng);
  Expr::ApplyContext ctx;
  ctx.params = p.params;
  ctx.expand_depth = expand_depth;
  Rational lhs = a.apply(f, ctx).evaluate(p.coordinates, p.params);
  Rational rhs = b.apply(f, ctx).evaluate(p.coordinates, p.params);
  return lhs == rhs;
}

}  // namespace

bool oracle_equiv(const Expr& a, const Expr& b, int trials, std::uint64_t seed) {
  if (a.signature() != b.signature()) throw std::invalid_argument("oracle_equiv: signature mismatch");
  const int degree = test_function_degree(std::max(a.derivative_degree_bound(), b.derivative_degree_bound()));
  for (int t = 0; t < trials; ++t) {
    if (!expr_trial(a, b, degree, seed, t, -1)) return false;
  }
  return true;
}

bool oracle_apply_check(const Operator& a, const Operator& b, int trials, std::uint64_t seed) {
  if (a.signature() != b.signature()) throw std::invalid_argument("oracle_apply_check: signature mismatch");
  const auto& sig = a.signature();
  const Operator ab = a * b;
  const int degree = test_function_degree(a.derivative_degree() + b.derivative_degree());
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t));
    Polynomial f = random_test_function(sig, degree, rng);
    TestPoint p = random_test_point(sig, rng);
    Rational composed = op_apply(a, op_apply(b, f)).evaluate(p.coordinates, p.params);
    if (op_apply(ab, f).evaluate(p.coordinates, p.params) != composed) return false;
  }
  return true;
}

Operator random_operator(const AlgebraSignature& sig, int max_terms, std::mt19937_64& rng) {
  std::vector<Operator::Term> terms;
  const int n_terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int t = 0; t < n_terms; ++t) {
    Operator::Term term{Monomial{}, ParamPoly(sig.num_params)};
    for (std::size_t i = 0; i < sig.num_vars; ++i) {
      term.mono.x[i] = std::int8_t(std::uniform_int_distribution<int>(sig.is_localized(i) ? -2 : 0, 3)(rng));
      term.mono.d[i] = std::int8_t(std::uniform_int_distribution<int>(0, 2)(rng));
    }
    term.coeff = ParamPoly(small_rational(rng, true), sig.num_params);
    if (sig.num_params > 0) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(0, sig.num_params - 1)(rng);
      term.coeff += ParamPoly::parameter(j, sig.num_params) * small_rational(rng, false);
    }
    terms.push_back(std::move(term));
  }
  return Operator::from_terms(sig, std::move(terms));
}

ReportEntry leibniz_sweep(const AlgebraSignature& sig, int trials, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  ReportEntry e;
  e.suite = "oracle";
  e.relation = "leibniz";
  e.passed = true;
  for (int t = 0; t < trials && e.passed; ++t) {
    auto rng = trial_rng(seed, std::uint64_t(t), 1);
    Operator a = random_operator(sig, 3, rng);
    Operator b = random_operator(sig, 3, rng);
    if (!oracle_apply_check(a, b, 1, rng())) {
      e.passed = false;
      e.note = "composition mismatch at trial " + std::to_string(t);
    }
  }
  e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

OracleVerdict oracle_identity(const Identity& id, int trials, std::uint64_t seed, int expand_depth) {
  OracleVerdict v;
  const int degree =
      test_function_degree(std::max(id.lhs.derivative_degree_bound(), id.rhs.derivative_degree_bound()));
  for (int t = 0; t < trials; ++t) {
    ++v.trials_run;
    if (!expr_trial(id.lhs, id.rhs, degree, seed, t, expand_depth)) {
      v.agrees = false;
      v.first_disagreement = t;
      break;
    }
  }
  return v;
}

namespace {

ReportEntry oracle_entry(const Identity& id, bool symbolic, int trials, std::uint64_t seed, int expand_depth) {
  auto start = std::chrono::steady_clock::now();
  OracleVerdict v = oracle_identity(id, trials, seed, expand_depth);
  ReportEntry e;
  e.suite = "oracle";
  e.relation = id.suite + "/" + id.relation;
  e.tuple = id.tuple;
  e.passed = v.agrees == symbolic;
  e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!e.passed) {
    e.note = symbolic ? "disagreement at trial " + std::to_string(v.first_disagreement)
                      : "no disagreement in " + std::to_string(v.trials_run) + " trials for a failing identity";
  }
  return e;
}

}  // namespace

RelationReport oracle_sweep(const std::vector<Identity>& ids, const std::vector<bool>& symbolic, int trials,
                            std::uint64_t seed, int expand_depth, Schedule schedule, int jobs) {
  if (symbolic.size() != ids.size()) throw std::invalid_argument("oracle_sweep: one symbolic verdict per identity");
  std::vector<ReportEntry> results(ids.size());
  if (schedule == Schedule::serial) {
    for (std::size_t k = 0; k < ids.size(); ++k) results[k] = oracle_entry(ids[k], symbolic[k], trials, seed, expand_depth);
  } else {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const long count = long(ids.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) {
      results[std::size_t(k)] = oracle_entry(ids[std::size_t(k)], symbolic[std::size_t(k)], trials, seed, expand_depth);
    }
  }
  RelationReport report;
  for (auto& r : results) report.add(std::move(r));
  return report;
}

}  // namespace rcomm

#ifndef RCOMM_ORACLE_HPP
#define RCOMM_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rcomm/report.hpp"

namespace rcomm {

/// A point at which a test function is evaluated, with values for the
/// free parameters a_1..a_p.
struct TestPoint {
  std::vector<Rational> coordinates;
  std::vector<Rational> params;
};

/// RNG stream for one trial; depends only on (seed, trial, salt), so any
/// schedule over trials sees the same draws.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt = 0);

/// Small nonzero rationals p/q with |p| <= 7, 1 <= q <= 5 for every
/// coordinate; parameters may be zero.
TestPoint random_test_point(const AlgebraSignature& sig, std::mt19937_64& rng);

/// A Laurent polynomial with at most 8 terms and small rational
/// coefficients. Exponents lie in [-2, max_exponent] on localized
/// variables and [0, max_exponent] otherwise.
Polynomial random_test_function(const AlgebraSignature& sig, int max_exponent, std::mt19937_64& rng);

/// max(4, derivative_degree + 1).
int test_function_degree(int derivative_degree);

/// (A f)(p) == (B f)(p) on `trials` random pairs (f, p).
bool oracle_equiv(const Operator& a, const Operator& b, int trials, std::uint64_t seed);
/// The same check evaluated by composition through the expression trees,
/// never expanding a product symbolically.
bool oracle_equiv(const Expr& a, const Expr& b, int trials, std::uint64_t seed);

/// (A B) f == A (B f) at random (f, p), with A B from the normal-ordering
/// product.
bool oracle_apply_check(const Operator& a, const Operator& b, int trials, std::uint64_t seed);

/// Up to `max_terms` terms with position exponents in [-2, 3] (localized)
/// or [0, 3], derivative exponents in [0, 2], and coefficients r + s a_j
/// when the signature has parameters.
Operator random_operator(const AlgebraSignature& sig, int max_terms, std::mt19937_64& rng);

/// The composition check on `trials` independent random triples (A, B, f),
/// one trial each. Suite "oracle", relation "leibniz".
ReportEntry leibniz_sweep(const AlgebraSignature& sig, int trials, std::uint64_t seed);

struct OracleVerdict {
  bool agrees = true;      // no disagreeing trial
  int trials_run = 0;
  int first_disagreement = -1;
};

/// Pointwise check of one identity. Products and commutators nested
/// `expand_depth` or more deep are applied through their expanded values,
/// the outer ones by composition; -1 composes all the way to the leaves.
OracleVerdict oracle_identity(const Identity& id, int trials, std::uint64_t seed, int expand_depth = 1);

/// Runs the oracle on every identity and compares with the symbolic
/// verdicts (one per identity). An entry passes when both agree. Entries
/// carry suite "oracle" and relation "<suite>/<relation>".
RelationReport oracle_sweep(const std::vector<Identity>& ids, const std::vector<bool>& symbolic, int trials,
                            std::uint64_t seed, int expand_depth = 1, Schedule schedule = Schedule::parallel,
                            int jobs = 0);

}  // namespace rcomm

#endif  // RCOMM_ORACLE_HPP

#ifndef RCOMM_TESTS_SUPPORT_HPP
#define RCOMM_TESTS_SUPPORT_HPP

#include <random>

#include "rcomm/weyl.hpp"

namespace rcomm::testing {

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 6) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline ParamPoly random_param_poly(std::mt19937_64& rng, std::size_t arity, int max_terms = 4, int max_exp = 2) {
  ParamPoly p(arity);
  const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int t = 0; t < terms; ++t) {
    ParamExponents e{};
    for (std::size_t i = 0; i < arity; ++i) e[i] = std::uint8_t(std::uniform_int_distribution<int>(0, max_exp)(rng));
    p += ParamPoly::monomial(e, random_rational(rng), arity);
  }
  return p;
}

inline Operator random_op(std::mt19937_64& rng, const AlgebraSignature& sig, int max_terms = 4, int max_exp = 2) {
  std::vector<Operator::Term> terms;
  const int n = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int t = 0; t < n; ++t) {
    Operator::Term term{Monomial{}, random_param_poly(rng, sig.num_params, 2, 1)};
    if (sig.num_params == 0) term.coeff = ParamPoly(random_rational(rng), 0);
    for (std::size_t i = 0; i < sig.num_vars; ++i) {
      const int lo = sig.is_localized(i) ? -max_exp : 0;
      term.mono.x[i] = std::int8_t(std::uniform_int_distribution<int>(lo, max_exp)(rng));
      term.mono.d[i] = std::int8_t(std::uniform_int_distribution<int>(0, max_exp)(rng));
    }
    terms.push_back(std::move(term));
  }
  return Operator::from_terms(sig, std::move(terms));
}

}  // namespace rcomm::testing

#endif  // RCOMM_TESTS_SUPPORT_HPP

#ifndef RCOMM_WEYL_HPP
#define RCOMM_WEYL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcomm/coeff.hpp"

namespace rcomm {

inline constexpr std::size_t kMaxVars = 16;

/// Which Weyl algebra an operator lives in: m position variables x_1..x_m
/// with derivatives d_1..d_m, a subset of positions that may carry negative
/// powers, and the number of free parameters a_1..a_k in the coefficients.
struct AlgebraSignature {
  std::size_t num_vars = 1;
  std::uint32_t localized_mask = 0;
  std::size_t num_params = 0;

  AlgebraSignature() = default;
  AlgebraSignature(std::size_t vars, std::uint32_t localized = 0, std::size_t params = 0);

  static AlgebraSignature localized_all(std::size_t vars, std::size_t params);

  bool is_localized(std::size_t var) const { return (localized_mask >> var) & 1u; }
  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

/// x^xexp d^dexp, normal-ordered: every position factor to the left of every
/// derivative. Indices are zero-based here and one-based in text.
struct Monomial {
  std::array<std::int8_t, kMaxVars> x{};
  std::array<std::int8_t, kMaxVars> d{};

  int degree() const;
  int derivative_degree() const;
  bool valid_for(const AlgebraSignature& sig) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order on (x, d) concatenated.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse normal-ordered element of the (localized) Weyl algebra with
/// ParamPoly coefficients. Terms are sorted by monomial_less and never zero.
class Operator {
 public:
  struct Term {
    Monomial mono;
    ParamPoly coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Operator(const AlgebraSignature& sig) : sig_(sig) {}

  static Operator zero(const AlgebraSignature& sig) { return Operator(sig); }
  static Operator scalar(const AlgebraSignature& sig, const ParamPoly& c);
  static Operator scalar(const AlgebraSignature& sig, const Rational& c);
  static Operator identity(const AlgebraSignature& sig) { return scalar(sig, Rational(1)); }
  /// x_{var+1}^power
  static Operator x(const AlgebraSignature& sig, std::size_t var, int power = 1);
  /// d_{var+1}^power
  static Operator d(const AlgebraSignature& sig, std::size_t var, int power = 1);
  static Operator monomial(const AlgebraSignature& sig, const Monomial& m, const ParamPoly& c);
  /// Builds from unsorted, possibly repeated terms.
  static Operator from_terms(const AlgebraSignature& sig, std::vector<Term> terms);
  /// Adopts terms already sorted by monomial_less, nonzero and unique.
  static Operator from_canonical_terms(const AlgebraSignature& sig, std::vector<Term> terms);

  /// Inverse of to_string.
  static Operator parse(const AlgebraSignature& sig, std::string_view text);

  const AlgebraSignature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int derivative_degree() const;
  /// Coefficient of a monomial, zero if absent.
  ParamPoly coefficient(const Monomial& m) const;

  /// Replaces every parameter by a value; the arity is kept.
  Operator substitute(std::span<const Rational> params) const;

  std::string to_string() const;

  Operator operator-() const;
  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Rational& r);
  Operator& operator*=(const ParamPoly& c);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const Rational& r) { return a *= r; }
  friend Operator operator*(const Rational& r, Operator a) { return a *= r; }
  friend Operator operator*(Operator a, const ParamPoly& c) { return a *= c; }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend bool operator==(const Operator& a, const Operator& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  void check_signature(const Operator& o) const;
  void merge(const Operator& o, bool subtract);

  AlgebraSignature sig_;
  std::vector<Term> terms_;
};

/// Product kernels. Both produce identical canonical results; the parallel
/// one splits the left factor's terms across OpenMP threads.
Operator mul_serial(const Operator& a, const Operator& b);
Operator mul_parallel(const Operator& a, const Operator& b);

/// Minimum number of term pairs before operator* dispatches to mul_parallel.
inline constexpr std::size_t kParallelMulThreshold = 1u << 16;

Operator op_add(const Operator& a, const Operator& b);
Operator op_mul(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);
inline Operator op_commutator(const Operator& a, const Operator& b) { return commutator(a, b); }
inline bool op_is_zero(const Operator& a) { return a.is_zero(); }

/// Laurent polynomial in x_1..x_m (negative powers only on localized
/// variables) with ParamPoly coefficients; the functions operators act on.
class Polynomial {
 public:
  using Exponents = std::array<std::int8_t, kMaxVars>;
  struct Term {
    Exponents exps{};
    ParamPoly coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(const AlgebraSignature& sig) : sig_(sig) {}
  static Polynomial from_terms(const AlgebraSignature& sig, std::vector<Term> terms);
  static Polynomial monomial(const AlgebraSignature& sig, const Exponents& e, const ParamPoly& c);
  /// Parses the operator text format restricted to position variables.
  static Polynomial parse(const AlgebraSignature& sig, std::string_view text);

  const AlgebraSignature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  /// Exact value at a point; every localized coordinate must be nonzero.
  Rational evaluate(std::span<const Rational> point, std::span<const Rational> params) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& r);
  Polynomial& operator*=(const ParamPoly& c);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial op_apply(const Operator& a, const Polynomial& f);

 private:
  AlgebraSignature sig_;
  std::vector<Term> terms_;
};

/// Acts with A on f by direct differentiation of each monomial of f.
Polynomial op_apply(const Operator& a, const Polynomial& f);

}  // namespace rcomm

#endif  // RCOMM_WEYL_HPP

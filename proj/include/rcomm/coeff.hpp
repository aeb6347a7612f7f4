#ifndef RCOMM_COEFF_HPP
#define RCOMM_COEFF_HPP

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcomm {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  const mpq_class& raw() const { return value_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  mpq_class value_;
};

inline constexpr std::size_t kMaxParams = 16;

/// Exponents of a_1..a_n in one parameter monomial.
using ParamExponents = std::array<std::uint8_t, kMaxParams>;

/// Graded lexicographic order on parameter exponent vectors.
bool param_exponents_less(const ParamExponents& a, const ParamExponents& b);

/// Sparse polynomial in the parameters a_1..a_n over the rationals.
///
/// Terms are kept sorted in graded lexicographic order with no zero
/// coefficients, so structurally equal values are equal polynomials. The
/// arity (number of parameters) is part of the value; arithmetic between
/// polynomials of different arity throws std::invalid_argument.
class ParamPoly {
 public:
  struct Term {
    ParamExponents exponents{};
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ParamPoly(std::size_t arity = 0);
  ParamPoly(const Rational& value, std::size_t arity);

  static ParamPoly constant(const Rational& value, std::size_t arity) { return {value, arity}; }
  /// The symbol a_{index+1}.
  static ParamPoly parameter(std::size_t index, std::size_t arity);
  static ParamPoly monomial(const ParamExponents& exps, const Rational& coeff, std::size_t arity);
  static ParamPoly parse(std::string_view text, std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  std::size_t degree() const;

  Rational evaluate(std::span<const Rational> values) const;
  ParamPoly with_arity(std::size_t arity) const;

  std::string to_string() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& r);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const Rational& r) { return a *= r; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const ParamPoly& o) const;
  void merge(const ParamPoly& o, bool subtract);

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

inline ParamPoly coeff_add(const ParamPoly& x, const ParamPoly& y) { return x + y; }
inline ParamPoly coeff_mul(const ParamPoly& x, const ParamPoly& y) { return x * y; }
inline bool coeff_is_zero(const ParamPoly& x) { return x.is_zero(); }

}  // namespace rcomm

#endif  // RCOMM_COEFF_HPP

#include "rcomm/coeff.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rcomm/text.hpp"

namespace rcomm {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = text::trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(mpq_class(n, d));
}

bool param_exponents_less(const ParamExponents& a, const ParamExponents& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a > b;
}

ParamPoly::ParamPoly(std::size_t arity) : arity_(arity) {
  if (arity > kMaxParams) throw std::invalid_argument("ParamPoly: too many parameters");
}

ParamPoly::ParamPoly(const Rational& value, std::size_t arity) : ParamPoly(arity) {
  if (!value.is_zero()) terms_.push_back({ParamExponents{}, value});
}

ParamPoly ParamPoly::parameter(std::size_t index, std::size_t arity) {
  if (index >= arity) throw std::out_of_range("ParamPoly::parameter: index out of range");
  ParamExponents e{};
  e[index] = 1;
  return monomial(e, Rational(1), arity);
}

ParamPoly ParamPoly::monomial(const ParamExponents& exps, const Rational& coeff, std::size_t arity) {
  ParamPoly p(arity);
  for (std::size_t i = arity; i < kMaxParams; ++i) {
    if (exps[i] != 0) throw std::invalid_argument("ParamPoly::monomial: exponent beyond arity");
  }
  if (!coeff.is_zero()) p.terms_.push_back({exps, coeff});
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents == ParamExponents{});
}

Rational ParamPoly::constant_term() const {
  // The empty monomial sorts first.
  if (!terms_.empty() && terms_[0].exponents == ParamExponents{}) return terms_[0].coeff;
  return Rational(0);
}

std::size_t ParamPoly::degree() const {
  std::size_t deg = 0;
  for (const auto& t : terms_) {
    deg = std::max<std::size_t>(deg, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  }
  return deg;
}

Rational ParamPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != arity_) throw std::invalid_argument("ParamPoly::evaluate: wrong number of values");
  Rational sum;
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < arity_; ++i) {
      for (unsigned k = 0; k < t.exponents[i]; ++k) term *= values[i];
    }
    sum += term;
  }
  return sum;
}

ParamPoly ParamPoly::with_arity(std::size_t arity) const {
  ParamPoly out(arity);
  for (const auto& t : terms_) {
    for (std::size_t i = arity; i < kMaxParams; ++i) {
      if (t.exponents[i] != 0) throw std::invalid_argument("ParamPoly::with_arity: parameter would be dropped");
    }
  }
  out.terms_ = terms_;
  return out;
}

void ParamPoly::check_arity(const ParamPoly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("ParamPoly: mismatched parameter arity");
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void ParamPoly::merge(const ParamPoly& o, bool subtract) {
  check_arity(o);
  if (o.terms_.empty()) return;
  // Constant fast path: both single constant terms.
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].exponents == o.terms_[0].exponents) {
    if (subtract) {
      terms_[0].coeff -= o.terms_[0].coeff;
    } else {
      terms_[0].coeff += o.terms_[0].coeff;
    }
    if (terms_[0].coeff.is_zero()) terms_.clear();
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && param_exponents_less(a->exponents, b->exponents))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || param_exponents_less(b->exponents, a->exponents)) {
      out.push_back(subtract ? Term{b->exponents, -b->coeff} : *b);
      ++b;
    } else {
      Rational c = subtract ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  merge(o, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  merge(o, true);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= r;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_arity(b);
  ParamPoly out(a.arity_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    ParamExponents e{};
    for (std::size_t i = 0; i < a.arity_; ++i) {
      unsigned s = unsigned(a.terms_[0].exponents[i]) + b.terms_[0].exponents[i];
      if (s > 255) throw std::overflow_error("ParamPoly: exponent overflow");
      e[i] = std::uint8_t(s);
    }
    out.terms_.push_back({e, a.terms_[0].coeff * b.terms_[0].coeff});
    return out;
  }
  std::vector<ParamPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      ParamExponents e{};
      for (std::size_t i = 0; i < a.arity_; ++i) {
        unsigned s = unsigned(ta.exponents[i]) + tb.exponents[i];
        if (s > 255) throw std::overflow_error("ParamPoly: exponent overflow");
        e[i] = std::uint8_t(s);
      }
      prods.push_back({e, ta.coeff * tb.coeff});
    }
  }
  std::sort(prods.begin(), prods.end(),
            [](const auto& x, const auto& y) { return param_exponents_less(x.exponents, y.exponents); });
  for (auto& t : prods) {
    if (!out.terms_.empty() && out.terms_.back().exponents == t.exponents) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) s += " + ";
    s += terms_[k].coeff.to_string();
    for (std::size_t i = 0; i < arity_; ++i) {
      unsigned e = terms_[k].exponents[i];
      if (e == 0) continue;
      s += "*a" + std::to_string(i + 1);
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

ParamPoly ParamPoly::parse(std::string_view input, std::size_t arity) {
  ParamPoly out(arity);
  auto body = text::trim(input);
  if (body.empty()) throw std::invalid_argument("ParamPoly::parse: empty input");
  for (auto term_text : text::split_top_level(body, '+')) {
    term_text = text::trim(term_text);
    if (term_text.empty()) throw std::invalid_argument("ParamPoly::parse: empty term");
    Rational coeff(1);
    ParamExponents exps{};
    bool first = true;
    for (auto factor : text::split_top_level(term_text, '*')) {
      factor = text::trim(factor);
      if (factor.empty()) throw std::invalid_argument("ParamPoly::parse: empty factor");
      bool negated = false;
      if (first && factor.front() == '-' && factor.size() > 1 && factor[1] == 'a') {
        negated = true;
        factor.remove_prefix(1);
      }
      if (factor.front() == 'a') {
        auto [index, power] = text::parse_symbol(factor, 'a');
        if (index < 1 || std::size_t(index) > arity || power < 0) {
          throw std::invalid_argument("ParamPoly::parse: bad parameter '" + std::string(factor) + "'");
        }
        unsigned s = exps[index - 1] + unsigned(power);
        if (s > 255) throw std::overflow_error("ParamPoly::parse: exponent overflow");
        exps[index - 1] = std::uint8_t(s);
        if (negated) coeff = -coeff;
      } else if (first) {
        coeff = Rational::parse(factor);
      } else {
        throw std::invalid_argument("ParamPoly::parse: coefficient must come first");
      }
      first = false;
    }
    out += monomial(exps, coeff, arity);
  }
  return out;
}

}  // namespace rcomm

#include "rcomm/weyl.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "rcomm/text.hpp"

namespace rcomm {

AlgebraSignature::AlgebraSignature(std::size_t vars, std::uint32_t localized, std::size_t params)
    : num_vars(vars), localized_mask(localized), num_params(params) {
  if (vars == 0 || vars > kMaxVars) throw std::invalid_argument("AlgebraSignature: variable count out of range");
  if (vars < 32 && (localized >> vars) != 0) {
    throw std::invalid_argument("AlgebraSignature: localized index out of range");
  }
  if (params > kMaxParams) throw std::invalid_argument("AlgebraSignature: too many parameters");
}

AlgebraSignature AlgebraSignature::localized_all(std::size_t vars, std::size_t params) {
  return AlgebraSignature(vars, vars >= 32 ? ~0u : (1u << vars) - 1u, params);
}

int Monomial::degree() const {
  int s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) s += x[i] + d[i];
  return s;
}

int Monomial::derivative_degree() const {
  int s = 0;
  for (auto v : d) s += v;
  return s;
}

bool Monomial::valid_for(const AlgebraSignature& sig) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (i >= sig.num_vars) {
      if (x[i] != 0 || d[i] != 0) return false;
      continue;
    }
    if (d[i] < 0) return false;
    if (x[i] < 0 && !sig.is_localized(i)) return false;
  }
  return true;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x > b.x;
  return a.d > b.d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : m.x) h = (h ^ std::uint8_t(v)) * 1099511628211ull;
  for (auto v : m.d) h = (h ^ std::uint8_t(v)) * 1099511628211ull;
  return std::size_t(h);
}

namespace {

using TermMap = std::unordered_map<Monomial, ParamPoly, MonomialHash>;

std::int8_t checked_exponent(int v) {
  if (v < -127 || v > 127) throw std::overflow_error("Operator: exponent out of range");
  return std::int8_t(v);
}

void accumulate(TermMap& acc, const Monomial& m, ParamPoly c) {
  auto [it, inserted] = acc.try_emplace(m, std::move(c));
  if (!inserted) it->second += c;
}

std::vector<Operator::Term> drain_sorted(TermMap& acc) {
  std::vector<Operator::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return monomial_less(a.mono, b.mono); });
  return terms;
}

// k (k-1) ... (k-s+1); valid for negative k.
mpz_class falling_factorial(int k, int s) {
  mpz_class r = 1;
  for (int t = 0; t < s; ++t) r *= k - t;
  return r;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), unsigned(n), unsigned(k));
  return r;
}

struct Reordering {
  int s;
  mpz_class factor;
};

// Expansion of d_i^b x_i^k = sum_s binom(b,s) k^(s falling) x_i^(k-s) d_i^(b-s).
std::vector<Reordering> reorder_terms(int b, int k) {
  std::vector<Reordering> out;
  int smax = b;
  if (k >= 0) smax = std::min(b, k);
  for (int s = 0; s <= smax; ++s) out.push_back({s, binomial(b, s) * falling_factorial(k, s)});
  return out;
}

// Multiplies one term of the left factor into every term of the right one.
void multiply_term(const Operator::Term& lt, const Operator& b, const AlgebraSignature& sig, TermMap& acc) {
  const std::size_t m = sig.num_vars;
  std::vector<std::size_t> active;
  std::vector<std::vector<Reordering>> expansions;
  std::vector<std::size_t> pos;
  for (const auto& rt : b.terms()) {
    ParamPoly base = lt.coeff * rt.coeff;
    if (base.is_zero()) continue;
    Monomial mono;
    active.clear();
    expansions.clear();
    for (std::size_t i = 0; i < m; ++i) {
      mono.x[i] = checked_exponent(lt.mono.x[i] + rt.mono.x[i]);
      mono.d[i] = checked_exponent(lt.mono.d[i] + rt.mono.d[i]);
      if (lt.mono.d[i] > 0 && rt.mono.x[i] != 0) {
        active.push_back(i);
        expansions.push_back(reorder_terms(lt.mono.d[i], rt.mono.x[i]));
      }
    }
    if (active.empty()) {
      accumulate(acc, mono, std::move(base));
      continue;
    }
    // Odometer over the per-variable expansions.
    pos.assign(active.size(), 0);
    while (true) {
      Monomial out = mono;
      mpz_class factor = 1;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const auto& r = expansions[k][pos[k]];
        out.x[active[k]] = std::int8_t(out.x[active[k]] - r.s);
        out.d[active[k]] = std::int8_t(out.d[active[k]] - r.s);
        factor *= r.factor;
      }
      if (factor != 0) {
        for (std::size_t k = 0; k < active.size(); ++k) {
          if (out.x[active[k]] < 0 && !sig.is_localized(active[k])) {
            throw std::domain_error("Operator: negative power of a non-localized variable");
          }
        }
        accumulate(acc, out, base * Rational(mpq_class(factor)));
      }
      std::size_t k = 0;
      while (k < active.size() && ++pos[k] == expansions[k].size()) pos[k++] = 0;
      if (k == active.size()) break;
    }
  }
}

}  // namespace

Operator Operator::scalar(const AlgebraSignature& sig, const ParamPoly& c) {
  return monomial(sig, Monomial{}, c);
}

Operator Operator::scalar(const AlgebraSignature& sig, const Rational& c) {
  return scalar(sig, ParamPoly(c, sig.num_params));
}

Operator Operator::x(const AlgebraSignature& sig, std::size_t var, int power) {
  if (var >= sig.num_vars) throw std::out_of_range("Operator::x: variable out of range");
  Monomial m;
  m.x[var] = checked_exponent(power);
  return monomial(sig, m, ParamPoly(Rational(1), sig.num_params));
}

Operator Operator::d(const AlgebraSignature& sig, std::size_t var, int power) {
  if (var >= sig.num_vars) throw std::out_of_range("Operator::d: variable out of range");
  Monomial m;
  m.d[var] = checked_exponent(power);
  return monomial(sig, m, ParamPoly(Rational(1), sig.num_params));
}

Operator Operator::monomial(const AlgebraSignature& sig, const Monomial& m, const ParamPoly& c) {
  if (!m.valid_for(sig)) throw std::domain_error("Operator: monomial not valid for signature");
  if (c.arity() != sig.num_params) throw std::invalid_argument("Operator: coefficient arity mismatch");
  Operator op(sig);
  if (!c.is_zero()) op.terms_.push_back({m, c});
  return op;
}

Operator Operator::from_terms(const AlgebraSignature& sig, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (!t.mono.valid_for(sig)) throw std::domain_error("Operator: monomial not valid for signature");
    if (t.coeff.arity() != sig.num_params) throw std::invalid_argument("Operator: coefficient arity mismatch");
    accumulate(acc, t.mono, std::move(t.coeff));
  }
  Operator op(sig);
  op.terms_ = drain_sorted(acc);
  return op;
}

Operator Operator::from_canonical_terms(const AlgebraSignature& sig, std::vector<Term> terms) {
  Operator op(sig);
  op.terms_ = std::move(terms);
  return op;
}

int Operator::derivative_degree() const {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.derivative_degree());
  return deg;
}

ParamPoly Operator::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return monomial_less(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ParamPoly(sig_.num_params);
}

Operator Operator::substitute(std::span<const Rational> params) const {
  Operator out(sig_);
  for (const auto& t : terms_) {
    ParamPoly c(t.coeff.evaluate(params), sig_.num_params);
    if (!c.is_zero()) out.terms_.push_back({t.mono, std::move(c)});
  }
  return out;
}

void Operator::check_signature(const Operator& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("Operator: signature mismatch");
}

void Operator::merge(const Operator& o, bool subtract) {
  check_signature(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && monomial_less(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || monomial_less(b->mono, a->mono)) {
      out.push_back(subtract ? Term{b->mono, -b->coeff} : *b);
      ++b;
    } else {
      ParamPoly c = std::move(a->coeff);
      if (subtract) {
        c -= b->coeff;
      } else {
        c += b->coeff;
      }
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Operator Operator::operator-() const {
  Operator out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Operator& Operator::operator+=(const Operator& o) {
  merge(o, false);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  merge(o, true);
  return *this;
}

Operator& Operator::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= r;
  return *this;
}

Operator& Operator::operator*=(const ParamPoly& c) {
  if (c.arity() != sig_.num_params) throw std::invalid_argument("Operator: coefficient arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    ParamPoly p = t.coeff * c;
    if (!p.is_zero()) out.push_back({t.mono, std::move(p)});
  }
  terms_ = std::move(out);
  return *this;
}

Operator mul_serial(const Operator& a, const Operator& b) {
  if (!(a.signature() == b.signature())) throw std::invalid_argument("Operator: signature mismatch");
  TermMap acc;
  for (const auto& lt : a.terms()) multiply_term(lt, b, a.signature(), acc);
  return Operator::from_canonical_terms(a.signature(), drain_sorted(acc));
}

Operator mul_parallel(const Operator& a, const Operator& b) {
  if (!(a.signature() == b.signature())) throw std::invalid_argument("Operator: signature mismatch");
  const int nthreads = omp_get_max_threads();
  std::vector<TermMap> locals(std::size_t(std::max(nthreads, 1)));
  std::exception_ptr error;
  const auto& lterms = a.terms();
  const long count = long(lterms.size());
#pragma omp parallel num_threads(nthreads)
  {
    TermMap& acc = locals[std::size_t(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      try {
        multiply_term(lterms[std::size_t(i)], b, a.signature(), acc);
      } catch (...) {
#pragma omp critical(rcomm_mul_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  TermMap& total = locals[0];
  for (std::size_t t = 1; t < locals.size(); ++t) {
    for (auto& [m, c] : locals[t]) accumulate(total, m, std::move(c));
  }
  return Operator::from_canonical_terms(a.signature(), drain_sorted(total));
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.size() * b.size() >= kParallelMulThreshold && !omp_in_parallel() && omp_get_max_threads() > 1) {
    return mul_parallel(a, b);
  }
  return mul_serial(a, b);
}

Operator op_add(const Operator& a, const Operator& b) { return a + b; }
Operator op_mul(const Operator& a, const Operator& b) { return a * b; }
Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

namespace {

bool coeff_needs_parens(const ParamPoly& c) {
  return !c.is_constant() || c.constant_term().sign() < 0;
}

std::string format_coeff(const ParamPoly& c) {
  return coeff_needs_parens(c) ? "(" + c.to_string() + ")" : c.to_string();
}

void append_power(std::string& s, char symbol, std::size_t index, int power) {
  s += " * ";
  s += symbol;
  s += std::to_string(index + 1);
  if (power != 1) s += "^" + std::to_string(power);
}

struct ParsedFactors {
  ParamPoly coeff;
  Monomial mono;
};

ParsedFactors parse_term(const AlgebraSignature& sig, std::string_view term_text) {
  ParsedFactors out{ParamPoly(Rational(1), sig.num_params), Monomial{}};
  bool seen_derivative = false;
  for (auto factor : text::split_top_level(term_text, '*')) {
    factor = text::trim(factor);
    if (factor.empty()) throw std::invalid_argument("Operator::parse: empty factor");
    if (factor.front() == '(') {
      if (factor.back() != ')') throw std::invalid_argument("Operator::parse: unbalanced coefficient");
      out.coeff *= ParamPoly::parse(factor.substr(1, factor.size() - 2), sig.num_params);
    } else if (factor.front() == 'x' || factor.front() == 'd') {
      auto [index, power] = text::parse_symbol(factor, factor.front());
      if (index < 1 || std::size_t(index) > sig.num_vars) {
        throw std::invalid_argument("Operator::parse: variable index out of range in '" + std::string(factor) + "'");
      }
      if (factor.front() == 'x') {
        if (seen_derivative) throw std::invalid_argument("Operator::parse: position factor after derivative");
        out.mono.x[std::size_t(index - 1)] = checked_exponent(out.mono.x[std::size_t(index - 1)] + power);
      } else {
        if (power < 0) throw std::invalid_argument("Operator::parse: negative derivative power");
        seen_derivative = true;
        out.mono.d[std::size_t(index - 1)] = checked_exponent(out.mono.d[std::size_t(index - 1)] + power);
      }
    } else {
      out.coeff *= Rational::parse(factor);
    }
  }
  if (!out.mono.valid_for(sig)) throw std::domain_error("Operator::parse: monomial not valid for signature");
  return out;
}

}  // namespace

std::string Operator::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) s += " + ";
    s += format_coeff(terms_[k].coeff);
    const auto& m = terms_[k].mono;
    for (std::size_t i = 0; i < sig_.num_vars; ++i) {
      if (m.x[i] != 0) append_power(s, 'x', i, m.x[i]);
    }
    for (std::size_t i = 0; i < sig_.num_vars; ++i) {
      if (m.d[i] != 0) append_power(s, 'd', i, m.d[i]);
    }
  }
  return s;
}

Operator Operator::parse(const AlgebraSignature& sig, std::string_view input) {
  auto body = text::trim(input);
  if (body.empty()) throw std::invalid_argument("Operator::parse: empty input");
  std::vector<Term> terms;
  for (auto term_text : text::split_top_level(body, '+')) {
    auto parsed = parse_term(sig, text::trim(term_text));
    terms.push_back({parsed.mono, std::move(parsed.coeff)});
  }
  return from_terms(sig, std::move(terms));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool exponents_less(const Polynomial::Exponents& a, const Polynomial::Exponents& b) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  return a > b;
}

struct ExponentsHash {
  std::size_t operator()(const Polynomial::Exponents& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ std::uint8_t(v)) * 1099511628211ull;
    return std::size_t(h);
  }
};

using PolyMap = std::unordered_map<Polynomial::Exponents, ParamPoly, ExponentsHash>;

std::vector<Polynomial::Term> drain_sorted(PolyMap& acc) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) terms.push_back({e, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return exponents_less(a.exps, b.exps); });
  return terms;
}

bool exponents_valid(const AlgebraSignature& sig, const Polynomial::Exponents& e) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (i >= sig.num_vars && e[i] != 0) return false;
    if (e[i] < 0 && !sig.is_localized(i)) return false;
  }
  return true;
}

}  // namespace

Polynomial Polynomial::from_terms(const AlgebraSignature& sig, std::vector<Term> terms) {
  PolyMap acc;
  for (auto& t : terms) {
    if (!exponents_valid(sig, t.exps)) throw std::domain_error("Polynomial: exponent not valid for signature");
    if (t.coeff.arity() != sig.num_params) throw std::invalid_argument("Polynomial: coefficient arity mismatch");
    auto [it, inserted] = acc.try_emplace(t.exps, std::move(t.coeff));
    if (!inserted) it->second += t.coeff;
  }
  Polynomial p(sig);
  p.terms_ = drain_sorted(acc);
  return p;
}

Polynomial Polynomial::monomial(const AlgebraSignature& sig, const Exponents& e, const ParamPoly& c) {
  return from_terms(sig, {Term{e, c}});
}

Polynomial Polynomial::parse(const AlgebraSignature& sig, std::string_view text) {
  Operator op = Operator::parse(sig, text);
  if (op.derivative_degree() != 0) throw std::invalid_argument("Polynomial::parse: derivative in polynomial");
  std::vector<Term> terms;
  for (const auto& t : op.terms()) terms.push_back({t.mono.x, t.coeff});
  return from_terms(sig, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) s += " + ";
    s += format_coeff(terms_[k].coeff);
    for (std::size_t i = 0; i < sig_.num_vars; ++i) {
      if (terms_[k].exps[i] != 0) append_power(s, 'x', i, terms_[k].exps[i]);
    }
  }
  return s;
}

Rational Polynomial::evaluate(std::span<const Rational> point, std::span<const Rational> params) const {
  if (point.size() != sig_.num_vars) throw std::invalid_argument("Polynomial::evaluate: wrong point dimension");
  // point[i]^e, filled on demand.
  std::map<std::pair<std::size_t, int>, Rational> powers;
  auto power = [&](std::size_t i, int e) -> const Rational& {
    auto [it, fresh] = powers.try_emplace({i, e});
    if (fresh) {
      if (e < 0 && point[i].is_zero()) throw std::domain_error("Polynomial::evaluate: pole at evaluation point");
      Rational v(1);
      const Rational base = e >= 0 ? point[i] : Rational(1) / point[i];
      for (int k = 0; k < std::abs(e); ++k) v *= base;
      it->second = std::move(v);
    }
    return it->second;
  };
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coeff.is_constant() ? t.coeff.constant_term() : t.coeff.evaluate(params);
    for (std::size_t i = 0; i < sig_.num_vars; ++i) {
      if (t.exps[i] != 0) v *= power(i, t.exps[i]);
    }
    sum += v;
  }
  return sum;
}

namespace {

std::vector<Polynomial::Term> merge_terms(std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                          bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && exponents_less(x->exps, y->exps))) {
      out.push_back(std::move(*x++));
    } else if (x == a.end() || exponents_less(y->exps, x->exps)) {
      out.push_back({y->exps, subtract ? -y->coeff : y->coeff});
      ++y;
    } else {
      if (subtract) {
        x->coeff -= y->coeff;
      } else {
        x->coeff += y->coeff;
      }
      if (!x->coeff.is_zero()) out.push_back(std::move(*x));
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("Polynomial: signature mismatch");
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("Polynomial: signature mismatch");
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= r;
  return *this;
}

Polynomial& Polynomial::operator*=(const ParamPoly& c) {
  if (c.is_constant()) return *this *= c.constant_term();
  std::vector<Term> out;
  for (auto& t : terms_) {
    ParamPoly p = t.coeff * c;
    if (!p.is_zero()) out.push_back({t.exps, std::move(p)});
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial op_apply(const Operator& a, const Polynomial& f) {
  if (!(a.signature() == f.signature())) throw std::invalid_argument("op_apply: signature mismatch");
  const auto& sig = a.signature();
  PolyMap acc;
  for (const auto& ot : a.terms()) {
    for (const auto& ft : f.terms()) {
      // d^b x^e = e(e-1)...(e-b+1) x^(e-b), one variable at a time.
      // The factor stays in a machine word unless it overflows.
      long small = 1;
      bool overflow = false;
      mpz_class factor = 1;
      Polynomial::Exponents e{};
      for (std::size_t i = 0; i < sig.num_vars && small != 0; ++i) {
        int b = ot.mono.d[i];
        for (int t = 0; t < b; ++t) {
          if (overflow) {
            factor *= ft.exps[i] - t;
          } else if (__builtin_mul_overflow(small, long(ft.exps[i] - t), &small)) {
            overflow = true;
            factor = ft.exps[i] - t;
            for (int u = 0; u < t; ++u) factor *= ft.exps[i] - u;
            for (std::size_t j = 0; j < i; ++j) factor *= falling_factorial(ft.exps[j], ot.mono.d[j]);
          }
        }
        if (overflow && factor == 0) small = 0;
        e[i] = checked_exponent(ft.exps[i] - b + ot.mono.x[i]);
      }
      if (small == 0) continue;
      ParamPoly c(sig.num_params);
      if (ot.coeff.is_constant() && ft.coeff.is_constant()) {
        Rational r = ot.coeff.constant_term() * ft.coeff.constant_term();
        if (overflow) {
          r *= Rational(mpq_class(factor));
        } else if (small != 1) {
          r *= Rational(small);
        }
        c = ParamPoly(r, sig.num_params);
      } else {
        c = ot.coeff * ft.coeff;
        if (overflow) {
          c *= Rational(mpq_class(factor));
        } else if (small != 1) {
          c *= Rational(small);
        }
      }
      auto [it, inserted] = acc.try_emplace(e, std::move(c));
      if (!inserted) it->second += c;
    }
  }
  Polynomial out(sig);
  out.terms_ = drain_sorted(acc);
  return out;
}

}  // namespace rcomm

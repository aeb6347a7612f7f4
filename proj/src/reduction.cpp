#include "rcomm/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcomm {

namespace {

constexpr const char* kSuite = "reduction";

}  // namespace

ReducedContext::ReducedContext(int n) : n_(n), sig_(AlgebraSignature::localized_all(std::size_t(std::max(n, 1)), std::size_t(std::max(n, 1)))) {
  if (n < 2 || std::size_t(n) > kMaxVars || std::size_t(n) > kMaxParams) {
    throw std::invalid_argument("ReducedContext: n out of range");
  }
}

Expr ReducedContext::x(int i, int power) const {
  if (i < 1 || i > n_) throw std::out_of_range("ReducedContext::x: index out of range");
  return Expr::leaf(Operator::x(sig_, std::size_t(i - 1), power));
}

Expr ReducedContext::d(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("ReducedContext::d: index out of range");
  return Expr::leaf(Operator::d(sig_, std::size_t(i - 1)));
}

ParamPoly ReducedContext::a(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("ReducedContext::a: index out of range");
  return ParamPoly::parameter(std::size_t(i - 1), sig_.num_params);
}

Expr ReducedContext::angular(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw std::out_of_range("ReducedContext::angular: bad indices");
  Monomial p, q;
  p.x[std::size_t(i - 1)] = 1;
  p.d[std::size_t(j - 1)] = 1;
  q.x[std::size_t(j - 1)] = 1;
  q.d[std::size_t(i - 1)] = 1;
  const ParamPoly one(Rational(1), sig_.num_params);
  return Expr::leaf(Operator::monomial(sig_, p, one) - Operator::monomial(sig_, q, one));
}

namespace {

Operator reduced_Jp(const ReducedContext& ctx, int i) {
  const auto& sig = ctx.signature();
  Monomial m;
  m.x[std::size_t(i - 1)] = 2;
  return Operator::monomial(sig, m, ParamPoly(Rational(1, 2), sig.num_params));
}

Operator reduced_Jm(const ReducedContext& ctx, int i) {
  const auto& sig = ctx.signature();
  Monomial dd, inv;
  dd.d[std::size_t(i - 1)] = 2;
  inv.x[std::size_t(i - 1)] = -2;
  return Operator::monomial(sig, dd, ParamPoly(Rational(1, 2), sig.num_params)) +
         Operator::monomial(sig, inv, ctx.a(i) * Rational(1, 2));
}

Operator reduced_J0(const ReducedContext& ctx, int i) {
  const auto& sig = ctx.signature();
  Monomial xd;
  xd.x[std::size_t(i - 1)] = 1;
  xd.d[std::size_t(i - 1)] = 1;
  return Operator::monomial(sig, xd, ParamPoly(Rational(1, 2), sig.num_params)) +
         Operator::scalar(sig, Rational(1, 4));
}

}  // namespace

ReducedSU11Triple make_reduced_J(const ReducedContext& ctx, int i) {
  if (i < 1 || i > ctx.n()) throw std::out_of_range("make_reduced_J: index out of range");
  return {Expr::leaf(reduced_Jp(ctx, i)), Expr::leaf(reduced_Jm(ctx, i)), Expr::leaf(reduced_J0(ctx, i))};
}

ReducedSU11Triple make_reduced_JA(const ReducedContext& ctx, const std::vector<int>& factors) {
  if (factors.empty()) throw std::invalid_argument("make_reduced_JA: empty factor set");
  const auto& sig = ctx.signature();
  Operator jp(sig), jm(sig), j0(sig);
  std::vector<int> seen;
  for (int i : factors) {
    if (i < 1 || i > ctx.n()) throw std::out_of_range("make_reduced_JA: index out of range");
    if (std::find(seen.begin(), seen.end(), i) != seen.end()) throw std::invalid_argument("make_reduced_JA: repeated index");
    seen.push_back(i);
    jp += reduced_Jp(ctx, i);
    jm += reduced_Jm(ctx, i);
    j0 += reduced_J0(ctx, i);
  }
  return {Expr::leaf(std::move(jp)), Expr::leaf(std::move(jm)), Expr::leaf(std::move(j0))};
}

Expr reduced_casimir_single_expr(const ReducedContext& ctx, int i) { return casimir_expr(make_reduced_J(ctx, i)); }

Expr reduced_casimir_pair_expr(const ReducedContext& ctx, int i, int j) {
  if (i >= j) throw std::invalid_argument("reduced_casimir_pair: require i < j");
  return casimir_expr(make_reduced_JA(ctx, {i, j}));
}

Expr reduced_casimir_total_expr(const ReducedContext& ctx) {
  std::vector<int> all;
  for (int i = 1; i <= ctx.n(); ++i) all.push_back(i);
  return casimir_expr(make_reduced_JA(ctx, all));
}

Operator reduced_casimir_single(const ReducedContext& ctx, int i) { return reduced_casimir_single_expr(ctx, i).value(); }

Operator reduced_casimir_pair(const ReducedContext& ctx, int i, int j) {
  return reduced_casimir_pair_expr(ctx, i, j).value();
}

Expr reduced_casimir_single_closed_form(const ReducedContext& ctx, int i) {
  const std::size_t arity = ctx.signature().num_params;
  ParamPoly value = (ctx.a(i) + ParamPoly(Rational(3, 4), arity)) * Rational(-1, 4);
  return Expr::scalar(ctx.signature(), value);
}

Expr reduced_casimir_pair_closed_form(const ReducedContext& ctx, int i, int j) {
  const std::size_t arity = ctx.signature().num_params;
  Expr jij = ctx.angular(i, j);
  Expr inner = jij * jij + ctx.a(i) * (ctx.x(j, 2) * ctx.x(i, -2)) + ctx.a(j) * (ctx.x(i, 2) * ctx.x(j, -2)) +
               Expr::scalar(ctx.signature(), ctx.a(i) + ctx.a(j) + ParamPoly(Rational(1), arity));
  return Rational(-1, 4) * inner;
}

Expr total_casimir_closed_form(const ReducedContext& ctx) {
  const int n = ctx.n();
  const auto& sig = ctx.signature();
  Expr angular_sum = Expr::scalar(sig, Rational(0));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Expr jij = ctx.angular(i, j);
      angular_sum = angular_sum + jij * jij;
    }
  }
  Expr radius = Expr::scalar(sig, Rational(0));
  Expr potential = Expr::scalar(sig, Rational(0));
  for (int i = 1; i <= n; ++i) {
    radius = radius + ctx.x(i, 2);
    potential = potential + ctx.a(i) * ctx.x(i, -2);
  }
  return Rational(-1, 4) * angular_sum - Rational(1, 4) * (radius * potential) +
         Expr::scalar(sig, Rational(n * (n - 4), 16));
}

bool total_casimir_identity(const ReducedContext& ctx) {
  return holds({kSuite, "total-casimir", {ctx.n()}, reduced_casimir_total_expr(ctx), total_casimir_closed_form(ctx)});
}

Expr make_Q_expr(const ReducedContext& ctx, int i, int j) {
  if (i >= j) throw std::invalid_argument("make_Q: require i < j");
  Expr jij = ctx.angular(i, j);
  return jij * jij + ctx.a(i) * (ctx.x(j, 2) * ctx.x(i, -2)) + ctx.a(j) * (ctx.x(i, 2) * ctx.x(j, -2));
}

Operator make_Q(const ReducedContext& ctx, int i, int j) { return make_Q_expr(ctx, i, j).value(); }

ReducedRacahBasis::ReducedRacahBasis(const ReducedContext& ctx) : ctx_(ctx) {
  const int n = ctx_.n();
  for (int i = 1; i <= n; ++i) C1_.push_back(reduced_casimir_single_expr(ctx_, i));
  Expr zero = Expr::scalar(ctx_.signature(), Rational(0));
  C2_.assign(std::size_t(n), std::vector<Expr>(std::size_t(n), zero));
  P_ = C2_;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Expr c = reduced_casimir_pair_expr(ctx_, i, j);
      Expr p = c - C1_[std::size_t(i - 1)] - C1_[std::size_t(j - 1)];
      C2_[std::size_t(i - 1)][std::size_t(j - 1)] = C2_[std::size_t(j - 1)][std::size_t(i - 1)] = c;
      P_[std::size_t(i - 1)][std::size_t(j - 1)] = P_[std::size_t(j - 1)][std::size_t(i - 1)] = p;
    }
  }
  F_.assign(std::size_t(n * n * n), zero);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        auto idx = std::size_t((i - 1) * n * n + (j - 1) * n + (k - 1));
        if (i < k) {
          F_[idx] = Rational(1, 2) * commutator(P(i, j), P(j, k));
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k < i; ++k) {
        if (j == i || j == k) continue;
        F_[std::size_t((i - 1) * n * n + (j - 1) * n + (k - 1))] = -F_[std::size_t((k - 1) * n * n + (j - 1) * n + (i - 1))];
      }
    }
  }
}

const Expr& ReducedRacahBasis::C1(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("ReducedRacahBasis: index out of range");
  return C1_[std::size_t(i - 1)];
}

const Expr& ReducedRacahBasis::C2(int i, int j) const {
  if (i < 1 || j < 1 || i > n() || j > n() || i == j) throw std::out_of_range("ReducedRacahBasis: bad indices");
  return C2_[std::size_t(i - 1)][std::size_t(j - 1)];
}

const Expr& ReducedRacahBasis::P(int i, int j) const {
  if (i < 1 || j < 1 || i > n() || j > n() || i == j) throw std::out_of_range("ReducedRacahBasis: bad indices");
  return P_[std::size_t(i - 1)][std::size_t(j - 1)];
}

const Expr& ReducedRacahBasis::F(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > n() || j > n() || k > n() || i == j || j == k || i == k) {
    throw std::out_of_range("ReducedRacahBasis: bad indices");
  }
  return F_[std::size_t((i - 1) * n() * n() + (j - 1) * n() + (k - 1))];
}

std::vector<Identity> reduction_identities(const ReducedContext& ctx) {
  const int n = ctx.n();
  const auto& sig = ctx.signature();
  const std::size_t arity = sig.num_params;
  Expr zero = Expr::scalar(sig, Rational(0));
  std::vector<Identity> ids;
  for (int i = 1; i <= n; ++i) {
    auto rel = su11_identities(make_reduced_J(ctx, i), kSuite, "reduced-J:", {i});
    ids.insert(ids.end(), rel.begin(), rel.end());
  }
  for (int i = 1; i <= n; ++i) {
    ids.push_back({kSuite, "C-single", {i}, reduced_casimir_single_expr(ctx, i),
                   reduced_casimir_single_closed_form(ctx, i)});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ids.push_back({kSuite, "C-pair", {i, j}, reduced_casimir_pair_expr(ctx, i, j),
                     reduced_casimir_pair_closed_form(ctx, i, j)});
    }
  }
  Expr total = reduced_casimir_total_expr(ctx);
  ids.push_back({kSuite, "total-casimir", {n}, total, total_casimir_closed_form(ctx)});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Expr shift = Expr::scalar(sig, ctx.a(i) + ctx.a(j) + ParamPoly(Rational(1), arity));
      ids.push_back({kSuite, "Q-affine", {i, j}, make_Q_expr(ctx, i, j),
                     Rational(-4) * reduced_casimir_pair_expr(ctx, i, j) - shift});
    }
  }
  if (n >= 3) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        ids.push_back({kSuite, "C-pair-symmetry", {i, j}, commutator(reduced_casimir_pair_expr(ctx, i, j), total), zero});
        ids.push_back({kSuite, "Q-symmetry", {i, j}, commutator(make_Q_expr(ctx, i, j), total), zero});
      }
    }
  }
  return ids;
}

namespace {

std::vector<std::vector<int>> distinct_tuples(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (int(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

std::vector<Identity> reduced_racah_identities(const ReducedRacahBasis& b, std::vector<std::string>* skipped) {
  const int n = b.n();
  if (n < 3) throw std::invalid_argument("reduced_racah_identities: requires n >= 3");
  std::vector<Identity> ids;
  for (const auto& t : distinct_tuples(n, 3)) {
    int i = t[0], j = t[1], k = t[2];
    ids.push_back({kSuite, "7a", t, commutator(b.P(i, j), b.P(j, k)), Rational(2) * b.F(i, j, k)});
  }
  for (const auto& t : distinct_tuples(n, 3)) {
    int i = t[0], j = t[1], k = t[2];
    Expr rhs = b.P(i, k) * b.P(j, k) - b.P(j, k) * b.P(i, j) + Rational(2) * (b.P(i, k) * b.C1(j)) -
               Rational(2) * (b.P(i, j) * b.C1(k));
    ids.push_back({kSuite, "7b", t, commutator(b.P(j, k), b.F(i, j, k)), rhs});
  }
  if (n >= 4) {
    for (const auto& t : distinct_tuples(n, 4)) {
      int i = t[0], j = t[1], k = t[2], l = t[3];
      ids.push_back({kSuite, "7c", t, commutator(b.P(k, l), b.F(i, j, k)),
                     b.P(i, k) * b.P(j, l) - b.P(i, l) * b.P(j, k)});
    }
    for (const auto& t : distinct_tuples(n, 4)) {
      int i = t[0], j = t[1], k = t[2], l = t[3];
      Expr rhs = b.F(j, k, l) * b.P(i, j) - b.F(i, k, l) * (b.P(j, k) + Rational(2) * b.C1(j)) -
                 b.F(i, j, k) * b.P(j, l);
      ids.push_back({kSuite, "7d", t, commutator(b.F(i, j, k), b.F(j, k, l)), rhs});
    }
  } else if (skipped) {
    skipped->push_back("7c");
    skipped->push_back("7d");
  }
  if (n >= 5) {
    for (const auto& t : distinct_tuples(n, 5)) {
      int i = t[0], j = t[1], k = t[2], l = t[3], m = t[4];
      ids.push_back({kSuite, "7e", t, commutator(b.F(i, j, k), b.F(k, l, m)),
                     b.F(i, l, m) * b.P(j, k) - b.P(i, k) * b.F(j, l, m)});
    }
  } else if (skipped) {
    skipped->push_back("7e");
  }
  return ids;
}

RelationReport verify_reduced_racah(const ReducedContext& ctx, Schedule schedule, int jobs) {
  ReducedRacahBasis basis(ctx);
  std::vector<std::string> skipped;
  RelationReport report = verify_identities(reduced_racah_identities(basis, &skipped), schedule, jobs);
  for (const auto& rel : skipped) {
    report.add_skipped(kSuite, rel, "no admissible tuple of distinct indices at n=" + std::to_string(ctx.n()));
  }
  return report;
}

}  // namespace rcomm

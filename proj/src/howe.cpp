#include "rcomm/howe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rcomm/racah.hpp"

namespace rcomm {

namespace {

constexpr const char* kSuite = "howe";

}  // namespace

PairUnion::PairUnion(const SO2nContext& ctx, std::vector<int> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("PairUnion: at least one pair required");
  std::set<int> seen;
  for (int i : pairs_) {
    if (i < 1 || i > ctx.n()) throw std::invalid_argument("PairUnion: factor index out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("PairUnion: repeated factor index");
  }
}

std::vector<int> PairUnion::variables() const {
  std::vector<int> vars;
  for (int i : pairs_) {
    vars.push_back(2 * i - 1);
    vars.push_back(2 * i);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

SU11Triple make_JA(const SO2nContext& ctx, const PairUnion& a) {
  const auto& sig = ctx.signature();
  const ParamPoly half(Rational(1, 2), 0);
  Operator jp(sig), jm(sig), j0 = Operator::scalar(sig, Rational(a.cardinality(), 4));
  for (int mu : a.variables()) {
    const auto v = std::size_t(mu - 1);
    Monomial xx, dd, xd;
    xx.x[v] = 2;
    dd.d[v] = 2;
    xd.x[v] = 1;
    xd.d[v] = 1;
    jp += Operator::monomial(sig, xx, half);
    jm += Operator::monomial(sig, dd, half);
    j0 += Operator::monomial(sig, xd, half);
  }
  return {Expr::leaf(std::move(jp)), Expr::leaf(std::move(jm)), Expr::leaf(std::move(j0))};
}

Expr casimir_CA_expr(const SO2nContext& ctx, const PairUnion& a) { return casimir_expr(make_JA(ctx, a)); }

Operator casimir_CA(const SO2nContext& ctx, const PairUnion& a) { return casimir_CA_expr(ctx, a).value(); }

Expr casimir_CA_closed_form(const SO2nContext& ctx, const PairUnion& a) {
  const int card = a.cardinality();
  Expr sum = Expr::scalar(ctx.signature(), Rational(card * (card - 4), 16));
  auto vars = a.variables();
  for (std::size_t p = 0; p < vars.size(); ++p) {
    for (std::size_t q = p + 1; q < vars.size(); ++q) {
      Expr l = ctx.L(vars[p], vars[q]);
      sum = sum - Rational(1, 4) * (l * l);
    }
  }
  return sum;
}

std::vector<PairUnion> all_pair_unions(const SO2nContext& ctx) {
  std::vector<std::vector<int>> subsets;
  const int n = ctx.n();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<PairUnion> out;
  for (auto& s : subsets) out.emplace_back(ctx, std::move(s));
  return out;
}

Identity decomposition_identity(const SO2nContext& ctx, const PairUnion& a) {
  if (a.pair_count() < 2) throw std::invalid_argument("decomposition_identity: requires at least two pairs");
  const auto& p = a.pairs();
  Expr rhs = Expr::scalar(ctx.signature(), Rational(0));
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      rhs = rhs + casimir_CA_expr(ctx, PairUnion(ctx, {std::min(p[s], p[t]), std::max(p[s], p[t])}));
    }
  }
  const Rational weight(a.cardinality() - 4, 2);
  for (int i : p) rhs = rhs - weight * casimir_CA_expr(ctx, PairUnion(ctx, {i}));
  return {kSuite, "decomposition", p, casimir_CA_expr(ctx, a), rhs};
}

bool verify_decomposition(const SO2nContext& ctx, const PairUnion& a) {
  return holds(decomposition_identity(ctx, a));
}

std::vector<Identity> correspondence_identities(const SO2nContext& ctx) {
  std::vector<Identity> ids;
  const auto& sig = ctx.signature();
  for (int i = 1; i <= ctx.n(); ++i) {
    Expr g = G_expr(ctx, i);
    ids.push_back({kSuite, "correspondence-G", {i}, casimir_CA_expr(ctx, PairUnion(ctx, {i})),
                   Rational(-1, 4) * (g + Expr::scalar(sig, Rational(1)))});
  }
  for (int i = 1; i <= ctx.n(); ++i) {
    for (int j = i + 1; j <= ctx.n(); ++j) {
      Expr k = K_expr(ctx, i, j);
      ids.push_back({kSuite, "correspondence-K", {i, j}, casimir_CA_expr(ctx, PairUnion(ctx, {i, j})),
                     Rational(-1, 4) * k});
    }
  }
  return ids;
}

RelationReport verify_commutant_correspondence(const SO2nContext& ctx, Schedule schedule, int jobs) {
  return verify_identities(correspondence_identities(ctx), schedule, jobs);
}

std::vector<Identity> howe_identities(const SO2nContext& ctx) {
  std::vector<Identity> ids;
  auto unions = all_pair_unions(ctx);
  std::vector<int> everything;
  for (int i = 1; i <= ctx.n(); ++i) everything.push_back(i);
  Expr total = casimir_CA_expr(ctx, PairUnion(ctx, everything));
  Expr zero = Expr::scalar(ctx.signature(), Rational(0));

  for (const auto& a : unions) {
    auto rel = su11_identities(make_JA(ctx, a), kSuite, "JA:", a.pairs());
    ids.insert(ids.end(), rel.begin(), rel.end());
  }
  for (const auto& a : unions) {
    ids.push_back({kSuite, "closed-form", a.pairs(), casimir_CA_expr(ctx, a), casimir_CA_closed_form(ctx, a)});
  }
  for (const auto& a : unions) {
    if (a.pair_count() >= 2) ids.push_back(decomposition_identity(ctx, a));
  }
  auto corr = correspondence_identities(ctx);
  ids.insert(ids.end(), corr.begin(), corr.end());
  for (const auto& a : unions) {
    ids.push_back({kSuite, "commutes-with-total", a.pairs(), commutator(casimir_CA_expr(ctx, a), total), zero});
  }
  for (const auto& a : unions) {
    if (a.pair_count() < 2) continue;
    std::vector<int> reversed(a.pairs().rbegin(), a.pairs().rend());
    ids.push_back({kSuite, "order-independent", a.pairs(), casimir_CA_expr(ctx, a),
                   casimir_CA_expr(ctx, PairUnion(ctx, reversed))});
  }
  return ids;
}

}  // namespace rcomm

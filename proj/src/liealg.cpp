#include "rcomm/liealg.hpp"

#include <stdexcept>
#include <string>

namespace rcomm {

namespace {

constexpr const char* kSuiteO2n = "o2n";
constexpr const char* kSuiteSu11 = "su11";

// Index of (mu, nu), mu < nu, in the row-major upper triangle of a dim x dim array.
std::size_t pair_index(int dim, int mu, int nu) {
  return std::size_t((mu - 1) * dim - (mu - 1) * mu / 2 + (nu - mu - 1));
}

int kronecker(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

SO2nContext::SO2nContext(int n) : n_(n), sig_(std::size_t(2 * std::max(n, 1))) {
  if (n < 3 || std::size_t(2 * n) > kMaxVars) {
    throw std::invalid_argument("SO2nContext: n must satisfy 3 <= n <= " + std::to_string(kMaxVars / 2));
  }
  for (int mu = 1; mu <= dim(); ++mu) {
    for (int nu = mu + 1; nu <= dim(); ++nu) {
      Expr l = Expr::leaf(make_L(*this, mu, nu));
      generators_.push_back(l);
      negated_.push_back(Expr::leaf(-make_L(*this, mu, nu)));
    }
  }
}

Expr SO2nContext::L(int mu, int nu) const {
  if (mu == nu || mu < 1 || nu < 1 || mu > dim() || nu > dim()) {
    throw std::out_of_range("SO2nContext::L: invalid index pair");
  }
  if (mu < nu) return generators_[pair_index(dim(), mu, nu)];
  return negated_[pair_index(dim(), nu, mu)];
}

Expr SO2nContext::xi(int mu) const {
  if (mu < 1 || mu > dim()) throw std::out_of_range("SO2nContext::xi: index out of range");
  return Expr::leaf(Operator::x(sig_, std::size_t(mu - 1)));
}

Expr SO2nContext::d(int mu) const {
  if (mu < 1 || mu > dim()) throw std::out_of_range("SO2nContext::d: index out of range");
  return Expr::leaf(Operator::d(sig_, std::size_t(mu - 1)));
}

Operator make_L(const SO2nContext& ctx, int mu, int nu) {
  if (mu == nu) throw std::invalid_argument("make_L: indices must differ");
  if (mu < 1 || nu > ctx.dim() || mu > nu) throw std::out_of_range("make_L: require 1 <= mu < nu <= 2n");
  const auto& sig = ctx.signature();
  Monomial a, b;
  a.x[std::size_t(mu - 1)] = 1;
  a.d[std::size_t(nu - 1)] = 1;
  b.x[std::size_t(nu - 1)] = 1;
  b.d[std::size_t(mu - 1)] = 1;
  return Operator::monomial(sig, a, ParamPoly(Rational(1), 0)) - Operator::monomial(sig, b, ParamPoly(Rational(1), 0));
}

SU11Triple make_metaplectic(const SO2nContext& ctx, int mu) {
  if (mu < 1 || mu > ctx.dim()) throw std::out_of_range("make_metaplectic: index out of range");
  const auto& sig = ctx.signature();
  const auto v = std::size_t(mu - 1);
  Monomial xx, dd, xd;
  xx.x[v] = 2;
  dd.d[v] = 2;
  xd.x[v] = 1;
  xd.d[v] = 1;
  const ParamPoly half(Rational(1, 2), 0);
  Operator j0 = Operator::monomial(sig, xd, half) + Operator::scalar(sig, Rational(1, 4));
  return {Expr::leaf(Operator::monomial(sig, xx, half)), Expr::leaf(Operator::monomial(sig, dd, half)),
          Expr::leaf(std::move(j0))};
}

Expr casimir_expr(const SU11Triple& t) { return t.J0 * t.J0 - t.Jp * t.Jm - t.J0; }

Operator casimir_of(const SU11Triple& t) { return casimir_expr(t).value(); }

std::vector<Identity> su11_identities(const SU11Triple& t, const std::string& suite, const std::string& prefix,
                                      const std::vector<int>& tuple) {
  const auto& sig = t.J0.signature();
  Expr zero = Expr::scalar(sig, Rational(0));
  Expr c = casimir_expr(t);
  return {
      {suite, prefix + "[J0,J+]=J+", tuple, commutator(t.J0, t.Jp), t.Jp},
      {suite, prefix + "[J0,J-]=-J-", tuple, commutator(t.J0, t.Jm), -t.Jm},
      {suite, prefix + "[J+,J-]=-2J0", tuple, commutator(t.Jp, t.Jm), Rational(-2) * t.J0},
      {suite, prefix + "[C,J0]=0", tuple, commutator(c, t.J0), zero},
      {suite, prefix + "[C,J+]=0", tuple, commutator(c, t.Jp), zero},
      {suite, prefix + "[C,J-]=0", tuple, commutator(c, t.Jm), zero},
  };
}

std::vector<Identity> o2n_identities(const SO2nContext& ctx) {
  std::vector<std::pair<int, int>> gens;
  for (int mu = 1; mu <= ctx.dim(); ++mu) {
    for (int nu = mu + 1; nu <= ctx.dim(); ++nu) gens.emplace_back(mu, nu);
  }
  Expr zero = Expr::scalar(ctx.signature(), Rational(0));
  std::vector<Identity> ids;
  for (std::size_t p = 0; p < gens.size(); ++p) {
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      auto [mu, nu] = gens[p];
      auto [rho, sigma] = gens[q];
      // delta_{nu rho} L_{mu sigma} - delta_{nu sigma} L_{mu rho}
      //   - delta_{mu rho} L_{nu sigma} + delta_{mu sigma} L_{nu rho}
      Expr rhs = zero;
      auto add = [&](int sign, int delta, int a, int b) {
        if (delta == 0 || a == b) return;
        rhs = rhs + Rational(sign) * ctx.L(a, b);
      };
      add(+1, kronecker(nu, rho), mu, sigma);
      add(-1, kronecker(nu, sigma), mu, rho);
      add(-1, kronecker(mu, rho), nu, sigma);
      add(+1, kronecker(mu, sigma), nu, rho);
      ids.push_back({kSuiteO2n, "o2n", {mu, nu, rho, sigma}, commutator(ctx.L(mu, nu), ctx.L(rho, sigma)), rhs});
    }
  }
  return ids;
}

RelationReport check_o2n_relations(const SO2nContext& ctx, Schedule schedule, int jobs) {
  return verify_identities(o2n_identities(ctx), schedule, jobs);
}

Expr quadratic_casimir_expr(const SO2nContext& ctx, int bound) {
  if (bound == 0) bound = ctx.dim();
  if (bound < 2 || bound > ctx.dim()) throw std::out_of_range("quadratic_casimir: bound out of range");
  Expr sum = Expr::scalar(ctx.signature(), Rational(0));
  for (int mu = 1; mu <= bound; ++mu) {
    for (int nu = mu + 1; nu <= bound; ++nu) sum = sum + ctx.L(mu, nu) * ctx.L(mu, nu);
  }
  return sum;
}

Operator quadratic_casimir(const SO2nContext& ctx, int bound) { return quadratic_casimir_expr(ctx, bound).value(); }

std::vector<Identity> casimir_centrality_identities(const SO2nContext& ctx, int bound) {
  const int effective = bound == 0 ? ctx.dim() : bound;
  Expr c = quadratic_casimir_expr(ctx, effective);
  Expr zero = Expr::scalar(ctx.signature(), Rational(0));
  const std::string relation = effective == ctx.dim() ? "casimir-central" : "casimir-central-bound" + std::to_string(effective);
  std::vector<Identity> ids;
  for (int mu = 1; mu <= ctx.dim(); ++mu) {
    for (int nu = mu + 1; nu <= ctx.dim(); ++nu) {
      ids.push_back({kSuiteO2n, relation, {mu, nu}, commutator(c, ctx.L(mu, nu)), zero});
    }
  }
  return ids;
}

std::vector<Identity> metaplectic_identities(const SO2nContext& ctx) {
  std::vector<Identity> ids;
  std::vector<SU11Triple> copies;
  for (int mu = 1; mu <= ctx.dim(); ++mu) copies.push_back(make_metaplectic(ctx, mu));
  for (int mu = 1; mu <= ctx.dim(); ++mu) {
    const auto& t = copies[std::size_t(mu - 1)];
    auto rel = su11_identities(t, kSuiteSu11, "metaplectic:", {mu});
    ids.insert(ids.end(), rel.begin(), rel.end());
    ids.push_back({kSuiteSu11, "metaplectic:C=-3/16", {mu}, casimir_expr(t), Expr::scalar(ctx.signature(), Rational(-3, 16))});
  }
  Expr zero = Expr::scalar(ctx.signature(), Rational(0));
  for (int mu = 1; mu <= ctx.dim(); ++mu) {
    for (int nu = mu + 1; nu <= ctx.dim(); ++nu) {
      const auto& a = copies[std::size_t(mu - 1)];
      const auto& b = copies[std::size_t(nu - 1)];
      const Expr left[] = {a.Jp, a.Jm, a.J0};
      const Expr right[] = {b.Jp, b.Jm, b.J0};
      for (const auto& l : left) {
        for (const auto& r : right) {
          ids.push_back({kSuiteSu11, "metaplectic:disjoint-commute", {mu, nu}, commutator(l, r), zero});
        }
      }
    }
  }
  return ids;
}

}  // namespace rcomm

#ifndef RCOMM_LIEALG_HPP
#define RCOMM_LIEALG_HPP

#include <vector>

#include "rcomm/expr.hpp"
#include "rcomm/report.hpp"

namespace rcomm {

/// Oscillator realization of o(2n) on 2n variables xi_1..xi_2n.
///
/// Generators L_{mu nu} = xi_mu d_nu - xi_nu d_mu are built once for mu < nu
/// and shared as Expr leaves, so every identity that mentions one reuses the
/// same node. Indices are one-based throughout this layer.
class SO2nContext {
 public:
  /// Requires 3 <= n <= kMaxVars / 2.
  explicit SO2nContext(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const AlgebraSignature& signature() const { return sig_; }

  /// L_{mu nu} for any mu != nu; mu > nu is resolved as -L_{nu mu}.
  Expr L(int mu, int nu) const;
  /// xi_mu and d_mu as leaves.
  Expr xi(int mu) const;
  Expr d(int mu) const;

 private:
  int n_;
  AlgebraSignature sig_;
  std::vector<Expr> generators_;  // row-major over mu < nu
  std::vector<Expr> negated_;
};

/// xi_mu d_nu - xi_nu d_mu, built directly from monomials. Requires mu < nu.
Operator make_L(const SO2nContext& ctx, int mu, int nu);

/// J_+, J_-, J_0 of one su(1,1) realization.
struct SU11Triple {
  Expr Jp;
  Expr Jm;
  Expr J0;
};

/// J_+ = xi_mu^2/2, J_- = d_mu^2/2, J_0 = (1/2 + xi_mu d_mu)/2.
SU11Triple make_metaplectic(const SO2nContext& ctx, int mu);

/// J_0^2 - J_+ J_- - J_0 as an expression.
Expr casimir_expr(const SU11Triple& t);
Operator casimir_of(const SU11Triple& t);

/// [J_0, J_+] = J_+, [J_0, J_-] = -J_-, [J_+, J_-] = -2 J_0, plus centrality
/// of the Casimir with respect to all three.
std::vector<Identity> su11_identities(const SU11Triple& t, const std::string& suite, const std::string& prefix,
                                      const std::vector<int>& tuple);

/// [L_{mu nu}, L_{rho sigma}] against its structure-constant expansion, one
/// identity per unordered pair of distinct generators.
std::vector<Identity> o2n_identities(const SO2nContext& ctx);
RelationReport check_o2n_relations(const SO2nContext& ctx, Schedule schedule = Schedule::parallel, int jobs = 0);

/// Sum of L_{mu nu}^2 over 1 <= mu < nu <= bound. bound = 2n is the o(2n)
/// Casimir; the default.
Expr quadratic_casimir_expr(const SO2nContext& ctx, int bound = 0);
Operator quadratic_casimir(const SO2nContext& ctx, int bound = 0);

/// [C, L_{mu nu}] = 0 for every generator, with C summed up to `bound`.
std::vector<Identity> casimir_centrality_identities(const SO2nContext& ctx, int bound = 0);

/// The metaplectic triples for mu = 1..2n, their su(1,1) relations and
/// Casimir values (-3/16), and commutation of distinct copies.
std::vector<Identity> metaplectic_identities(const SO2nContext& ctx);

}  // namespace rcomm

#endif  // RCOMM_LIEALG_HPP

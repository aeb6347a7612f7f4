#ifndef RCOMM_REDUCTION_HPP
#define RCOMM_REDUCTION_HPP

#include <vector>

#include "rcomm/liealg.hpp"

namespace rcomm {

/// The reduced realization on n radial variables x_1..x_n, all localized,
/// with free parameters a_1..a_n (a_i stands for k_i^2 + 1/4).
class ReducedContext {
 public:
  /// Requires 2 <= n <= kMaxVars.
  explicit ReducedContext(int n);

  int n() const { return n_; }
  const AlgebraSignature& signature() const { return sig_; }

  Expr x(int i, int power = 1) const;
  Expr d(int i) const;
  /// The parameter a_i as a polynomial coefficient.
  ParamPoly a(int i) const;
  /// J_{ij} = x_i d_j - x_j d_i.
  Expr angular(int i, int j) const;

 private:
  int n_;
  AlgebraSignature sig_;
};

using ReducedSU11Triple = SU11Triple;

/// J_+ = x_i^2/2, J_- = (d_i^2 + a_i x_i^-2)/2, J_0 = (x_i d_i + 1/2)/2.
ReducedSU11Triple make_reduced_J(const ReducedContext& ctx, int i);
/// Coproduct sum of the triples for the listed factors.
ReducedSU11Triple make_reduced_JA(const ReducedContext& ctx, const std::vector<int>& factors);

Expr reduced_casimir_single_expr(const ReducedContext& ctx, int i);
Expr reduced_casimir_pair_expr(const ReducedContext& ctx, int i, int j);
Expr reduced_casimir_total_expr(const ReducedContext& ctx);

Operator reduced_casimir_single(const ReducedContext& ctx, int i);
Operator reduced_casimir_pair(const ReducedContext& ctx, int i, int j);

/// -(a_i + 3/4)/4.
Expr reduced_casimir_single_closed_form(const ReducedContext& ctx, int i);
/// -(J_{ij}^2 + a_i x_j^2/x_i^2 + a_j x_i^2/x_j^2 + a_i + a_j + 1)/4.
Expr reduced_casimir_pair_closed_form(const ReducedContext& ctx, int i, int j);
/// -(1/4) sum J_{ij}^2 - (1/4)(sum x_i^2)(sum a_j/x_j^2) + n(n-4)/16.
Expr total_casimir_closed_form(const ReducedContext& ctx);

bool total_casimir_identity(const ReducedContext& ctx);

/// Q_{ij} = J_{ij}^2 + a_i x_j^2/x_i^2 + a_j x_i^2/x_j^2.
Expr make_Q_expr(const ReducedContext& ctx, int i, int j);
Operator make_Q(const ReducedContext& ctx, int i, int j);

/// The reduced single and pair Casimirs, the Racah generators
/// P^{ij} = C^{ij} - C^i - C^j and F^{ijk} = [P^{ij}, P^{jk}]/2, with
/// shared nodes across relation instances.
class ReducedRacahBasis {
 public:
  explicit ReducedRacahBasis(const ReducedContext& ctx);

  const ReducedContext& context() const { return ctx_; }
  int n() const { return ctx_.n(); }
  const Expr& C1(int i) const;
  const Expr& C2(int i, int j) const;
  const Expr& P(int i, int j) const;
  const Expr& F(int i, int j, int k) const;

 private:
  ReducedContext ctx_;
  std::vector<Expr> C1_;
  std::vector<std::vector<Expr>> C2_, P_;
  std::vector<Expr> F_;  // indexed (i-1)*n*n + (j-1)*n + (k-1)
};

/// Triples, closed forms, total Casimir, Q links and the symmetry
/// statements [C^{ij}, C^{[n]}] = 0 and [Q_{ij}, C^{[n]}] = 0.
std::vector<Identity> reduction_identities(const ReducedContext& ctx);

/// Relations 7a-7e in the reduced realization (relation ids "7a".."7e",
/// suite "reduction").
std::vector<Identity> reduced_racah_identities(const ReducedRacahBasis& basis,
                                               std::vector<std::string>* skipped = nullptr);
RelationReport verify_reduced_racah(const ReducedContext& ctx, Schedule schedule = Schedule::parallel, int jobs = 0);

}  // namespace rcomm

#endif  // RCOMM_REDUCTION_HPP

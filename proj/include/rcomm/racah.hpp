#ifndef RCOMM_RACAH_HPP
#define RCOMM_RACAH_HPP

#include <map>
#include <tuple>
#include <vector>

#include "rcomm/liealg.hpp"

namespace rcomm {

/// Constant in the affine map from G^i to the one-index Casimir C^i.
enum class CasimirShift {
  /// C^i = -G^i/4 - 1/4. Agrees with P^{ij} = C^{ij} - C^i - C^j for the
  /// stated P^{ij} and with the single-pair Howe Casimir -(L^2 + 1)/4.
  consistent,
  /// C^i = -G^i/4 + 1/4, as printed alongside the other redefinitions.
  printed,
};

/// Generators of the commutant of o(2)^n = span{L_{12}, L_{34}, ...} in the
/// oscillator realization of U(o(2n)), and the affine redefinitions that
/// carry them to the Racah generators C^i, C^{ij}, P^{ij}, F^{ijk}.
///
/// All members are Expr nodes built once at construction; their expanded
/// values are computed on first use and memoized, so relation instances
/// running concurrently share them without further synchronization.
class CommutantBasis {
 public:
  explicit CommutantBasis(const SO2nContext& ctx, CasimirShift shift = CasimirShift::consistent);

  const SO2nContext& context() const { return ctx_; }
  int n() const { return ctx_.n(); }

  /// One-based factor indices; two-index members are symmetric.
  const Expr& G(int i) const;
  const Expr& K(int i, int j) const;
  const Expr& C1(int i) const;
  const Expr& C2(int i, int j) const;
  const Expr& P(int i, int j) const;
  /// [K^{ij}, K^{jk}]/32 for pairwise distinct i, j, k. Stored for i < k;
  /// F^{kji} is returned as -F^{ijk}.
  const Expr& F(int i, int j, int k) const;

 private:
  void check_index(int i) const;

  SO2nContext ctx_;
  std::vector<Expr> G_, C1_;
  std::map<std::pair<int, int>, Expr> K_, C2_, P_;
  std::map<std::tuple<int, int, int>, Expr> F_;
};

/// G^i = L_{2i-1,2i}^2 and K^{ij} = the six squares over the variables of
/// pairs i and j, as product expressions of generator leaves.
Expr G_expr(const SO2nContext& ctx, int i);
Expr K_expr(const SO2nContext& ctx, int i, int j);

Operator make_G(const SO2nContext& ctx, int i);
Operator make_K(const SO2nContext& ctx, int i, int j);

/// [X, L_{2s-1,2s}] = 0 for every G^i, K^{ij} and every s.
std::vector<Identity> commutant_identities(const CommutantBasis& basis);

/// Every admissible instance of the five defining relations, ordered by
/// relation then tuple. Relations with no admissible tuple at this n are
/// listed in `skipped`.
std::vector<Identity> racah_identities(const CommutantBasis& basis, std::vector<std::string>* skipped = nullptr);

RelationReport verify_racah_relations(const SO2nContext& ctx, Schedule schedule = Schedule::parallel, int jobs = 0);
RelationReport verify_racah_relations(const CommutantBasis& basis, Schedule schedule = Schedule::parallel,
                                      int jobs = 0);

/// Index-symmetry properties: F^{ijk} + F^{kji} = 0, F^{ijk} + F^{jik} = 0,
/// [C^i, P^{jk}] = 0.
std::vector<Identity> racah_symmetry_identities(const CommutantBasis& basis);

/// C^A assembled from C^{ij} and C^i through the subset-dependency formula,
/// for a subset of [n] with at least two elements.
Expr dependency_casimir(const CommutantBasis& basis, const std::vector<int>& subset);
/// The dependency formula against the directly computed coproduct Casimir
/// of the matching pair union.
Identity dependency_identity(const CommutantBasis& basis, const std::vector<int>& subset);
bool verify_dependency(const CommutantBasis& basis, const std::vector<int>& subset);

}  // namespace rcomm

#endif  // RCOMM_RACAH_HPP

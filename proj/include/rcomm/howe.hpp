#ifndef RCOMM_HOWE_HPP
#define RCOMM_HOWE_HPP

#include <vector>

#include "rcomm/liealg.hpp"

namespace rcomm {

/// A union of designated variable pairs (2i-1; 2i), given by the factor
/// indices i. Only such unions are representable.
class PairUnion {
 public:
  /// Throws std::invalid_argument on repeated or out-of-range factors.
  PairUnion(const SO2nContext& ctx, std::vector<int> pairs);

  const std::vector<int>& pairs() const { return pairs_; }
  int pair_count() const { return int(pairs_.size()); }
  /// |A| = 2N.
  int cardinality() const { return 2 * pair_count(); }
  /// The variable indices 2i-1, 2i of every pair, ascending.
  std::vector<int> variables() const;

 private:
  std::vector<int> pairs_;
};

/// J_+^A = sum xi^2/2, J_-^A = sum d^2/2, J_0^A = (|A|/2 + sum xi d)/2.
SU11Triple make_JA(const SO2nContext& ctx, const PairUnion& a);

Expr casimir_CA_expr(const SO2nContext& ctx, const PairUnion& a);
Operator casimir_CA(const SO2nContext& ctx, const PairUnion& a);
/// |A|(|A|-4)/16 - sum_{mu<nu in A} L_{mu nu}^2 / 4.
Expr casimir_CA_closed_form(const SO2nContext& ctx, const PairUnion& a);

/// Every pair union of [n] (all nonempty subsets), ordered by size then lexicographically.
std::vector<PairUnion> all_pair_unions(const SO2nContext& ctx);

/// C^A against the sum of two-pair Casimirs minus (|A|-4)/2 times the
/// single-pair ones. Requires N >= 2.
Identity decomposition_identity(const SO2nContext& ctx, const PairUnion& a);
bool verify_decomposition(const SO2nContext& ctx, const PairUnion& a);

/// C^{(2i-1;2i)} = -(G^i + 1)/4 and C^{(2i-1;2i)(2j-1;2j)} = -K^{ij}/4.
std::vector<Identity> correspondence_identities(const SO2nContext& ctx);
RelationReport verify_commutant_correspondence(const SO2nContext& ctx, Schedule schedule = Schedule::parallel,
                                               int jobs = 0);

/// The full Howe layer sweep: su(1,1) relations of every J^A, the closed
/// form for every C^A, the decomposition for N >= 2, the correspondence,
/// [C^A, C^{[n]}] = 0, and independence of C^A from the pair order.
std::vector<Identity> howe_identities(const SO2nContext& ctx);

}  // namespace rcomm

#endif  // RCOMM_HOWE_HPP

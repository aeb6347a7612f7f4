#ifndef RCOMM_EXPR_HPP
#define RCOMM_EXPR_HPP

#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcomm/weyl.hpp"

namespace rcomm {

/// Unevaluated operator expression: a DAG of leaf operators combined by
/// linear combination, ordered product and commutator.
///
/// Every identity in the library is stated as a pair of Exprs. The tree can
/// be evaluated two independent ways: value() expands it with the
/// normal-ordering engine (memoized per node, thread-safe), while apply()
/// acts on a function by composing op_apply at the leaves and never
/// multiplies operators symbolically.
class Expr {
 public:
  /// Per-evaluation state for apply(): optional parameter values to
  /// substitute into leaves, and caches keyed by node.
  ///
  /// With expand_depth >= 0, product and commutator nodes nested at least
  /// that many products deep are applied through their expanded value()
  /// instead of by composition; expand_depth = 1 composes only the
  /// outermost products.
  struct ApplyContext {
    std::span<const Rational> params;
    int expand_depth = -1;
    std::unordered_map<const void*, Operator> substituted_leaves;
    std::unordered_map<const void*, Polynomial> base_results;
  };

  static Expr leaf(Operator op);
  static Expr scalar(const AlgebraSignature& sig, const Rational& c);
  static Expr scalar(const AlgebraSignature& sig, const ParamPoly& c);

  const AlgebraSignature& signature() const;
  const Operator& value() const;
  bool is_evaluated() const;

  /// (this) f, computed by composition. With ctx.params set, parameters in
  /// leaves are replaced by those values before application.
  Polynomial apply(const Polynomial& f, ApplyContext& ctx) const;
  Polynomial apply(const Polynomial& f) const;

  /// Upper bound on the derivative order of value(), computed structurally.
  int derivative_degree_bound() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Rational& c, const Expr& a);
  friend Expr operator*(const ParamPoly& c, const Expr& a);
  /// Ordered product a b.
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr commutator(const Expr& a, const Expr& b);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Polynomial apply_impl(const Polynomial& f, ApplyContext& ctx, bool base, int depth) const;

  std::shared_ptr<const Node> node_;
};

Expr commutator(const Expr& a, const Expr& b);

}  // namespace rcomm

#endif  // RCOMM_EXPR_HPP

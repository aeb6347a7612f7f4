#include "rcomm/expr.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace rcomm {

struct Expr::Node {
  enum class Kind { leaf, linear, product, commutator };

  Kind kind = Kind::leaf;
  AlgebraSignature sig;
  std::optional<Operator> leaf_op;
  // linear: sum of coeffs[k] * children[k]; product/commutator: two children.
  std::vector<ParamPoly> coeffs;
  std::vector<Expr> children;
  int degree_bound = 0;

  mutable std::once_flag once;
  mutable std::optional<Operator> cached;
};

namespace {

using Node = Expr::Node;

void check_same(const AlgebraSignature& a, const AlgebraSignature& b) {
  if (!(a == b)) throw std::invalid_argument("Expr: signature mismatch");
}

}  // namespace

Expr Expr::leaf(Operator op) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::leaf;
  node->sig = op.signature();
  node->degree_bound = op.derivative_degree();
  node->leaf_op = std::move(op);
  return Expr(std::move(node));
}

Expr Expr::scalar(const AlgebraSignature& sig, const Rational& c) { return leaf(Operator::scalar(sig, c)); }

Expr Expr::scalar(const AlgebraSignature& sig, const ParamPoly& c) { return leaf(Operator::scalar(sig, c)); }

const AlgebraSignature& Expr::signature() const { return node_->sig; }

int Expr::derivative_degree_bound() const { return node_->degree_bound; }

bool Expr::is_evaluated() const { return node_->kind == Node::Kind::leaf || node_->cached.has_value(); }

const Operator& Expr::value() const {
  const Node& n = *node_;
  if (n.kind == Node::Kind::leaf) return *n.leaf_op;
  std::call_once(n.once, [&n] {
    switch (n.kind) {
      case Node::Kind::linear: {
        Operator sum(n.sig);
        for (std::size_t k = 0; k < n.children.size(); ++k) sum += n.children[k].value() * n.coeffs[k];
        n.cached = std::move(sum);
        break;
      }
      case Node::Kind::product:
        n.cached = n.children[0].value() * n.children[1].value();
        break;
      case Node::Kind::commutator:
        n.cached = commutator(n.children[0].value(), n.children[1].value());
        break;
      case Node::Kind::leaf:
        break;
    }
  });
  return *n.cached;
}

Polynomial Expr::apply(const Polynomial& f) const {
  ApplyContext ctx;
  return apply(f, ctx);
}

Polynomial Expr::apply(const Polynomial& f, ApplyContext& ctx) const {
  check_same(signature(), f.signature());
  return apply_impl(f, ctx, true, 0);
}

namespace {

const Operator& substituted(const void* key, const Operator& op, Expr::ApplyContext& ctx) {
  if (ctx.params.empty() || op.signature().num_params == 0) return op;
  auto it = ctx.substituted_leaves.find(key);
  if (it == ctx.substituted_leaves.end()) it = ctx.substituted_leaves.emplace(key, op.substitute(ctx.params)).first;
  return it->second;
}

}  // namespace

Polynomial Expr::apply_impl(const Polynomial& f, ApplyContext& ctx, bool base, int depth) const {
  const Node& n = *node_;
  if (base) {
    auto hit = ctx.base_results.find(&n);
    if (hit != ctx.base_results.end()) return hit->second;
  }
  Polynomial result(n.sig);
  const bool composite = n.kind == Node::Kind::product || n.kind == Node::Kind::commutator;
  if (n.kind == Node::Kind::leaf) {
    result = op_apply(substituted(&n, *n.leaf_op, ctx), f);
  } else if (composite && ctx.expand_depth >= 0 && depth >= ctx.expand_depth) {
    result = op_apply(substituted(&n, value(), ctx), f);
  } else if (n.kind == Node::Kind::linear) {
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      Polynomial part = n.children[k].apply_impl(f, ctx, base, depth);
      if (!ctx.params.empty() && n.sig.num_params != 0) {
        part *= n.coeffs[k].evaluate(ctx.params);
      } else {
        part *= n.coeffs[k];
      }
      result += part;
    }
  } else if (n.kind == Node::Kind::product) {
    Polynomial inner = n.children[1].apply_impl(f, ctx, base, depth + 1);
    result = n.children[0].apply_impl(inner, ctx, false, depth + 1);
  } else {
    Polynomial bf = n.children[1].apply_impl(f, ctx, base, depth + 1);
    Polynomial af = n.children[0].apply_impl(f, ctx, base, depth + 1);
    result = n.children[0].apply_impl(bf, ctx, false, depth + 1);
    result -= n.children[1].apply_impl(af, ctx, false, depth + 1);
  }
  if (base) ctx.base_results.emplace(&n, result);
  return result;
}

Expr operator+(const Expr& a, const Expr& b) {
  check_same(a.signature(), b.signature());
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::linear;
  node->sig = a.signature();
  const std::size_t arity = node->sig.num_params;
  node->coeffs = {ParamPoly(Rational(1), arity), ParamPoly(Rational(1), arity)};
  node->children = {a, b};
  node->degree_bound = std::max(a.derivative_degree_bound(), b.derivative_degree_bound());
  return Expr(std::move(node));
}

Expr operator-(const Expr& a, const Expr& b) {
  check_same(a.signature(), b.signature());
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::linear;
  node->sig = a.signature();
  const std::size_t arity = node->sig.num_params;
  node->coeffs = {ParamPoly(Rational(1), arity), ParamPoly(Rational(-1), arity)};
  node->children = {a, b};
  node->degree_bound = std::max(a.derivative_degree_bound(), b.derivative_degree_bound());
  return Expr(std::move(node));
}

Expr operator-(const Expr& a) { return Rational(-1) * a; }

Expr operator*(const Rational& c, const Expr& a) { return ParamPoly(c, a.signature().num_params) * a; }

Expr operator*(const ParamPoly& c, const Expr& a) {
  if (c.arity() != a.signature().num_params) throw std::invalid_argument("Expr: coefficient arity mismatch");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::linear;
  node->sig = a.signature();
  node->coeffs = {c};
  node->children = {a};
  node->degree_bound = a.derivative_degree_bound();
  return Expr(std::move(node));
}

Expr operator*(const Expr& a, const Expr& b) {
  check_same(a.signature(), b.signature());
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::product;
  node->sig = a.signature();
  node->children = {a, b};
  node->degree_bound = a.derivative_degree_bound() + b.derivative_degree_bound();
  return Expr(std::move(node));
}

Expr commutator(const Expr& a, const Expr& b) {
  check_same(a.signature(), b.signature());
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::commutator;
  node->sig = a.signature();
  node->children = {a, b};
  node->degree_bound = a.derivative_degree_bound() + b.derivative_degree_bound();
  return Expr(std::move(node));
}

}  // namespace rcomm

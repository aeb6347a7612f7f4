#include "rcomm/racah.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rcomm/howe.hpp"

namespace rcomm {

namespace {

constexpr const char* kSuite = "racah";

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

}  // namespace

Expr G_expr(const SO2nContext& ctx, int i) {
  if (i < 1 || i > ctx.n()) throw std::out_of_range("G: index out of range");
  Expr l = ctx.L(2 * i - 1, 2 * i);
  return l * l;
}

Expr K_expr(const SO2nContext& ctx, int i, int j) {
  if (i < 1 || j < 1 || i > ctx.n() || j > ctx.n()) throw std::out_of_range("K: index out of range");
  if (i == j) throw std::invalid_argument("K: indices must differ");
  std::tie(i, j) = ordered(i, j);
  const int vars[] = {2 * i - 1, 2 * i, 2 * j - 1, 2 * j};
  Expr sum = Expr::scalar(ctx.signature(), Rational(0));
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      Expr l = ctx.L(vars[p], vars[q]);
      sum = sum + l * l;
    }
  }
  return sum;
}

Operator make_G(const SO2nContext& ctx, int i) { return G_expr(ctx, i).value(); }

Operator make_K(const SO2nContext& ctx, int i, int j) {
  if (i >= j) throw std::invalid_argument("make_K: require i < j");
  return K_expr(ctx, i, j).value();
}

CommutantBasis::CommutantBasis(const SO2nContext& ctx, CasimirShift shift) : ctx_(ctx) {
  const auto& sig = ctx_.signature();
  const int n = ctx_.n();
  const Rational c1_shift = shift == CasimirShift::consistent ? Rational(-1, 4) : Rational(1, 4);
  for (int i = 1; i <= n; ++i) {
    G_.push_back(G_expr(ctx_, i));
    C1_.push_back(Rational(-1, 4) * G_.back() + Expr::scalar(sig, c1_shift));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Expr k = K_expr(ctx_, i, j);
      K_.emplace(std::pair{i, j}, k);
      C2_.emplace(std::pair{i, j}, Rational(-1, 4) * k);
      Expr gsum = G_[std::size_t(i - 1)] + G_[std::size_t(j - 1)];
      P_.emplace(std::pair{i, j}, Rational(-1, 4) * k + Rational(1, 4) * gsum + Expr::scalar(sig, Rational(1, 2)));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = i + 1; k <= n; ++k) {
        if (j == i || j == k) continue;
        F_.emplace(std::tuple{i, j, k}, Rational(1, 32) * commutator(K(i, j), K(j, k)));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k < i; ++k) {
        if (j == i || j == k) continue;
        F_.emplace(std::tuple{i, j, k}, -F_.at(std::tuple{k, j, i}));
      }
    }
  }
}

void CommutantBasis::check_index(int i) const {
  if (i < 1 || i > ctx_.n()) throw std::out_of_range("CommutantBasis: index out of range");
}

const Expr& CommutantBasis::G(int i) const {
  check_index(i);
  return G_[std::size_t(i - 1)];
}

const Expr& CommutantBasis::C1(int i) const {
  check_index(i);
  return C1_[std::size_t(i - 1)];
}

const Expr& CommutantBasis::K(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("CommutantBasis::K: indices must differ");
  return K_.at(ordered(i, j));
}

const Expr& CommutantBasis::C2(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("CommutantBasis::C2: indices must differ");
  return C2_.at(ordered(i, j));
}

const Expr& CommutantBasis::P(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("CommutantBasis::P: indices must differ");
  return P_.at(ordered(i, j));
}

const Expr& CommutantBasis::F(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j || j == k || i == k) throw std::invalid_argument("CommutantBasis::F: indices must be distinct");
  return F_.at(std::tuple{i, j, k});
}

std::vector<Identity> commutant_identities(const CommutantBasis& basis) {
  const auto& ctx = basis.context();
  const int n = ctx.n();
  Expr zero = Expr::scalar(ctx.signature(), Rational(0));
  std::vector<Identity> ids;
  for (int i = 1; i <= n; ++i) {
    for (int s = 1; s <= n; ++s) {
      ids.push_back({kSuite, "commutant", {i, s}, commutator(basis.G(i), ctx.L(2 * s - 1, 2 * s)), zero});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int s = 1; s <= n; ++s) {
        ids.push_back({kSuite, "commutant", {i, j, s}, commutator(basis.K(i, j), ctx.L(2 * s - 1, 2 * s)), zero});
      }
    }
  }
  return ids;
}

namespace {

// Ordered tuples of `len` pairwise distinct indices in [n], lexicographic.
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

std::vector<Identity> racah_identities(const CommutantBasis& b, std::vector<std::string>* skipped) {
  const int n = b.n();
  std::vector<Identity> ids;
  auto note_skip = [&](const std::string& rel) {
    if (skipped) skipped->push_back(rel);
  };

  // 7a: [P^{ij}, P^{jk}] = 2 F^{ijk}
  // 7b: [P^{jk}, F^{ijk}] = P^{ik}P^{jk} - P^{jk}P^{ij} + 2 P^{ik}C^j - 2 P^{ij}C^k
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
  // 7c: [P^{kl}, F^{ijk}] = P^{ik}P^{jl} - P^{il}P^{jk}
  // 7d: [F^{ijk}, F^{jkl}] = F^{jkl}P^{ij} - F^{ikl}(P^{jk} + 2C^j) - F^{ijk}P^{jl}
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
  } else {
    note_skip("7c");
    note_skip("7d");
  }
  // 7e: [F^{ijk}, F^{klm}] = F^{ilm}P^{jk} - P^{ik}F^{jlm}
  if (n >= 5) {
    for (const auto& t : distinct_tuples(n, 5)) {
      int i = t[0], j = t[1], k = t[2], l = t[3], m = t[4];
      ids.push_back({kSuite, "7e", t, commutator(b.F(i, j, k), b.F(k, l, m)),
                     b.F(i, l, m) * b.P(j, k) - b.P(i, k) * b.F(j, l, m)});
    }
  } else {
    note_skip("7e");
  }
  return ids;
}

RelationReport verify_racah_relations(const CommutantBasis& basis, Schedule schedule, int jobs) {
  std::vector<std::string> skipped;
  auto ids = racah_identities(basis, &skipped);
  RelationReport report = verify_identities(ids, schedule, jobs);
  for (const auto& rel : skipped) {
    report.add_skipped(kSuite, rel, "no admissible tuple of distinct indices at n=" + std::to_string(basis.n()));
  }
  return report;
}

RelationReport verify_racah_relations(const SO2nContext& ctx, Schedule schedule, int jobs) {
  return verify_racah_relations(CommutantBasis(ctx), schedule, jobs);
}

std::vector<Identity> racah_symmetry_identities(const CommutantBasis& b) {
  const int n = b.n();
  const auto& sig = b.context().signature();
  Expr zero = Expr::scalar(sig, Rational(0));
  std::vector<Identity> ids;
  for (const auto& t : distinct_tuples(n, 3)) {
    int i = t[0], j = t[1], k = t[2];
    if (i < k) {
      // Evaluated from the defining commutator rather than the stored sign flip.
      Expr reversed = Rational(1, 32) * commutator(b.K(k, j), b.K(j, i));
      ids.push_back({kSuite, "F-antisym-reverse", t, b.F(i, j, k) + reversed, zero});
    }
    ids.push_back({kSuite, "F-antisym-swap", t, b.F(i, j, k) + b.F(j, i, k), zero});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (i == j || i == k) continue;
        ids.push_back({kSuite, "C-central", {i, j, k}, commutator(b.C1(i), b.P(j, k)), zero});
      }
    }
  }
  return ids;
}

Expr dependency_casimir(const CommutantBasis& b, const std::vector<int>& subset) {
  if (subset.size() < 2) throw std::invalid_argument("dependency_casimir: subset needs at least two elements");
  std::set<int> seen;
  for (int i : subset) {
    if (i < 1 || i > b.n() || !seen.insert(i).second) throw std::invalid_argument("dependency_casimir: invalid subset");
  }
  const auto& sig = b.context().signature();
  Expr sum = Expr::scalar(sig, Rational(0));
  for (std::size_t p = 0; p < subset.size(); ++p) {
    for (std::size_t q = p + 1; q < subset.size(); ++q) sum = sum + b.C2(subset[p], subset[q]);
  }
  const Rational weight(long(subset.size()) - 2);
  for (int i : subset) sum = sum - weight * b.C1(i);
  return sum;
}

Identity dependency_identity(const CommutantBasis& b, const std::vector<int>& subset) {
  return {kSuite, "6", subset, casimir_CA_expr(b.context(), PairUnion(b.context(), subset)),
          dependency_casimir(b, subset)};
}

bool verify_dependency(const CommutantBasis& b, const std::vector<int>& subset) {
  return holds(dependency_identity(b, subset));
}

}  // namespace rcomm

#include "rcomm/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcomm/howe.hpp"
#include "rcomm/oracle.hpp"
#include "rcomm/racah.hpp"
#include "rcomm/reduction.hpp"

namespace rcomm {

namespace {

const std::vector<std::string> kSuiteOrder{"o2n", "su11", "howe", "racah", "reduction", "oracle"};

std::set<std::string> expand_suites(const std::vector<std::string>& suites) {
  std::set<std::string> out;
  for (const auto& s : suites) {
    if (s == "all") {
      out.insert(kSuiteOrder.begin(), kSuiteOrder.end());
    } else if (std::find(kSuiteOrder.begin(), kSuiteOrder.end(), s) != kSuiteOrder.end()) {
      out.insert(s);
    } else {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  return out;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.suites.empty()) throw UsageError("no suite selected");
  expand_suites(config.suites);
  if (config.n < 3) throw UsageError("--n must be at least 3");
  if (config.n > 5 && !config.allow_large_n) throw UsageError("--n above 5 requires --allow-large-n");
  if (std::size_t(2 * config.n) > kMaxVars) throw UsageError("--n above " + std::to_string(kMaxVars / 2) + " is not supported");
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (config.trials < 1) throw UsageError("--trials must be at least 1");
}

std::vector<Identity> weyl_self_tests() {
  const AlgebraSignature plain(4);
  const AlgebraSignature local(1, 0b1);
  auto x = [&](std::size_t i) { return Expr::leaf(Operator::x(plain, i)); };
  auto d = [&](std::size_t i) { return Expr::leaf(Operator::d(plain, i)); };
  auto L = [&](std::size_t a, std::size_t b) { return x(a) * d(b) - x(b) * d(a); };
  Expr one = Expr::scalar(plain, Rational(1));
  Expr zero = Expr::scalar(plain, Rational(0));
  Expr lx = Expr::leaf(Operator::x(local, 0));
  Expr linv = Expr::leaf(Operator::x(local, 0, -1));
  Expr linv2 = Expr::leaf(Operator::x(local, 0, -2));
  Expr ld = Expr::leaf(Operator::d(local, 0));
  Expr x1sq = Expr::leaf(Operator::x(plain, 0, 2));

  std::vector<Identity> ids;
  ids.push_back({"weyl", "ccr", {1}, d(0) * x(0), x(0) * d(0) + one});
  ids.push_back({"weyl", "reorder", {1, 2}, (x(0) * d(1)) * (x(1) * d(0)), x(0) * x(1) * d(0) * d(1) + x(0) * d(0)});
  ids.push_back({"weyl", "localized-reorder", {1}, ld * linv, linv * ld - linv2});
  ids.push_back({"weyl", "commutator", {1}, commutator(d(0), x1sq), Rational(2) * x(0)});
  ids.push_back({"weyl", "so-bracket", {1, 2, 3}, commutator(L(0, 1), L(1, 2)), L(0, 2)});
  ids.push_back({"weyl", "so-disjoint", {1, 2, 3, 4}, commutator(L(0, 1), L(2, 3)), zero});
  ids.push_back({"weyl", "localized-inverse", {1}, lx * linv, Expr::scalar(local, Rational(1))});
  return ids;
}

namespace {

struct SuiteBatch {
  std::vector<Identity> ids;
  std::vector<std::pair<std::string, std::string>> skipped;  // (relation, note)
};

std::vector<std::vector<int>> subsets_of_size_at_least(int n, int min_size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    if (int(s.size()) >= min_size) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SuiteBatch build_suite(const std::string& suite, int n) {
  SuiteBatch batch;
  auto take = [&](std::vector<Identity> more) {
    batch.ids.insert(batch.ids.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  const std::string skip_note = "no admissible tuple of distinct indices at n=" + std::to_string(n);
  if (suite == "o2n") {
    SO2nContext ctx(n);
    take(o2n_identities(ctx));
    take(casimir_centrality_identities(ctx));
  } else if (suite == "su11") {
    take(metaplectic_identities(SO2nContext(n)));
  } else if (suite == "howe") {
    take(howe_identities(SO2nContext(n)));
  } else if (suite == "racah") {
    CommutantBasis basis{SO2nContext(n)};
    take(commutant_identities(basis));
    std::vector<std::string> skipped;
    take(racah_identities(basis, &skipped));
    for (const auto& rel : skipped) batch.skipped.push_back({rel, skip_note});
    take(racah_symmetry_identities(basis));
    for (const auto& subset : subsets_of_size_at_least(n, 2)) batch.ids.push_back(dependency_identity(basis, subset));
  } else if (suite == "reduction") {
    ReducedContext ctx(n);
    take(reduction_identities(ctx));
    std::vector<std::string> skipped;
    take(reduced_racah_identities(ReducedRacahBasis(ctx), &skipped));
    for (const auto& rel : skipped) batch.skipped.push_back({rel, skip_note});
  }
  return batch;
}

class Writer {
 public:
  Writer(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const ReportEntry& e) {
    out_ << (json_ ? to_json_line(e) : to_text_line(e)) << '\n';
    report_.add(e);
  }

  void emit_all(const RelationReport& r) {
    for (const auto& e : r.entries()) emit(e);
  }

  void emit_operator(const std::string& name, const Operator& op) {
    if (json_) {
      nlohmann::ordered_json j;
      j["operator"] = name;
      j["terms"] = op.size();
      j["value"] = op.to_string();
      out_ << j.dump() << '\n';
    } else {
      out_ << name << " = " << op.to_string() << '\n';
    }
  }

  void summary() {
    if (json_) {
      out_ << summary_json_line(report_) << '\n';
    } else {
      out_ << "total " << report_.size() << "  passed " << report_.passed_count() << "  failed "
           << report_.failed_count() << "  skipped " << report_.skipped_count() << '\n';
    }
    out_.flush();
  }

  const RelationReport& report() const { return report_; }

 private:
  std::ostream& out_;
  bool json_;
  RelationReport report_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  validate(config);
  const auto selected = expand_suites(config.suites);
  Writer writer(out, config.json);

  std::vector<Identity> checked;
  std::vector<bool> verdicts;
  auto verify = [&](std::vector<Identity> ids) {
    RelationReport r = verify_identities(ids, Schedule::parallel, config.jobs);
    writer.emit_all(r);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      checked.push_back(std::move(ids[k]));
      verdicts.push_back(r.entries()[k].passed);
    }
  };

  verify(weyl_self_tests());
  for (const auto& suite : kSuiteOrder) {
    if (suite == "oracle" || !selected.count(suite)) continue;
    SuiteBatch batch = build_suite(suite, config.n);
    verify(std::move(batch.ids));
    for (const auto& [rel, note] : batch.skipped) {
      RelationReport r;
      r.add_skipped(suite, rel, note);
      writer.emit_all(r);
    }
  }

  if (config.emit_operators) {
    ReducedContext ctx(config.n);
    for (int i = 1; i <= config.n; ++i) {
      for (int j = i + 1; j <= config.n; ++j) {
        writer.emit_operator("Q_" + std::to_string(i) + std::to_string(j), make_Q(ctx, i, j));
      }
    }
    writer.emit_operator("C_total", reduced_casimir_total_expr(ctx).value());
  }

  if (selected.count("oracle")) {
    writer.emit_all(oracle_sweep(checked, verdicts, config.trials, config.seed, 1, Schedule::parallel, config.jobs));
    writer.emit(leibniz_sweep(AlgebraSignature(3, 0b100, 2), 10 * config.trials, config.seed));
  }

  writer.summary();
  return writer.report().all_passed() ? kExitPass : kExitFailure;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact verification of Weyl-algebra operator identities"};
  app.add_option("--suite", config.suites, "Suites to run: o2n su11 racah howe reduction oracle all")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--n", config.n, "Rank parameter (3..5; larger with --allow-large-n)")->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  app.add_option("--seed", config.seed, "Oracle seed")->capture_default_str();
  app.add_flag("--json", config.json, "One JSON object per line");
  app.add_flag("--allow-large-n", config.allow_large_n, "Permit n > 5");
  app.add_option("--trials", config.trials, "Oracle trials per identity")->capture_default_str();
  app.add_flag("--emit-operators", config.emit_operators, "Print Q_ij and the reduced total Casimir");
  try {
    app.parse(argc, argv);
    validate(config);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return run(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rcomm

#ifndef RCOMM_REPORT_HPP
#define RCOMM_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcomm/expr.hpp"

namespace rcomm {

/// An asserted operator identity lhs = rhs, labelled by the relation it
/// instantiates and the index tuple it was instantiated at.
struct Identity {
  std::string suite;
  std::string relation;
  std::vector<int> tuple;
  Expr lhs;
  Expr rhs;
};

struct ReportEntry {
  std::string suite;
  std::string relation;
  std::vector<int> tuple;
  bool passed = false;
  bool skipped = false;
  std::size_t residual_terms = 0;
  double ms = 0.0;
  std::string note;
};

class RelationReport {
 public:
  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  void append(const RelationReport& other);
  /// A passing entry that records a relation with no admissible tuples.
  void add_skipped(const std::string& suite, const std::string& relation, const std::string& note);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  std::size_t skipped_count() const;
  bool all_passed() const { return failed_count() == 0; }
  /// Entries whose relation id matches; skipped entries included.
  std::vector<ReportEntry> for_relation(const std::string& relation) const;

 private:
  std::vector<ReportEntry> entries_;
};

/// One JSON object per line.
std::string to_json_line(const ReportEntry& e);
std::string summary_json_line(const RelationReport& r);
std::string to_text_line(const ReportEntry& e);

enum class Schedule { serial, parallel };

/// Expands lhs - rhs for every identity. The serial schedule is the
/// reference; the parallel one distributes identities over `jobs` OpenMP
/// threads. Entry order always follows the input order.
RelationReport verify_identities(const std::vector<Identity>& ids, Schedule schedule = Schedule::parallel,
                                 int jobs = 0);

/// Single identity check, used by the bool-returning verifiers.
bool holds(const Identity& id);

}  // namespace rcomm

#endif  // RCOMM_REPORT_HPP

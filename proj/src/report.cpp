#include "rcomm/report.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <sstream>

#include "json.hpp"

namespace rcomm {

void RelationReport::append(const RelationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void RelationReport::add_skipped(const std::string& suite, const std::string& relation, const std::string& note) {
  ReportEntry e;
  e.suite = suite;
  e.relation = relation;
  e.passed = true;
  e.skipped = true;
  e.note = note;
  entries_.push_back(std::move(e));
}

std::size_t RelationReport::passed_count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += (e.passed && !e.skipped);
  return c;
}

std::size_t RelationReport::failed_count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += !e.passed;
  return c;
}

std::size_t RelationReport::skipped_count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += e.skipped;
  return c;
}

std::vector<ReportEntry> RelationReport::for_relation(const std::string& relation) const {
  std::vector<ReportEntry> out;
  for (const auto& e : entries_) {
    if (e.relation == relation) out.push_back(e);
  }
  return out;
}

std::string to_json_line(const ReportEntry& e) {
  nlohmann::ordered_json j;
  j["suite"] = e.suite;
  j["relation"] = e.relation;
  j["tuple"] = e.tuple;
  j["passed"] = e.passed;
  j["residual_terms"] = e.residual_terms;
  j["ms"] = e.ms;
  if (e.skipped) j["skipped"] = true;
  if (!e.note.empty()) j["note"] = e.note;
  return j.dump();
}

std::string summary_json_line(const RelationReport& r) {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["total"] = r.size();
  j["passed"] = r.passed_count();
  j["failed"] = r.failed_count();
  j["skipped"] = r.skipped_count();
  return j.dump();
}

std::string to_text_line(const ReportEntry& e) {
  std::ostringstream os;
  os << (e.skipped ? "SKIP" : e.passed ? "PASS" : "FAIL") << "  " << e.suite << ' ' << e.relation;
  if (!e.tuple.empty()) {
    os << " (";
    for (std::size_t k = 0; k < e.tuple.size(); ++k) os << (k ? "," : "") << e.tuple[k];
    os << ')';
  }
  if (!e.skipped) {
    os << "  residual_terms=" << e.residual_terms;
    os.precision(3);
    os << std::fixed << "  ms=" << e.ms;
  }
  if (!e.note.empty()) os << "  # " << e.note;
  return os.str();
}

namespace {

ReportEntry check_one(const Identity& id) {
  ReportEntry e;
  e.suite = id.suite;
  e.relation = id.relation;
  e.tuple = id.tuple;
  auto start = std::chrono::steady_clock::now();
  try {
    Operator residual = id.lhs.value() - id.rhs.value();
    e.residual_terms = residual.size();
    e.passed = residual.is_zero();
  } catch (const std::exception& ex) {
    e.passed = false;
    e.note = std::string("error: ") + ex.what();
  }
  e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

}  // namespace

bool holds(const Identity& id) { return (id.lhs.value() - id.rhs.value()).is_zero(); }

RelationReport verify_identities(const std::vector<Identity>& ids, Schedule schedule, int jobs) {
  std::vector<ReportEntry> results(ids.size());
  if (schedule == Schedule::serial) {
    for (std::size_t k = 0; k < ids.size(); ++k) results[k] = check_one(ids[k]);
  } else {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const long count = long(ids.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) results[std::size_t(k)] = check_one(ids[std::size_t(k)]);
  }
  RelationReport report;
  for (auto& r : results) report.add(std::move(r));
  return report;
}

}  // namespace rcomm

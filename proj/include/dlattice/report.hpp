#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlattice/effect_algebra.hpp"
#include "dlattice/errors.hpp"

namespace dlat {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string detail;
  /// Number of tuples or objects examined.
  std::uint64_t cases = 0;
};

/// Outcome of a verification run: per-check status with witnesses, counts,
/// optional timings and nested sections (one per algebra in a suite run).
///
/// Entries keep insertion order so that serialized reports are stable.
class Report {
public:
  Report() = default;
  explicit Report(std::string subject, AlgebraPtr algebra = nullptr)
      : subject_(std::move(subject)), algebra_(std::move(algebra)) {}

  void add(std::string name, const CheckResult& result, std::uint64_t cases = 0, std::string detail = {});
  void add_pass(std::string name, std::uint64_t cases = 0, std::string detail = {});
  void add_fail(std::string name, Witness witness, std::string detail = {});
  void skip(std::string name, std::string reason);
  void count(std::string name, long long value);
  void timing(std::string name, double seconds);
  void add_section(Report section) { sections_.push_back(std::move(section)); }

  bool passed() const;
  std::size_t failures() const;
  const CheckEntry* find(const std::string& name) const;
  std::optional<long long> find_count(const std::string& name) const;

  const std::string& subject() const { return subject_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<CheckEntry>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, long long>>& counts() const { return counts_; }
  const std::vector<std::pair<std::string, double>>& timings() const { return timings_; }
  const std::vector<Report>& sections() const { return sections_; }

  /// Appends the checks and counts of `other`, prefixing their names.
  void absorb(const Report& other, const std::string& prefix = {});

private:
  std::string subject_;
  AlgebraPtr algebra_;
  std::vector<CheckEntry> checks_;
  std::vector<std::pair<std::string, long long>> counts_;
  std::vector<std::pair<std::string, double>> timings_;
  std::vector<Report> sections_;
};

}  // namespace dlat

#include "dlattice/report.hpp"

#include <algorithm>

namespace dlat {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

void Report::add(std::string name, const CheckResult& result, std::uint64_t cases, std::string detail) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = result.ok() ? Status::Pass : Status::Fail;
  e.witness = result.witness;
  e.detail = std::move(detail);
  e.cases = cases;
  checks_.push_back(std::move(e));
}

void Report::add_pass(std::string name, std::uint64_t cases, std::string detail) {
  add(std::move(name), CheckResult::pass(), cases, std::move(detail));
}

void Report::add_fail(std::string name, Witness witness, std::string detail) {
  add(std::move(name), CheckResult{std::move(witness)}, 0, std::move(detail));
}

void Report::skip(std::string name, std::string reason) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = Status::Skipped;
  e.detail = std::move(reason);
  checks_.push_back(std::move(e));
}

void Report::count(std::string name, long long value) { counts_.emplace_back(std::move(name), value); }

void Report::timing(std::string name, double seconds) { timings_.emplace_back(std::move(name), seconds); }

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  auto own = static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckEntry& e) { return e.status == Status::Fail; }));
  for (const auto& s : sections_) own += s.failures();
  return own;
}

const CheckEntry* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckEntry& e) { return e.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::optional<long long> Report::find_count(const std::string& name) const {
  for (const auto& [k, v] : counts_)
    if (k == name) return v;
  return std::nullopt;
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (auto e : other.checks_) {
    e.name = prefix + e.name;
    checks_.push_back(std::move(e));
  }
  for (const auto& [k, v] : other.counts_) counts_.emplace_back(prefix + k, v);
  for (const auto& [k, v] : other.timings_) timings_.emplace_back(prefix + k, v);
  for (const auto& s : other.sections_) sections_.push_back(s);
}

}  // namespace dlat

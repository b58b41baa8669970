#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlattice/element_set.hpp"

namespace dlat {

enum class ErrorKind {
  AxiomViolation,
  NotALattice,
  NotAPartialOrder,
  SizeCap,
  MixedAlgebras,
  NotAGenerator,
  NotACongruence,
  NotEquivalence,
  NotASubmeasure,
  NotAPseudometric,
  NotModular,
  NotMV,
  InvalidArgument,
  Format,
};

const char* to_string(ErrorKind kind);

/// A concrete counterexample: the name of the violated condition and the
/// element tuple that violates it.
struct Witness {
  std::string condition;
  std::vector<Element> tuple;

  bool operator==(const Witness&) const = default;
};

/// Outcome of an exhaustive property check. A failed check always carries
/// the lexicographically smallest witness found by the scan.
struct CheckResult {
  std::optional<Witness> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string condition, std::vector<Element> tuple) {
    return {Witness{std::move(condition), std::move(tuple)}};
  }

  bool ok() const { return !witness.has_value(); }
  explicit operator bool() const { return ok(); }
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::optional<Witness> witness = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::optional<Witness>& witness() const { return witness_; }

private:
  ErrorKind kind_;
  std::optional<Witness> witness_;
};

/// Throws `Error(kind, ...)` carrying the witness of `result` if it failed.
void require(const CheckResult& result, ErrorKind kind, const std::string& what);

}  // namespace dlat

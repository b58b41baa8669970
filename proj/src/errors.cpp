#include "dlattice/errors.hpp"

#include <sstream>

namespace dlat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotEquivalence: return "NotEquivalence";
    case ErrorKind::NotASubmeasure: return "NotASubmeasure";
    case ErrorKind::NotAPseudometric: return "NotAPseudometric";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::NotMV: return "NotMV";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Format: return "FormatError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::optional<Witness>& w) {
  std::ostringstream os;
  os << to_string(kind) << ": " << message;
  if (w) {
    os << " [" << w->condition;
    if (!w->tuple.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < w->tuple.size(); ++i) os << (i ? "," : "") << w->tuple[i];
      os << ")";
    }
    os << "]";
  }
  return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<Witness> witness)
    : std::runtime_error(compose(kind, message, witness)), kind_(kind), witness_(std::move(witness)) {}

void require(const CheckResult& result, ErrorKind kind, const std::string& what) {
  if (!result.ok()) throw Error(kind, what, result.witness);
}

}  // namespace dlat

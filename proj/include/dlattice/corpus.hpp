#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dlattice/submeasures.hpp"

namespace dlat::corpus {

/// Seeded generator with a portable integer mapping, so that corpora are
/// identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  long long between(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

private:
  std::mt19937_64 engine_;
};

/// Constants used for generated submeasures.
const std::vector<Rational>& k_values();

/// Modular measures: the zero measure, then random integer combinations of
/// a basis of scalar measures in 1 to 3 coordinates, alternating norms.
std::vector<ModularMeasure> modular_measures(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed);

/// At least `count` k-submeasures: indicators of D-filters (finite and
/// infinite, scaled), sums and maxima of those, distances to zero from
/// modular measures, and random monotone assignments kept only when they
/// pass `is_k_submeasure`. Every entry passes `is_k_submeasure`.
std::vector<KSubmeasure> submeasures(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed);

/// Functions satisfying the first three submeasure conditions with k = 1,
/// mixing random monotone assignments (filtered) with structured ones.
std::vector<std::vector<ExtendedValue>> subadditive_functions(const AlgebraPtr& alg, std::size_t count,
                                                              std::uint64_t seed);

}  // namespace dlat::corpus

#pragma once

#include <cstdint>

#include "dlattice/catalog.hpp"
#include "dlattice/report.hpp"
#include "dlattice/uniformities.hpp"

namespace dlat {

struct SuiteOptions {
  /// Largest catalog algebra included.
  int max_n = 10;
  /// Largest carrier for the partition scan; above it the congruence list
  /// comes from the D-filters and the isomorphism check is skipped.
  int congruence_cap = kPartitionCap;
  std::size_t submeasures = 100;
  std::size_t measures = 20;
  std::size_t mv_functions = 100;
  std::uint64_t seed = 20240601;
  bool timings = false;
};

/// Seed for one algebra: the suite seed mixed with a hash of its name.
std::uint64_t algebra_seed(const std::string& name, std::uint64_t seed);

/// Generated submeasures: each kernel is a D-filter generator and each
/// passes `check_weakest`.
Report submeasure_layer(const AlgebraPtr& alg, const std::vector<Congruence>& congruences, std::size_t count,
                        std::uint64_t seed);

/// Generated modular measures: every distance passes the pseudometric
/// conditions with k = m = 1, its submeasure reports equal uniformities,
/// and `decompose_measure` passes.
Report measure_layer(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed);

/// For every D-congruence E: the canonical indicator of the filter of
/// neighbourhoods of zero has kernel uniformity E.
Report indicator_layer(const AlgebraPtr& alg, const std::vector<Congruence>& congruences);

/// On MV-algebras, `mv_s123_check` over generated functions; skipped
/// otherwise.
Report mv_layer(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed);

/// Every layer on one algebra.
Report run_algebra(const catalog::NamedAlgebra& entry, const SuiteOptions& options);

/// Every layer on every catalog algebra up to `max_n` elements, one section
/// per algebra.
Report run_suite(const SuiteOptions& options);

}  // namespace dlat

#pragma once

#include <vector>

#include "dlattice/dfilters.hpp"
#include "dlattice/extended_value.hpp"
#include "dlattice/report.hpp"
#include "dlattice/uniformities.hpp"

namespace dlat {

/// A [0,+∞]-valued function on the carrier with constant k ≥ 1.
struct KSubmeasure {
  AlgebraPtr algebra;
  std::vector<ExtendedValue> values;
  Rational k{1};

  const ExtendedValue& operator()(Element a) const { return values[static_cast<std::size_t>(a)]; }
};

/// Exhaustive check of η(0)=0, monotonicity, η(a⊕b) ≤ kη(a)+η(b) for a⊥b,
/// and η((a∨b)⊖b) ≤ kη(a). Witness conditions: "null_at_zero", "monotone",
/// "k_subadditive", "join_absorption".
CheckResult is_k_submeasure(const EffectAlgebra& alg, const std::vector<ExtendedValue>& values, const Rational& k);
CheckResult is_k_submeasure(const KSubmeasure& eta);
/// The same scan without the join-absorption condition.
CheckResult check_without_absorption(const EffectAlgebra& alg, const std::vector<ExtendedValue>& values,
                                     const Rational& k);

/// {a : η(a) = 0}.
ElementSet submeasure_kernel(const KSubmeasure& eta);

/// The weakest D-uniformity making η uniformly continuous. At finite scale
/// its minimal entourage is generated by the kernel of η (the intersection
/// of all {η < ε}). Throws NotASubmeasure.
Congruence kernel_uniformity(const KSubmeasure& eta);

/// η is uniformly continuous for the uniformity with minimal entourage `e`
/// iff every pair in `e` is ε-close for all ε, i.e. η is constant on each
/// class with +∞ never mixed with finite values.
CheckResult uniformly_continuous(const KSubmeasure& eta, const Congruence& e);

/// Verifies that η is uniformly continuous for its kernel uniformity, that
/// every D-congruence making η uniformly continuous is finer, that the
/// kernel is a D-filter generator, and the bound
/// η(a∨b) ≤ kη(aΔb) + η(a∧b). Uses the partition scan (throws SizeCap).
Report check_weakest(const KSubmeasure& eta, int partition_cap = kPartitionCap);
/// Same, against a precomputed list of all D-congruences.
Report check_weakest(const KSubmeasure& eta, const std::vector<Congruence>& congruences);

/// η = 0 on F0 and 1 elsewhere, with k = 1. Throws NotAGenerator.
KSubmeasure canonical_indicator(const DFilterGenerator& f);

struct Pseudometric {
  AlgebraPtr algebra;
  /// Row-major n×n distances.
  std::vector<Rational> d;
  Rational k{1};
  Rational m{1};

  const Rational& operator()(Element a, Element b) const {
    return d[static_cast<std::size_t>(a) * static_cast<std::size_t>(algebra->size()) + static_cast<std::size_t>(b)];
  }
};

/// Metric axioms ("nonnegative", "zero_diagonal", "symmetric", "triangle")
/// and the compatibility conditions "meet_contraction" d(a∧c,b∧c) ≤ d(a,b),
/// "sum_lipschitz" d(a⊕c,b⊕c) ≤ k·d(a,b) for c⊥a,b,
/// "absorb_lipschitz" d((a∨c)⊖c,(b∨c)⊖c) ≤ m·d(a,b),
/// "absorb_zero" d((a∨c)⊖c,0) ≤ k·d(a,0).
CheckResult check_pseudometric(const Pseudometric& d);

/// d(a∨c, b∨c) ≤ d(a,b) for all a, b, c.
CheckResult check_join_contraction(const Pseudometric& d);

/// {(a,b) : d(a,b) = 0}.
Relation zero_distance_relation(const Pseudometric& d);

struct PseudometricSubmeasure {
  KSubmeasure eta;
  bool uniformities_equal = false;
};

/// η(a) = d(a,0) with the constant k of `d`; compares the zero-distance
/// relation with the kernel uniformity of η. Throws NotAPseudometric.
PseudometricSubmeasure submeasure_from_pseudometric(const Pseudometric& d);

enum class NormKind { Max, Sum };

/// A modular measure with values in Q^dim; the group topology is modelled by
/// the coordinate seminorms |x_λ| plus one norm (max or sum of coordinates).
struct ModularMeasure {
  AlgebraPtr algebra;
  int dim = 1;
  /// mu[a] has `dim` coordinates.
  std::vector<std::vector<Rational>> mu;
  NormKind norm = NormKind::Max;
};

/// μ(a)+μ(b) = μ(a∨b)+μ(a∧b) ("modular") and μ(a⊕b) = μ(a)+μ(b) for a⊥b
/// ("additive"). Throws InvalidArgument on inconsistent dimensions.
CheckResult modular_measure_check(const ModularMeasure& mu);

/// Minimal entourage of the uniformity generated by μ:
/// {(a,b) : μ(r) = 0 for every r ≤ aΔb}. Throws NotModular.
Congruence measure_uniformity(const ModularMeasure& mu);

/// d_λ(a,b) = max{ p_λ(μ(r) − μ(s)) : r,s ∈ [a∧b, a∨b] } for each
/// coordinate seminorm, followed by the chosen norm (dim + 1 entries), all
/// with k = m = 1. Throws NotModular.
std::vector<Pseudometric> weber_distance(const ModularMeasure& mu);

/// Builds η̃_λ(a) = d_λ(a,0) per coordinate, checks each is a submeasure and
/// that the intersection of their kernel uniformities equals the generated
/// uniformity, cross-checked against the zero set of the norm distance.
Report decompose_measure(const ModularMeasure& mu);

/// On an MV-algebra, confirms that a function satisfying the first three
/// submeasure conditions with k = 1 also satisfies join absorption.
/// Throws NotMV, or InvalidArgument when the first three conditions fail.
CheckResult mv_s123_check(const AlgebraPtr& alg, const std::vector<ExtendedValue>& values);

/// A basis (over Q) of the scalar modular measures on `alg`, from the exact
/// null space of the modularity and additivity equations.
std::vector<std::vector<Rational>> modular_measure_basis(const EffectAlgebra& alg);

}  // namespace dlat

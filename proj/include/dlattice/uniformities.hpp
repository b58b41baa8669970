#pragma once

#include <vector>

#include "dlattice/dfilters.hpp"
#include "dlattice/effect_algebra.hpp"
#include "dlattice/report.hpp"

namespace dlat {

/// A binary relation on the carrier as bit-packed rows.
class Relation {
public:
  explicit Relation(AlgebraPtr algebra);

  static Relation diagonal(AlgebraPtr algebra);
  static Relation all_pairs(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  bool contains(Element a, Element b) const { return rows_[static_cast<std::size_t>(a)].contains(b); }
  void insert(Element a, Element b) { rows_[static_cast<std::size_t>(a)].insert(b); }
  ElementSet row(Element a) const { return rows_[static_cast<std::size_t>(a)]; }
  std::size_t pair_count() const;

  bool subset_of(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  /// Smallest pair in this relation but not in `other`.
  std::optional<std::pair<Element, Element>> first_outside(const Relation& other) const;

  bool is_equivalence() const;

  bool operator==(const Relation& o) const { return algebra_ == o.algebra_ && rows_ == o.rows_; }

private:
  AlgebraPtr algebra_;
  std::vector<ElementSet> rows_;
};

enum class Combine { Join, Meet, Minus };

/// Image of U×V under the componentwise operation:
///   Join:  {(a₁∨b₁, a₂∨b₂)},  Meet: {(a₁∧b₁, a₂∧b₂)},
///   Minus: {(a₁⊖b₁, a₂⊖b₂) : b₁≤a₁, b₂≤a₂}
/// for (a₁,a₂) ∈ U, (b₁,b₂) ∈ V. Throws MixedAlgebras.
Relation relation_combine(const Relation& u, const Relation& v, Combine op);

/// An equivalence relation on the carrier, stored as a canonical block
/// labelling (restricted growth string: the first element is in block 0 and
/// each new block takes the next label). A finite D-uniformity is
/// identified with its minimal entourage, which is such a relation.
class Congruence {
public:
  /// Throws NotEquivalence.
  static Congruence from_relation(const Relation& r);
  /// Relabels `block_of` canonically.
  static Congruence from_blocks(AlgebraPtr algebra, const std::vector<int>& block_of);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<int>& block_of() const { return blocks_; }
  int block_count() const { return count_; }
  bool related(Element a, Element b) const { return blocks_[static_cast<std::size_t>(a)] == blocks_[static_cast<std::size_t>(b)]; }
  ElementSet class_of(Element a) const;
  Relation relation() const;

  bool operator==(const Congruence& o) const { return algebra_ == o.algebra_ && blocks_ == o.blocks_; }
  bool operator<(const Congruence& o) const { return blocks_ < o.blocks_; }

private:
  Congruence(AlgebraPtr algebra, std::vector<int> blocks, int count)
      : algebra_(std::move(algebra)), blocks_(std::move(blocks)), count_(count) {}

  AlgebraPtr algebra_;
  std::vector<int> blocks_;
  int count_ = 0;
};

/// The four entourage criteria for a D-uniformity at the minimal-entourage
/// level: E∨Δ ⊆ E, E∧Δ ⊆ E, E⊖Δ ⊆ E, Δ⊖E ⊆ E. Witness condition is one of
/// "join", "meet", "minus", "reflect" with the tuple (a₁, a₂, c).
CheckResult is_d_congruence(const EffectAlgebra& alg, const std::vector<int>& block_of);
/// Throws NotEquivalence if `e` is not an equivalence relation.
CheckResult is_d_congruence(const Relation& e);

enum class CongruenceMode { Brute, ViaFilters };

/// Default cap for the partition scan (Bell(10) = 115975 partitions).
inline constexpr int kPartitionCap = 10;

/// All D-congruences in canonical order. Brute scans every set partition
/// and keeps those passing `is_d_congruence`; ViaFilters maps every D-filter
/// through `congruence_from_filter`. Throws SizeCap for Brute above `cap`.
std::vector<Congruence> enumerate_d_congruences(const AlgebraPtr& alg, CongruenceMode mode,
                                                int cap = kPartitionCap);

/// {(a,b) : aΔb ∈ f}, without validating f.
Relation delta_relation(const AlgebraPtr& alg, ElementSet f);

/// The D-uniformity generated by a D-filter: its minimal entourage is
/// {(a,b) : aΔb ∈ F0}. Throws NotAGenerator.
Congruence congruence_from_filter(const DFilterGenerator& f);

/// The D-filter of neighbourhoods of 0: the class of zero. Throws
/// NotACongruence if `e` fails the entourage criteria.
DFilterGenerator filter_from_congruence(const Congruence& e);

struct AltEntourages {
  /// {(a,b) : ∃h,k ∈ F0, h⊥a, k⊥b, a⊕h = b⊕k}
  Relation sum_form;
  /// {(a,b) : ∃i,j ∈ F0, i≤a, j≤b, a⊖i = b⊖j}
  Relation difference_form;
  /// Both forms equal the minimal entourage of the generated uniformity.
  bool all_equal = false;
  /// The sum form with a⊕h = b⊖k, i.e. the condition read literally with a
  /// difference on the right.
  Relation sum_form_literal;
  bool literal_reading_differs = false;
};

/// Throws NotAGenerator.
AltEntourages alt_entourages(const DFilterGenerator& f);

/// Exhaustive check that filter/congruence maps are mutually inverse order
/// isomorphisms carrying meets and joins, against the brute-force partition
/// scan. Throws SizeCap above `partition_cap`.
Report verify_isomorphism(const AlgebraPtr& alg, int partition_cap = kPartitionCap);

/// For every D-filter: both alternative entourage forms coincide with the
/// generated minimal entourage.
Report verify_alternative_bases(const AlgebraPtr& alg, int cap = kMaxCarrier);

std::string format_partition(const Congruence& e);

}  // namespace dlat

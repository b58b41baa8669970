#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlattice/element_set.hpp"
#include "dlattice/errors.hpp"

namespace dlat {

class Report;

/// Partial-sum table: `table[a][b]` is the index of a⊕b or `kAbsent`.
using SumTable = std::vector<std::vector<Element>>;

class EffectAlgebra;
using AlgebraPtr = std::shared_ptr<const EffectAlgebra>;

/// A finite lattice-ordered effect algebra (D-lattice).
///
/// Instances are only produced by `build`, which validates the effect
/// algebra axioms, derives the order, and rejects tables whose order is not
/// a lattice. Everything is immutable afterwards: the order, the lattice
/// tables, the difference table and the orthocomplement are computed once
/// and frozen.
class EffectAlgebra {
public:
  /// Validates `table` and derives all structure.
  ///
  /// Throws `Error` with kind AxiomViolation (witness names E1..E4, the
  /// zero law or cancellation), NotAPartialOrder, NotALattice (witness is
  /// a pair without join or meet), SizeCap, or InvalidArgument for
  /// malformed input.
  static AlgebraPtr build(const SumTable& table, Element zero, Element one,
                          std::vector<std::string> labels = {});

  int size() const { return n_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  ElementSet carrier() const { return ElementSet::first_n(n_); }

  bool valid(Element a) const { return a >= 0 && a < n_; }

  /// a⊕b, or nullopt when a and b are not orthogonal.
  std::optional<Element> osum(Element a, Element b) const;
  /// c⊖a, defined iff a≤c.
  std::optional<Element> ominus(Element c, Element a) const;

  /// Unchecked table lookups returning `kAbsent` for undefined results.
  Element sum_raw(Element a, Element b) const { return sum_[idx(a, b)]; }
  Element minus_raw(Element c, Element a) const { return minus_[idx(c, a)]; }

  bool orthogonal(Element a, Element b) const { return sum_raw(a, b) != kAbsent; }
  bool leq(Element a, Element b) const { return up_[static_cast<std::size_t>(a)].contains(b); }

  Element join(Element a, Element b) const { return join_[idx(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[idx(a, b)]; }
  Element complement(Element a) const { return complement_[static_cast<std::size_t>(a)]; }

  /// (a∨b)⊖(a∧b); total on a D-lattice.
  Element symm_diff(Element a, Element b) const { return delta_[idx(a, b)]; }

  ElementSet up_set(Element a) const { return up_[static_cast<std::size_t>(a)]; }
  ElementSet down_set(Element a) const { return down_[static_cast<std::size_t>(a)]; }

  const std::string& label(Element a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The sum table in the input format (kAbsent for undefined).
  SumTable sum_table() const;

private:
  EffectAlgebra() = default;
  std::size_t idx(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  Element zero_ = 0;
  Element one_ = 0;
  std::vector<Element> sum_;
  std::vector<Element> minus_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> delta_;
  std::vector<Element> complement_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

/// Exhaustive check of the MV and orthomodular characterizations.
struct Classification {
  bool is_mv = false;
  bool is_oml = false;
  /// Smallest (a,b) with (a∨b)⊖b ≠ a⊖(a∧b), when not MV.
  std::optional<Witness> mv_witness;
  /// Smallest a with a′∧a ≠ 0, when not orthomodular.
  std::optional<Witness> oml_witness;
};

Classification classify(const EffectAlgebra& alg);

/// Checks the standard effect-algebra identities (ten difference/sum laws,
/// the invariance of the symmetric difference under translation and
/// reflection, the sum/difference duality, lattice laws and complement
/// involution) over every tuple satisfying their hypotheses.
Report verify_basic_identities(const AlgebraPtr& alg);

}  // namespace dlat

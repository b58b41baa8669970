#pragma once

#include <string>
#include <vector>

#include "dlattice/effect_algebra.hpp"

namespace dlat::catalog {

/// Default size cap for all constructors.
inline constexpr int kDefaultSizeCap = 64;

/// The MV-chain {0, 1/n, ..., 1}: i⊕j = i+j when i+j ≤ n.
AlgebraPtr mv_chain(int n);

/// Subsets of `atoms` atoms; a⊕b = a∪b for disjoint a, b.
AlgebraPtr boolean_algebra(int atoms, int size_cap = kDefaultSizeCap);

/// MOₙ: n four-element blocks {0, aᵢ, aᵢ′, 1} glued at 0 and 1.
/// Element layout: 0, 1, a₁, a₁′, a₂, a₂′, ...
AlgebraPtr mo(int blocks, int size_cap = kDefaultSizeCap);

/// Cartesian product with componentwise sums; (i,j) has index i*|B| + j.
AlgebraPtr product(const EffectAlgebra& a, const EffectAlgebra& b, int size_cap = kDefaultSizeCap);

/// Horizontal sum: both summands glued at 0 and 1, sums only inside a summand.
/// Layout: 0, 1, the proper elements of `a`, then those of `b`.
AlgebraPtr horizontal_sum(const EffectAlgebra& a, const EffectAlgebra& b, int size_cap = kDefaultSizeCap);

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

/// The fixture catalog in a fixed order, restricted to carriers of at most
/// `max_n` elements: MV-chains, Boolean algebras, MOₙ, and a selection of
/// products and horizontal sums.
std::vector<NamedAlgebra> standard(int max_n);

}  // namespace dlat::catalog

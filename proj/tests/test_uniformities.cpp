#include <gtest/gtest.h>

#include <set>

#include "dlattice/catalog.hpp"
#include "dlattice/uniformities.hpp"
#include "test_helpers.hpp"

using namespace dlat;
using testing_helpers::by_label;

namespace {

/// Direct reading of the uniformity axioms for the filter generated by a
/// single entourage R, plus the four compatibility conditions, each as a
/// literal image-inclusion over pairs.
bool relation_is_minimal_entourage(const EffectAlgebra& A, const std::vector<std::uint64_t>& rows) {
  const int n = A.size();
  auto has = [&](Element a, Element b) { return ((rows[static_cast<std::size_t>(a)] >> b) & 1ULL) != 0; };
  for (Element a = 0; a < n; ++a)
    if (!has(a, a)) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!has(a, b)) continue;
      if (!has(b, a)) return false;
      for (Element c = 0; c < n; ++c)
        if (has(b, c) && !has(a, c)) return false;
      for (Element d = 0; d < n; ++d) {
        if (!has(A.join(a, d), A.join(b, d))) return false;
        if (!has(A.meet(a, d), A.meet(b, d))) return false;
        if (A.leq(d, a) && A.leq(d, b) && !has(A.minus_raw(a, d), A.minus_raw(b, d))) return false;
        if (A.leq(a, d) && A.leq(b, d) && !has(A.minus_raw(d, a), A.minus_raw(d, b))) return false;
      }
    }
  return true;
}

std::vector<std::uint64_t> rows_of(const Relation& r) {
  std::vector<std::uint64_t> out;
  for (Element a = 0; a < r.algebra()->size(); ++a) out.push_back(r.row(a).bits());
  return out;
}

}  // namespace

TEST(Relations, CombineExample) {
  auto B2 = catalog::boolean_algebra(2);
  const Element a = by_label(*B2, "a");
  const Element b = by_label(*B2, "b");
  Relation u(B2);
  u.insert(0, a);
  const Relation joined = relation_combine(u, Relation::diagonal(B2), Combine::Join);
  EXPECT_EQ(joined.pair_count(), 4U);
  EXPECT_TRUE(joined.contains(0, a));
  EXPECT_TRUE(joined.contains(a, a));
  EXPECT_TRUE(joined.contains(b, 3));
  EXPECT_TRUE(joined.contains(3, 3));
  const Relation met = relation_combine(u, Relation::diagonal(B2), Combine::Meet);
  EXPECT_TRUE(met.contains(0, 0));
  EXPECT_TRUE(met.contains(0, a));
  EXPECT_EQ(met.pair_count(), 2U);
  const Relation minus = relation_combine(Relation::all_pairs(B2), Relation::diagonal(B2), Combine::Minus);
  EXPECT_TRUE(minus.contains(a, b));
  EXPECT_THROW(relation_combine(u, Relation::diagonal(catalog::boolean_algebra(2)), Combine::Join), Error);
}

TEST(Relations, EquivalenceAndCongruence) {
  auto B2 = catalog::boolean_algebra(2);
  // {{0,a},{b},{1}}
  EXPECT_FALSE(is_d_congruence(*B2, {0, 0, 1, 2}).ok());
  EXPECT_TRUE(is_d_congruence(*B2, {0, 0, 1, 1}).ok());
  EXPECT_TRUE(is_d_congruence(*B2, {0, 1, 0, 1}).ok());
  EXPECT_TRUE(is_d_congruence(*B2, {0, 1, 2, 3}).ok());
  EXPECT_TRUE(is_d_congruence(*B2, {0, 0, 0, 0}).ok());
  Relation r(B2);
  r.insert(0, 1);
  EXPECT_FALSE(r.is_equivalence());
  EXPECT_THROW(is_d_congruence(r), Error);
  EXPECT_THROW(Congruence::from_relation(r), Error);
  const auto c = Congruence::from_blocks(B2, {5, 5, 2, 2});
  EXPECT_EQ(c.block_of(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(c.block_count(), 2);
  EXPECT_EQ(format_partition(c), "{{0,a},{b,1}}");
}

TEST(Congruences, BruteCounts) {
  EXPECT_EQ(enumerate_d_congruences(catalog::mv_chain(2), CongruenceMode::Brute).size(), 2U);
  EXPECT_EQ(enumerate_d_congruences(catalog::boolean_algebra(2), CongruenceMode::Brute).size(), 4U);
  EXPECT_EQ(enumerate_d_congruences(catalog::mo(2), CongruenceMode::Brute).size(), 2U);
  EXPECT_THROW(enumerate_d_congruences(catalog::mv_chain(11), CongruenceMode::Brute), Error);
  EXPECT_NO_THROW(enumerate_d_congruences(catalog::mv_chain(11), CongruenceMode::ViaFilters));
}

TEST(Congruences, AgreeWithDirectUniformityAxioms) {
  for (const auto& [name, A] : catalog::standard(4)) {
    const int n = A->size();
    std::set<std::vector<std::uint64_t>> oracle;
    const std::uint64_t total = 1ULL << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) rows[static_cast<std::size_t>(a)] = (code >> (a * n)) & ((1ULL << n) - 1);
      if (relation_is_minimal_entourage(*A, rows)) oracle.insert(rows);
    }
    std::set<std::vector<std::uint64_t>> found;
    for (const auto& c : enumerate_d_congruences(A, CongruenceMode::Brute)) found.insert(rows_of(c.relation()));
    EXPECT_EQ(oracle, found) << name;
  }
}

TEST(Congruences, FilterMapsExamples) {
  auto B2 = catalog::boolean_algebra(2);
  const auto zero = DFilterGenerator::make(B2, ElementSet::singleton(0));
  const auto all = DFilterGenerator::make(B2, ElementSet::first_n(4));
  EXPECT_EQ(congruence_from_filter(zero).relation(), Relation::diagonal(B2));
  EXPECT_EQ(congruence_from_filter(all).relation(), Relation::all_pairs(B2));
  const auto fa = DFilterGenerator::make(B2, ElementSet(0b0011));
  const auto ea = congruence_from_filter(fa);
  EXPECT_EQ(format_partition(ea), "{{0,a},{b,1}}");
  EXPECT_EQ(filter_from_congruence(ea), fa);
  EXPECT_THROW(filter_from_congruence(Congruence::from_blocks(B2, {0, 0, 1, 2})), Error);
  EXPECT_THROW(congruence_from_filter(DFilterGenerator(B2, ElementSet(0b0111))), Error);
}

TEST(Congruences, ClassOfZeroIsTheFilter) {
  for (const auto& [name, A] : catalog::standard(24))
    for (const auto& f : enumerate_dfilters(A)) {
      const Congruence e = congruence_from_filter(f);
      EXPECT_EQ(e.class_of(A->zero()), f.members()) << name;
      EXPECT_TRUE(is_d_congruence(e.relation()).ok()) << name;
      // Δ-translation: a ~ b iff aΔb ~ 0.
      for (Element a = 0; a < A->size(); ++a)
        for (Element b = 0; b < A->size(); ++b) EXPECT_EQ(e.related(a, b), e.related(A->symm_diff(a, b), A->zero()));
    }
}

TEST(Congruences, MinimalEntourageIsStableUnderDifferenceWithDiagonal) {
  for (const auto& [name, A] : catalog::standard(16))
    for (const auto& f : enumerate_dfilters(A)) {
      const Relation e = congruence_from_filter(f).relation();
      const Relation diag = Relation::diagonal(A);
      EXPECT_EQ(relation_combine(e, diag, Combine::Minus), e) << name;
      EXPECT_TRUE(relation_combine(diag, e, Combine::Minus).subset_of(e)) << name;
      EXPECT_EQ(relation_combine(e, diag, Combine::Join), e) << name;
      EXPECT_EQ(relation_combine(e, diag, Combine::Meet), e) << name;
    }
}

TEST(Congruences, AlternativeForms) {
  auto B2 = catalog::boolean_algebra(2);
  int literal_differs = 0;
  for (const auto& f : enumerate_dfilters(B2)) {
    const AltEntourages alt = alt_entourages(f);
    EXPECT_TRUE(alt.all_equal);
    EXPECT_EQ(alt.sum_form, delta_relation(B2, f.members()));
    EXPECT_EQ(alt.difference_form, delta_relation(B2, f.members()));
    if (alt.literal_reading_differs) ++literal_differs;
  }
  EXPECT_EQ(literal_differs, 3);
  for (const auto& [name, A] : catalog::standard(12)) EXPECT_TRUE(verify_alternative_bases(A).passed()) << name;
}

TEST(Congruences, IsomorphismOnSmallCatalog) {
  for (const auto& [name, A] : catalog::standard(8)) {
    const Report r = verify_isomorphism(A);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_EQ(r.find_count("dfilters"), r.find_count("d_congruences")) << name;
  }
  EXPECT_THROW(verify_isomorphism(catalog::mv_chain(10), 10), Error);
}

TEST(Congruences, ViaFiltersMatchesBrute) {
  for (const auto& [name, A] : catalog::standard(9)) {
    auto brute = enumerate_d_congruences(A, CongruenceMode::Brute);
    auto via = enumerate_d_congruences(A, CongruenceMode::ViaFilters);
    std::sort(brute.begin(), brute.end());
    std::sort(via.begin(), via.end());
    EXPECT_EQ(brute, via) << name;
  }
}

#include <gtest/gtest.h>

#include "dlattice/catalog.hpp"
#include "dlattice/effect_algebra.hpp"
#include "dlattice/report.hpp"
#include "test_helpers.hpp"

using namespace dlat;
using testing_helpers::by_label;

namespace {

SumTable chain3_table() {
  // 0, h, 1 with h⊕h = 1.
  return {{0, 1, 2}, {1, 2, kAbsent}, {2, kAbsent, kAbsent}};
}

ErrorKind build_error(const SumTable& t, Element zero, Element one, std::optional<Witness>* witness = nullptr) {
  try {
    EffectAlgebra::build(t, zero, one);
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  ADD_FAILURE() << "build succeeded";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Build, TrivialAlgebra) {
  auto A = EffectAlgebra::build({{0}}, 0, 0);
  EXPECT_EQ(A->size(), 1);
  EXPECT_EQ(A->complement(0), 0);
  EXPECT_EQ(A->osum(0, 0), 0);
}

TEST(Build, ThreeChainWithSelfComplementedMiddle) {
  auto A = EffectAlgebra::build(chain3_table(), 0, 2);
  EXPECT_EQ(A->complement(1), 1);
  EXPECT_TRUE(A->leq(0, 1));
  EXPECT_TRUE(A->leq(1, 2));
  EXPECT_EQ(A->join(0, 1), 1);
}

TEST(Build, SumWithOneOffZeroIsE4Violation) {
  auto t = chain3_table();
  t[1][2] = 2;
  t[2][1] = 2;
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, 0, 2, &w), ErrorKind::AxiomViolation);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, "E4");
  EXPECT_EQ(w->tuple, (std::vector<Element>{1, 2}));
}

TEST(Build, AsymmetricTableIsE1Violation) {
  auto t = chain3_table();
  t[1][1] = kAbsent;
  t[0][1] = 1;
  t[1][0] = 2;
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, 0, 2, &w), ErrorKind::AxiomViolation);
  EXPECT_EQ(w->condition, "E1");
}

TEST(Build, MissingComplementIsE3Violation) {
  auto t = chain3_table();
  t[1][1] = kAbsent;
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, 0, 2, &w), ErrorKind::AxiomViolation);
  EXPECT_EQ(w->condition, "E3");
  EXPECT_EQ(w->tuple, (std::vector<Element>{1}));
}

TEST(Build, ZeroLawViolation) {
  auto t = chain3_table();
  t[0][1] = kAbsent;
  t[1][0] = kAbsent;
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, 0, 2, &w), ErrorKind::AxiomViolation);
  EXPECT_EQ(w->condition, "zero-law");
}

TEST(Build, NonAssociativeTableIsE2Violation) {
  // 0, x, y, 1 with x′ = y and the idempotent sum x⊕x = x: (x⊕x)⊕y = 1 but
  // x⊕(x⊕y) = x⊕1 is undefined.
  const SumTable t = {{0, 1, 2, 3}, {1, 1, 3, kAbsent}, {2, 3, kAbsent, kAbsent}, {3, kAbsent, kAbsent, kAbsent}};
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, 0, 3, &w), ErrorKind::AxiomViolation);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, "E2");
}

TEST(Build, NonLatticeOrthoalgebraIsRejected) {
  Element zero = 0;
  Element one = 0;
  std::vector<std::string> labels;
  const auto t = testing_helpers::wright_triangle_table(zero, one, labels);
  std::optional<Witness> w;
  EXPECT_EQ(build_error(t, zero, one, &w), ErrorKind::NotALattice);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->tuple.size(), 2U);
}

TEST(Build, MalformedShapesAreInvalidArguments) {
  EXPECT_EQ(build_error({{0, 1}, {1}}, 0, 1), ErrorKind::InvalidArgument);
  EXPECT_EQ(build_error({{0}}, 0, 3), ErrorKind::InvalidArgument);
  EXPECT_EQ(build_error({{0, 7}, {7, kAbsent}}, 0, 1), ErrorKind::InvalidArgument);
}

TEST(PartialOps, Examples) {
  auto C2 = catalog::mv_chain(2);
  const Element h = 1;
  EXPECT_EQ(C2->osum(h, h), C2->one());
  EXPECT_EQ(C2->osum(h, C2->one()), std::nullopt);
  EXPECT_EQ(C2->ominus(h, C2->one()), std::nullopt);
  for (const auto& [name, A] : catalog::standard(16)) {
    for (Element a = 0; a < A->size(); ++a) {
      EXPECT_EQ(A->osum(a, A->zero()), a) << name;
      EXPECT_EQ(A->ominus(A->one(), a), A->complement(a)) << name;
      EXPECT_EQ(A->ominus(a, a), A->zero()) << name;
      EXPECT_EQ(A->symm_diff(a, a), A->zero()) << name;
      EXPECT_EQ(A->symm_diff(a, A->zero()), a) << name;
    }
  }
  EXPECT_THROW(C2->osum(0, 5), Error);
}

TEST(PartialOps, DifferenceInvertsSum) {
  for (const auto& [name, A] : catalog::standard(16))
    for (Element a = 0; a < A->size(); ++a)
      for (Element c = 0; c < A->size(); ++c) {
        const auto d = A->ominus(c, a);
        EXPECT_EQ(d.has_value(), A->leq(a, c)) << name;
        if (d) {
          EXPECT_EQ(A->osum(a, *d), c) << name;
        }
      }
}

TEST(PartialOps, SymmetricDifferenceAcrossBlocks) {
  auto M = catalog::mo(2);
  const Element a1 = by_label(*M, "a1");
  const Element a2 = by_label(*M, "a2");
  ASSERT_NE(a1, kAbsent);
  ASSERT_NE(a2, kAbsent);
  EXPECT_EQ(M->symm_diff(a1, a2), M->one());
}

TEST(PartialOps, SumViaComplementDifference) {
  for (const auto& [name, A] : catalog::standard(32))
    for (Element a = 0; a < A->size(); ++a)
      for (Element b = 0; b < A->size(); ++b)
        if (A->orthogonal(a, b)) {
          const auto d = A->ominus(A->complement(a), b);
          ASSERT_TRUE(d) << name;
          EXPECT_EQ(A->sum_raw(a, b), A->complement(*d)) << name;
        }
}

TEST(Order, PartialOrderBoundsAndLatticeLaws) {
  for (const auto& [name, A] : catalog::standard(16)) {
    const int n = A->size();
    for (Element a = 0; a < n; ++a) {
      EXPECT_TRUE(A->leq(A->zero(), a));
      EXPECT_TRUE(A->leq(a, A->one()));
      EXPECT_EQ(A->complement(A->complement(a)), a);
      for (Element b = 0; b < n; ++b) {
        if (A->leq(a, b) && A->leq(b, a)) {
          EXPECT_EQ(a, b) << name;
        }
        // Join is the least upper bound by direct search.
        const Element j = A->join(a, b);
        EXPECT_TRUE(A->leq(a, j) && A->leq(b, j)) << name;
        for (Element u = 0; u < n; ++u)
          if (A->leq(a, u) && A->leq(b, u)) {
            EXPECT_TRUE(A->leq(j, u)) << name;
          }
        const Element m = A->meet(a, b);
        for (Element l = 0; l < n; ++l)
          if (A->leq(l, a) && A->leq(l, b)) {
            EXPECT_TRUE(A->leq(l, m)) << name;
          }
      }
    }
  }
}

TEST(Classify, Examples) {
  for (int n = 2; n <= 6; ++n) {
    const auto c = classify(*catalog::mv_chain(n));
    EXPECT_TRUE(c.is_mv);
    EXPECT_FALSE(c.is_oml);
    ASSERT_TRUE(c.oml_witness);
  }
  EXPECT_TRUE(classify(*catalog::mv_chain(1)).is_oml);
  for (int k = 0; k <= 4; ++k) {
    const auto c = classify(*catalog::boolean_algebra(k));
    EXPECT_TRUE(c.is_mv);
    EXPECT_TRUE(c.is_oml);
  }
  const auto m = classify(*catalog::mo(2));
  EXPECT_FALSE(m.is_mv);
  EXPECT_TRUE(m.is_oml);
  ASSERT_TRUE(m.mv_witness);
  EXPECT_EQ(m.mv_witness->condition, "mv-law");
}

TEST(Classify, MvWitnessViolatesTheLaw) {
  for (int blocks = 2; blocks <= 4; ++blocks) {
    auto M = catalog::mo(blocks);
    const auto c = classify(*M);
    ASSERT_TRUE(c.mv_witness);
    const Element a = c.mv_witness->tuple[0];
    const Element b = c.mv_witness->tuple[1];
    EXPECT_NE(M->minus_raw(M->join(a, b), b), M->minus_raw(a, M->meet(a, b)));
  }
}

TEST(Identities, HoldOnSpecExamples) {
  EXPECT_TRUE(verify_basic_identities(catalog::boolean_algebra(3)).passed());
  EXPECT_TRUE(verify_basic_identities(catalog::mv_chain(4)).passed());
  auto C2 = catalog::mv_chain(2);
  const Element h = 1;
  EXPECT_EQ(C2->ominus(C2->one(), *C2->ominus(C2->one(), h)), h);
}

TEST(Identities, EveryCheckExaminesCases) {
  const Report r = verify_basic_identities(catalog::boolean_algebra(3));
  ASSERT_FALSE(r.checks().empty());
  for (const auto& c : r.checks()) EXPECT_GT(c.cases, 0U) << c.name;
  EXPECT_NE(r.find("symm_diff_translation"), nullptr);
  EXPECT_NE(r.find("symm_diff_reflection"), nullptr);
}

TEST(Identities, SymmetricDifferenceByDirectFourTupleScan) {
  // Independent of the library's scan: the four-variable statement.
  for (const char* pick : {"mo(3)", "chain(2)*chain(2)", "hsum(chain(4),mo(2))"}) {
    AlgebraPtr A;
    for (auto& e : catalog::standard(16))
      if (e.name == pick) A = e.algebra;
    ASSERT_TRUE(A) << pick;
    const int n = A->size();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          for (Element d = 0; d < n; ++d) {
            if (!(A->leq(c, a) && A->leq(c, b) && A->leq(a, d) && A->leq(b, d))) continue;
            const Element lhs = A->symm_diff(A->minus_raw(a, c), A->minus_raw(b, c));
            const Element rhs = A->symm_diff(A->minus_raw(d, a), A->minus_raw(d, b));
            EXPECT_EQ(lhs, A->symm_diff(a, b)) << pick;
            EXPECT_EQ(rhs, A->symm_diff(a, b)) << pick;
          }
  }
}

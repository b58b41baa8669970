#include <gtest/gtest.h>

#include <set>

#include "dlattice/catalog.hpp"
#include "dlattice/json_io.hpp"
#include "test_helpers.hpp"

using namespace dlat;
using testing_helpers::isomorphic;

TEST(Catalog, ChainBasics) {
  auto C1 = catalog::mv_chain(1);
  EXPECT_TRUE(isomorphic(*C1, *catalog::boolean_algebra(1)));
  auto C2 = catalog::mv_chain(2);
  EXPECT_EQ(C2->size(), 3);
  EXPECT_EQ(C2->sum_raw(1, 1), C2->one());
  EXPECT_FALSE(classify(*catalog::mv_chain(3)).is_oml);
  for (int n = 1; n <= 8; ++n) {
    auto C = catalog::mv_chain(n);
    for (Element i = 0; i <= n; ++i)
      for (Element j = 0; j <= n; ++j) EXPECT_EQ(C->orthogonal(i, j), i + j <= n);
  }
}

TEST(Catalog, BooleanBasics) {
  EXPECT_EQ(catalog::boolean_algebra(0)->size(), 1);
  auto B2 = catalog::boolean_algebra(2);
  EXPECT_EQ(B2->size(), 4);
  EXPECT_EQ(B2->complement(1), 2);
  EXPECT_EQ(B2->labels(), (std::vector<std::string>{"0", "a", "b", "1"}));
  EXPECT_TRUE(verify_basic_identities(B2).passed());
  EXPECT_THROW(catalog::boolean_algebra(7), Error);
  try {
    catalog::boolean_algebra(7);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}

TEST(Catalog, MoBasics) {
  EXPECT_TRUE(isomorphic(*catalog::mo(1), *catalog::boolean_algebra(2)));
  auto M2 = catalog::mo(2);
  const auto c = classify(*M2);
  EXPECT_FALSE(c.is_mv);
  EXPECT_TRUE(c.is_oml);
  EXPECT_EQ(M2->symm_diff(2, 4), M2->one());
  EXPECT_THROW(catalog::mo(0), Error);
}

TEST(Catalog, Combinators) {
  auto C1 = catalog::mv_chain(1);
  EXPECT_TRUE(isomorphic(*catalog::product(*C1, *C1), *catalog::boolean_algebra(2)));
  auto B2 = catalog::boolean_algebra(2);
  EXPECT_TRUE(isomorphic(*catalog::horizontal_sum(*B2, *B2), *catalog::mo(2)));
  auto trivial = catalog::boolean_algebra(0);
  for (auto A : {catalog::mv_chain(3), catalog::mo(2), catalog::boolean_algebra(2)}) {
    EXPECT_TRUE(isomorphic(*catalog::product(*A, *trivial), *A));
    EXPECT_TRUE(isomorphic(*catalog::product(*trivial, *A), *A));
  }
  EXPECT_THROW(catalog::horizontal_sum(*trivial, *B2), Error);
  EXPECT_THROW(catalog::product(*catalog::boolean_algebra(4), *catalog::boolean_algebra(3)), Error);
}

TEST(Catalog, ProductOfChainsIsMv) {
  auto P = catalog::product(*catalog::mv_chain(2), *catalog::mv_chain(3));
  EXPECT_TRUE(classify(*P).is_mv);
  EXPECT_EQ(P->size(), 12);
}

TEST(Catalog, StandardCatalogValidAndFiltered) {
  const auto all = catalog::standard(64);
  std::set<std::string> names;
  for (const auto& [name, A] : all) {
    EXPECT_TRUE(names.insert(name).second) << name;
    EXPECT_LE(A->size(), 64);
  }
  for (const auto& [name, A] : catalog::standard(10)) EXPECT_LE(A->size(), 10) << name;
  EXPECT_TRUE(names.count("chain(16)"));
  EXPECT_TRUE(names.count("boolean(5)"));
  EXPECT_TRUE(names.count("mo(7)"));
}

TEST(Catalog, EveryEntryPassesIdentities) {
  for (const auto& [name, A] : catalog::standard(32)) EXPECT_TRUE(verify_basic_identities(A).passed()) << name;
}

TEST(Catalog, MoFailsMvLawWithWitness) {
  for (int n = 2; n <= 7; ++n) {
    const auto c = classify(*catalog::mo(n));
    EXPECT_FALSE(c.is_mv);
    ASSERT_TRUE(c.mv_witness);
    EXPECT_EQ(c.mv_witness->tuple.size(), 2U);
  }
}

TEST(Json, AlgebraRoundTrip) {
  for (const auto& [name, A] : catalog::standard(16)) {
    const auto j = json::algebra_to_json(*A);
    auto B = json::algebra_from_json(json::parse(j.dump()));
    EXPECT_EQ(B->sum_table(), A->sum_table()) << name;
    EXPECT_EQ(B->labels(), A->labels()) << name;
    EXPECT_EQ(B->zero(), A->zero());
    EXPECT_EQ(B->one(), A->one());
  }
}

TEST(Json, NullMarksUndefinedSums) {
  const auto j = json::algebra_to_json(*catalog::mv_chain(2));
  EXPECT_TRUE(j["sum"][1][2].is_null());
  EXPECT_EQ(j["sum"][1][1], 2);
  EXPECT_EQ(j["n"], 3);
}

TEST(Json, MalformedInputIsFormatError) {
  auto kind_of = [](const std::string& text) {
    try {
      json::algebra_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of("{"), ErrorKind::Format);
  EXPECT_EQ(kind_of(R"({"n":2,"zero":0,"one":1})"), ErrorKind::Format);
  EXPECT_EQ(kind_of(R"({"n":2,"zero":0,"one":1,"sum":[[0,1]]})"), ErrorKind::Format);
  EXPECT_EQ(kind_of(R"({"n":2,"zero":0,"one":1,"sum":[[0,1],[1,"x"]]})"), ErrorKind::Format);
  EXPECT_EQ(kind_of(R"({"n":2,"zero":0,"one":1,"sum":[[0,1],[1,1]]})"), ErrorKind::AxiomViolation);
}

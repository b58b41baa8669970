#include <gtest/gtest.h>

#include "dlattice/catalog.hpp"
#include "dlattice/corpus.hpp"
#include "dlattice/submeasures.hpp"
#include "test_helpers.hpp"

using namespace dlat;
using testing_helpers::by_label;

namespace {

std::vector<ExtendedValue> values(std::initializer_list<long long> xs) {
  std::vector<ExtendedValue> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

ModularMeasure scalar_measure(const AlgebraPtr& A, std::initializer_list<long long> xs) {
  ModularMeasure mu;
  mu.algebra = A;
  mu.dim = 1;
  for (long long x : xs) mu.mu.push_back({Rational(x)});
  return mu;
}

Pseudometric discrete_metric(const AlgebraPtr& A) {
  Pseudometric d;
  d.algebra = A;
  const int n = A->size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) d.d.emplace_back(a == b ? 0 : 1);
  return d;
}

/// sup{|μ_λ(r) − μ_λ(s)| : r, s ∈ [a∧b, a∨b]} by enumerating the interval.
Rational interval_spread(const ModularMeasure& mu, int coord, Element a, Element b) {
  const EffectAlgebra& A = *mu.algebra;
  const Element lo = A.meet(a, b);
  const Element hi = A.join(a, b);
  Rational best = 0;
  for (Element r = 0; r < A.size(); ++r)
    for (Element s = 0; s < A.size(); ++s) {
      if (!(A.leq(lo, r) && A.leq(r, hi) && A.leq(lo, s) && A.leq(s, hi))) continue;
      const Rational diff = abs(mu.mu[static_cast<std::size_t>(r)][static_cast<std::size_t>(coord)] -
                                mu.mu[static_cast<std::size_t>(s)][static_cast<std::size_t>(coord)]);
      if (diff > best) best = diff;
    }
  return best;
}

}  // namespace

TEST(ExtendedValues, ArithmeticAndOrder) {
  const ExtendedValue inf = ExtendedValue::infinity();
  EXPECT_TRUE((inf + ExtendedValue(3)).is_infinite());
  EXPECT_TRUE(inf.scaled(2).is_infinite());
  EXPECT_EQ(ExtendedValue(3).scaled(Rational(1, 3)), ExtendedValue(1));
  EXPECT_LT(ExtendedValue(1000000), inf);
  EXPECT_FALSE(inf < inf);
  EXPECT_THROW(ExtendedValue(-1), Error);
  EXPECT_TRUE(eps_close(ExtendedValue(1), ExtendedValue(Rational(3, 2)), 1));
  EXPECT_FALSE(eps_close(ExtendedValue(1), ExtendedValue(2), 1));
  EXPECT_TRUE(eps_close(inf, inf, Rational(1, 1000)));
  EXPECT_FALSE(eps_close(inf, ExtendedValue(5), 1000));
  EXPECT_TRUE(close_for_all_eps(ExtendedValue(2), ExtendedValue(2)));
  EXPECT_FALSE(close_for_all_eps(ExtendedValue(2), inf));
  EXPECT_EQ(format_extended(inf), "inf");
  EXPECT_EQ(format_extended(ExtendedValue(Rational(6, 4))), "3/2");
}

TEST(ExtendedValues, Parsing) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-2.5"), Rational(-5, 2));
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "3/", "/4"}) EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Submeasures, Examples) {
  auto C2 = catalog::mv_chain(2);
  EXPECT_TRUE(is_k_submeasure(*C2, values({0, 1, 1}), 1).ok());
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_k_submeasure(*C2, values({0, 0, 0}), k).ok());
  EXPECT_EQ(is_k_submeasure(*C2, values({1, 1, 1}), 1).witness->condition, "null_at_zero");
  EXPECT_EQ(is_k_submeasure(*C2, values({0, 2, 1}), 1).witness->condition, "monotone");
  const auto sub = is_k_submeasure(*C2, values({0, 1, 3}), 1);
  EXPECT_EQ(sub.witness->condition, "k_subadditive");
  EXPECT_EQ(sub.witness->tuple, (std::vector<Element>{1, 1}));
  EXPECT_TRUE(is_k_submeasure(*C2, values({0, 1, 3}), 2).ok());
}

TEST(Submeasures, JoinAbsorptionNeedsMvOutsideMv) {
  // On mo(2): monotone and subadditive, but (a1∨a2)⊖a2 = a2′ has η = 1 > η(a1) = 0.
  auto M2 = catalog::mo(2);
  std::vector<ExtendedValue> eta(6, ExtendedValue(1));
  eta[static_cast<std::size_t>(by_label(*M2, "0"))] = 0;
  eta[static_cast<std::size_t>(by_label(*M2, "a1"))] = 0;
  EXPECT_TRUE(check_without_absorption(*M2, eta, 1).ok());
  const auto r = is_k_submeasure(*M2, eta, 1);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.witness->condition, "join_absorption");
  EXPECT_THROW(mv_s123_check(M2, eta), Error);
}

TEST(Submeasures, KernelUniformityExamples) {
  auto B2 = catalog::boolean_algebra(2);
  EXPECT_EQ(kernel_uniformity({B2, values({0, 0, 0, 0}), 1}).relation(), Relation::all_pairs(B2));
  EXPECT_EQ(kernel_uniformity({B2, values({0, 1, 2, 3}), 1}).relation(), Relation::diagonal(B2));
  EXPECT_EQ(format_partition(kernel_uniformity({B2, values({0, 0, 1, 1}), 1})), "{{0,a},{b,1}}");
  EXPECT_THROW(kernel_uniformity({B2, values({0, 2, 1, 1}), 1}), Error);
}

TEST(Submeasures, CheckWeakestExamples) {
  auto B2 = catalog::boolean_algebra(2);
  const Report zero = check_weakest({B2, values({0, 0, 0, 0}), 1});
  EXPECT_TRUE(zero.passed());
  EXPECT_EQ(zero.find_count("continuous_congruences"), 4);

  const Report injective = check_weakest({B2, values({0, 1, 2, 3}), 1});
  EXPECT_TRUE(injective.passed());
  EXPECT_EQ(injective.find_count("continuous_congruences"), 1);

  std::vector<ExtendedValue> with_inf = values({0, 0, 1, 1});
  with_inf[2] = ExtendedValue::infinity();
  with_inf[3] = ExtendedValue::infinity();
  const KSubmeasure eta{B2, with_inf, 1};
  ASSERT_TRUE(is_k_submeasure(eta).ok());
  const Report r = check_weakest(eta);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find_count("continuous_congruences"), 2);
  // The trivial congruence puts a finite value next to +∞.
  const auto all = Congruence::from_blocks(B2, {0, 0, 0, 0});
  const auto rejected = uniformly_continuous(eta, all);
  ASSERT_FALSE(rejected.ok());
  EXPECT_EQ(rejected.witness->condition, "class_constant");
}

TEST(Submeasures, CanonicalIndicator) {
  auto B2 = catalog::boolean_algebra(2);
  const auto fa = DFilterGenerator::make(B2, ElementSet(0b0011));
  const KSubmeasure eta = canonical_indicator(fa);
  EXPECT_EQ(eta.values, values({0, 0, 1, 1}));
  EXPECT_EQ(eta.k, 1);
  EXPECT_EQ(kernel_uniformity(eta), congruence_from_filter(fa));
  EXPECT_THROW(canonical_indicator(DFilterGenerator(B2, ElementSet(0b0111))), Error);
  for (const auto& [name, A] : catalog::standard(16))
    for (const auto& f : enumerate_dfilters(A)) {
      const KSubmeasure ind = canonical_indicator(f);
      EXPECT_TRUE(is_k_submeasure(ind).ok()) << name;
      EXPECT_EQ(kernel_uniformity(ind), congruence_from_filter(f)) << name;
    }
}

TEST(Pseudometrics, DiscreteMetric) {
  auto B2 = catalog::boolean_algebra(2);
  const Pseudometric d = discrete_metric(B2);
  EXPECT_TRUE(check_pseudometric(d).ok());
  const auto out = submeasure_from_pseudometric(d);
  EXPECT_EQ(out.eta.values, values({0, 1, 1, 1}));
  EXPECT_TRUE(out.uniformities_equal);
  EXPECT_EQ(kernel_uniformity(out.eta).relation(), Relation::diagonal(B2));
}

TEST(Pseudometrics, ZeroMetricAndViolations) {
  auto C2 = catalog::mv_chain(2);
  Pseudometric zero{C2, std::vector<Rational>(9, Rational(0)), 1, 1};
  const auto out = submeasure_from_pseudometric(zero);
  EXPECT_EQ(out.eta.values, values({0, 0, 0}));
  EXPECT_TRUE(out.uniformities_equal);

  Pseudometric asym = discrete_metric(C2);
  asym.d[1] = 2;
  EXPECT_EQ(check_pseudometric(asym).witness->condition, "symmetric");
  EXPECT_THROW(submeasure_from_pseudometric(asym), Error);

  // |i − j| on chain(2) with d(0,1)=d(1,2)=1, d(0,2)=3 breaks the triangle.
  Pseudometric tri = discrete_metric(C2);
  tri.d[2] = 3;
  tri.d[6] = 3;
  EXPECT_EQ(check_pseudometric(tri).witness->condition, "triangle");
}

TEST(Measures, ModularCheckExamples) {
  auto B2 = catalog::boolean_algebra(2);
  EXPECT_TRUE(modular_measure_check(scalar_measure(B2, {0, 0, 0, 0})).ok());
  EXPECT_TRUE(modular_measure_check(scalar_measure(B2, {0, 1, 2, 3})).ok());
  const auto r = modular_measure_check(scalar_measure(B2, {0, 1, 2, 5}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.witness->condition, "additive");
  EXPECT_EQ(r.witness->tuple, (std::vector<Element>{by_label(*B2, "a"), by_label(*B2, "b")}));
  ModularMeasure ragged = scalar_measure(B2, {0, 1, 2, 3});
  ragged.mu[2].push_back(1);
  EXPECT_THROW(modular_measure_check(ragged), Error);
}

TEST(Measures, UniformityExamples) {
  auto B2 = catalog::boolean_algebra(2);
  EXPECT_EQ(measure_uniformity(scalar_measure(B2, {0, 0, 0, 0})).relation(), Relation::all_pairs(B2));
  EXPECT_EQ(measure_uniformity(scalar_measure(B2, {0, 1, 2, 3})).relation(), Relation::diagonal(B2));
  EXPECT_EQ(format_partition(measure_uniformity(scalar_measure(B2, {0, 0, 3, 3}))), "{{0,a},{b,1}}");
  EXPECT_THROW(measure_uniformity(scalar_measure(B2, {0, 1, 2, 5})), Error);
  // A signed measure whose kernel is not down-closed: μ(a) = 1, μ(b) = -1.
  EXPECT_EQ(measure_uniformity(scalar_measure(B2, {0, 1, -1, 0})).relation(), Relation::diagonal(B2));
}

TEST(Measures, WeberDistanceExamples) {
  auto B2 = catalog::boolean_algebra(2);
  const Element a = by_label(*B2, "a");
  const Element b = by_label(*B2, "b");
  const auto ds = weber_distance(scalar_measure(B2, {0, 1, 2, 3}));
  ASSERT_EQ(ds.size(), 2U);
  const Pseudometric& d = ds[0];
  EXPECT_EQ(d(0, 3), 3);
  EXPECT_EQ(d(a, b), 3);
  EXPECT_EQ(d(0, a), 1);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(d(x, x), 0);
  for (const auto& z : weber_distance(scalar_measure(B2, {0, 0, 0, 0})))
    for (const auto& v : z.d) EXPECT_EQ(v, 0);
}

TEST(Measures, WeberDistanceMatchesIntervalEnumeration) {
  for (const auto& [name, A] : catalog::standard(12)) {
    const auto corpus = corpus::modular_measures(A, 6, 7);
    for (const auto& mu : corpus) {
      const auto ds = weber_distance(mu);
      ASSERT_EQ(ds.size(), static_cast<std::size_t>(mu.dim + 1));
      for (Element x = 0; x < A->size(); ++x)
        for (Element y = 0; y < A->size(); ++y) {
          Rational norm = 0;
          for (int c = 0; c < mu.dim; ++c) {
            const Rational s = interval_spread(mu, c, x, y);
            EXPECT_EQ(ds[static_cast<std::size_t>(c)](x, y), s) << name;
            if (mu.norm == NormKind::Max) {
              if (s > norm) norm = s;
            }
          }
          // The sum norm of the difference vector, maximised over the interval.
          if (mu.norm == NormKind::Sum) {
            const EffectAlgebra& L = *A;
            const Element lo = L.meet(x, y);
            const Element hi = L.join(x, y);
            for (Element r = 0; r < L.size(); ++r)
              for (Element s = 0; s < L.size(); ++s) {
                if (!(L.leq(lo, r) && L.leq(r, hi) && L.leq(lo, s) && L.leq(s, hi))) continue;
                Rational total = 0;
                for (int c = 0; c < mu.dim; ++c)
                  total += abs(mu.mu[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                               mu.mu[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)]);
                if (total > norm) norm = total;
              }
          }
          EXPECT_EQ(ds.back()(x, y), norm) << name;
        }
      for (const auto& d : ds) {
        EXPECT_TRUE(check_pseudometric(d).ok()) << name;
        EXPECT_TRUE(check_join_contraction(d).ok()) << name;
      }
    }
  }
}

TEST(Measures, ThreeRoutesToTheGeneratedUniformityAgree) {
  for (const auto& [name, A] : catalog::standard(16))
    for (const auto& mu : corpus::modular_measures(A, 5, 11)) {
      const Relation gen = measure_uniformity(mu).relation();
      EXPECT_EQ(zero_distance_relation(weber_distance(mu).back()), gen) << name;
      EXPECT_TRUE(decompose_measure(mu).passed()) << name;
    }
}

TEST(Measures, DecomposeExamples) {
  auto B2 = catalog::boolean_algebra(2);
  const Report r = decompose_measure(scalar_measure(B2, {0, 0, 3, 3}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find_count("generated_classes"), 2);
  const Report zero = decompose_measure(scalar_measure(B2, {0, 0, 0, 0}));
  EXPECT_TRUE(zero.passed());
  EXPECT_EQ(zero.find_count("generated_classes"), 1);
}

TEST(Measures, TwoDimensionalMeasureIsStrictlyFinerThanEachCoordinate) {
  // Coordinates count the atoms a and b respectively; each vanishes on a
  // different ideal.
  auto B3 = catalog::boolean_algebra(3);
  ModularMeasure mu;
  mu.algebra = B3;
  mu.dim = 2;
  for (Element x = 0; x < 8; ++x) mu.mu.push_back({Rational(x & 1), Rational((x >> 1) & 1)});
  ASSERT_TRUE(modular_measure_check(mu).ok());
  const Report r = decompose_measure(mu);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find_count("strictly_finer_than_every_factor"), 1);
  EXPECT_EQ(r.find_count("factors_strictly_coarser"), 2);
  EXPECT_EQ(measure_uniformity(mu).block_count(), 4);
}

TEST(Measures, BasisDimensions) {
  // Additive measures on a Boolean algebra are free on the atoms; MO(n)
  // measures are fixed by μ(1) once modularity links every block.
  EXPECT_EQ(modular_measure_basis(*catalog::boolean_algebra(3)).size(), 3U);
  EXPECT_EQ(modular_measure_basis(*catalog::mv_chain(5)).size(), 1U);
  EXPECT_EQ(modular_measure_basis(*catalog::mo(2)).size(), 1U);
  EXPECT_EQ(modular_measure_basis(*catalog::boolean_algebra(0)).size(), 0U);
  for (const auto& [name, A] : catalog::standard(16))
    for (const auto& v : modular_measure_basis(*A)) {
      ModularMeasure mu;
      mu.algebra = A;
      for (const auto& x : v) mu.mu.push_back({x});
      EXPECT_TRUE(modular_measure_check(mu).ok()) << name;
    }
}

TEST(MvRemark, Examples) {
  auto C3 = catalog::mv_chain(3);
  EXPECT_TRUE(mv_s123_check(C3, values({0, 1, 2, 3})).ok());
  EXPECT_TRUE(mv_s123_check(catalog::mv_chain(2), values({0, 1, 1})).ok());
  for (const auto& [name, A] : catalog::standard(16))
    if (classify(*A).is_mv) {
      EXPECT_TRUE(mv_s123_check(A, std::vector<ExtendedValue>(static_cast<std::size_t>(A->size()))).ok()) << name;
    }
  EXPECT_THROW(mv_s123_check(C3, values({0, 2, 1, 3})), Error);
  EXPECT_THROW(mv_s123_check(catalog::mo(2), values({0, 1, 1, 1, 1, 1})), Error);
}

TEST(Corpus, SizesAndDeterminism) {
  for (const auto& [name, A] : catalog::standard(12)) {
    const auto s1 = corpus::submeasures(A, 100, 5);
    const auto s2 = corpus::submeasures(A, 100, 5);
    EXPECT_GE(s1.size(), 100U) << name;
    ASSERT_EQ(s1.size(), s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
      EXPECT_EQ(s1[i].values, s2[i].values);
      EXPECT_TRUE(is_k_submeasure(s1[i]).ok()) << name << " #" << i;
    }
    const auto m = corpus::modular_measures(A, 20, 5);
    EXPECT_EQ(m.size(), 20U);
    for (const auto& mu : m) EXPECT_TRUE(modular_measure_check(mu).ok()) << name;
    if (classify(*A).is_mv) {
      for (const auto& f : corpus::subadditive_functions(A, 100, 5))
        EXPECT_TRUE(check_without_absorption(*A, f, 1).ok()) << name;
    }
  }
}

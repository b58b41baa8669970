#include "dlattice/corpus.hpp"

#include <algorithm>

namespace dlat::corpus {

namespace {

using Values = std::vector<ExtendedValue>;

Rational random_positive(Rng& rng, long long lo_quarters, long long hi_quarters) {
  return Rational(rng.between(lo_quarters, hi_quarters), 4);
}

Values random_raw(const EffectAlgebra& A, Rng& rng) {
  Values v(static_cast<std::size_t>(A.size()));
  for (Element a = 0; a < A.size(); ++a) {
    if (a == A.zero() || rng.below(3) == 0) continue;
    v[static_cast<std::size_t>(a)] = random_positive(rng, 1, 16);
  }
  return v;
}

/// η(a) = max{v(b) : b ≤ a}.
Values raise_to_monotone(const EffectAlgebra& A, const Values& v) {
  Values out(v.size());
  for (Element a = 0; a < A.size(); ++a)
    A.down_set(a).for_each([&](Element b) {
      if (out[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)])
        out[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(b)];
    });
  return out;
}

/// Lowers values until η(x) ≤ η(y) for x ≤ y and η(a⊕b) ≤ η(a)+η(b).
Values lower_to_subadditive(const EffectAlgebra& A, Values v) {
  const int n = A.size();
  v[static_cast<std::size_t>(A.zero())] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        auto& target = v[static_cast<std::size_t>(a)];
        if (A.leq(a, b) && v[static_cast<std::size_t>(b)] < target) {
          target = v[static_cast<std::size_t>(b)];
          changed = true;
        }
        if (A.orthogonal(a, b)) {
          auto& s = v[static_cast<std::size_t>(A.sum_raw(a, b))];
          ExtendedValue bound = v[static_cast<std::size_t>(a)] + v[static_cast<std::size_t>(b)];
          if (bound < s) {
            s = bound;
            changed = true;
          }
        }
      }
  }
  return v;
}

Values indicator(const EffectAlgebra& A, ElementSet kernel, const ExtendedValue& off) {
  Values v(static_cast<std::size_t>(A.size()));
  for (Element a = 0; a < A.size(); ++a)
    if (!kernel.contains(a)) v[static_cast<std::size_t>(a)] = off;
  return v;
}

Values pointwise(const Values& x, const Values& y, bool take_max) {
  Values out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = take_max ? std::max(x[i], y[i], [](const auto& p, const auto& q) { return p < q; }) : x[i] + y[i];
  return out;
}

}  // namespace

const std::vector<Rational>& k_values() {
  static const std::vector<Rational> ks{Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  return ks;
}

std::vector<ModularMeasure> modular_measures(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const auto basis = modular_measure_basis(*alg);
  const auto n = static_cast<std::size_t>(alg->size());
  std::vector<ModularMeasure> out;
  out.push_back(ModularMeasure{alg, 1, std::vector<std::vector<Rational>>(n, std::vector<Rational>(1)), NormKind::Max});
  while (out.size() < count) {
    const int dim = static_cast<int>(1 + rng.below(3));
    ModularMeasure mu{alg, dim, std::vector<std::vector<Rational>>(n, std::vector<Rational>(static_cast<std::size_t>(dim))),
                      out.size() % 2 == 0 ? NormKind::Max : NormKind::Sum};
    for (int c = 0; c < dim; ++c)
      for (const auto& b : basis) {
        const long long coef = rng.between(-3, 3);
        if (coef == 0) continue;
        for (std::size_t a = 0; a < n; ++a) mu.mu[a][static_cast<std::size_t>(c)] += coef * b[a];
      }
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<KSubmeasure> submeasures(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed) {
  const EffectAlgebra& A = *alg;
  Rng rng(seed);
  const auto filters = enumerate_dfilters(alg);
  const auto& ks = k_values();
  std::vector<KSubmeasure> out;
  auto keep = [&](Values v, const Rational& k) {
    if (is_k_submeasure(A, v, k).ok()) out.push_back(KSubmeasure{alg, std::move(v), k});
  };
  auto pick_filter = [&]() { return filters[rng.below(filters.size())].members(); };
  auto pick_k = [&]() { return ks[rng.below(ks.size())]; };

  out.push_back(KSubmeasure{alg, Values(static_cast<std::size_t>(A.size())), 1});
  for (const auto& f : filters) {
    keep(indicator(A, f.members(), 1), 1);
    keep(indicator(A, f.members(), ExtendedValue::infinity()), pick_k());
  }
  for (const auto& mu : modular_measures(alg, 4, seed ^ 0x5eedULL)) {
    const auto d = weber_distance(mu);
    for (const auto& dist : d) {
      Values v;
      for (Element a = 0; a < A.size(); ++a) v.emplace_back(dist(a, A.zero()));
      keep(std::move(v), 1);
    }
  }

  const std::size_t attempts = 40 * count;
  for (std::size_t i = 0; i < attempts && out.size() < count + count / 2; ++i) {
    switch (i % 5) {
      case 0:  // scaled indicators combined by sum or max
        keep(pointwise(indicator(A, pick_filter(), random_positive(rng, 1, 12)),
                       indicator(A, pick_filter(), random_positive(rng, 1, 12)), rng.coin()),
             1);
        break;
      case 1:  // random monotone assignment with a random constant
        keep(raise_to_monotone(A, random_raw(A, rng)), pick_k());
        break;
      case 2: {  // random values off a D-filter
        const ElementSet f = pick_filter();
        Values v(static_cast<std::size_t>(A.size()));
        for (Element a = 0; a < A.size(); ++a)
          if (!f.contains(a)) v[static_cast<std::size_t>(a)] = random_positive(rng, 4, 8);
        keep(raise_to_monotone(A, v), pick_k());
        break;
      }
      case 3:  // lowered to monotone and subadditive, then filtered by the absorption condition
        keep(lower_to_subadditive(A, random_raw(A, rng)), 1);
        break;
      default:  // infinite off one filter, finite off a larger one
        keep(pointwise(indicator(A, pick_filter(), ExtendedValue::infinity()),
                       indicator(A, pick_filter(), random_positive(rng, 1, 8)), rng.coin()),
             pick_k());
        break;
    }
  }
  // Always-valid scaled indicators top up small algebras.
  for (std::size_t i = 0; out.size() < count; ++i)
    keep(indicator(A, filters[i % filters.size()].members(), random_positive(rng, 1, 12)), pick_k());
  return out;
}

std::vector<std::vector<ExtendedValue>> subadditive_functions(const AlgebraPtr& alg, std::size_t count,
                                                              std::uint64_t seed) {
  const EffectAlgebra& A = *alg;
  Rng rng(seed);
  std::vector<Values> out;
  auto keep = [&](Values v) {
    if (check_without_absorption(A, v, 1).ok()) out.push_back(std::move(v));
  };
  keep(Values(static_cast<std::size_t>(A.size())));
  for (std::size_t i = 0; i < 40 * count && out.size() < count; ++i) {
    if (i % 2 == 0)
      keep(lower_to_subadditive(A, raise_to_monotone(A, random_raw(A, rng))));
    else
      keep(raise_to_monotone(A, random_raw(A, rng)));
  }
  for (const auto& f : enumerate_dfilters(alg)) {
    if (out.size() >= count) break;
    keep(indicator(A, f.members(), random_positive(rng, 1, 12)));
  }
  return out;
}

}  // namespace dlat::corpus

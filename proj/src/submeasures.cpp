#include "dlattice/submeasures.hpp"

#include <algorithm>
#include <limits>

namespace dlat {

namespace {

using Values = std::vector<ExtendedValue>;

void require_shape(const EffectAlgebra& A, const Values& values, const Rational& k) {
  if (static_cast<int>(values.size()) != A.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(A.size()) + " values, got " +
                                                std::to_string(values.size()));
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "constant k must be at least 1");
}

/// Conditions in order; `with_absorption` toggles the last one.
CheckResult submeasure_conditions(const EffectAlgebra& A, const Values& eta, const Rational& k,
                                  bool with_absorption) {
  const int n = A.size();
  auto at = [&](Element a) -> const ExtendedValue& { return eta[static_cast<std::size_t>(a)]; };
  if (!at(A.zero()).is_zero()) return CheckResult::fail("null_at_zero", {A.zero()});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (A.leq(a, b) && at(b) < at(a)) return CheckResult::fail("monotone", {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (A.orthogonal(a, b) && at(A.sum_raw(a, b)) > at(a).scaled(k) + at(b))
        return CheckResult::fail("k_subadditive", {a, b});
  if (with_absorption)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (at(A.minus_raw(A.join(a, b), b)) > at(a).scaled(k)) return CheckResult::fail("join_absorption", {a, b});
  return CheckResult::pass();
}

KSubmeasure checked(const KSubmeasure& eta) {
  require(is_k_submeasure(eta), ErrorKind::NotASubmeasure, "values do not form a k-submeasure");
  return eta;
}

boost::multiprecision::cpp_int lcm_int(const boost::multiprecision::cpp_int& a, const boost::multiprecision::cpp_int& b) {
  return a / gcd(a, b) * b;
}

/// x·den ≤ num·y, exact for both value types below.
template <typename T>
bool scaled_le(const T& x, const T& num, const T& den, const T& y) {
  return x * den <= num * y;
}

template <typename T>
CheckResult pseudometric_conditions(const EffectAlgebra& A, const std::vector<T>& D, const T& kn, const T& kd,
                                    const T& mn, const T& md) {
  const int n = A.size();
  const T one(1);
  auto d = [&](Element a, Element b) -> const T& {
    return D[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
  };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (d(a, b) < T(0)) return CheckResult::fail("nonnegative", {a, b});
  for (Element a = 0; a < n; ++a)
    if (d(a, a) != T(0)) return CheckResult::fail("zero_diagonal", {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (d(a, b) != d(b, a)) return CheckResult::fail("symmetric", {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c)) return CheckResult::fail("triangle", {a, b, c});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (!scaled_le(d(A.meet(a, c), A.meet(b, c)), one, one, d(a, b)))
          return CheckResult::fail("meet_contraction", {a, b, c});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (A.orthogonal(a, c) && A.orthogonal(b, c) &&
            !scaled_le(d(A.sum_raw(a, c), A.sum_raw(b, c)), kn, kd, d(a, b)))
          return CheckResult::fail("sum_lipschitz", {a, b, c});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element x = A.minus_raw(A.join(a, c), c);
        const Element y = A.minus_raw(A.join(b, c), c);
        if (!scaled_le(d(x, y), mn, md, d(a, b))) return CheckResult::fail("absorb_lipschitz", {a, b, c});
      }
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c)
      if (!scaled_le(d(A.minus_raw(A.join(a, c), c), A.zero()), kn, kd, d(a, A.zero())))
        return CheckResult::fail("absorb_zero", {a, c});
  return CheckResult::pass();
}

void require_measure_shape(const ModularMeasure& mu) {
  const EffectAlgebra& A = *mu.algebra;
  if (mu.dim < 1) throw Error(ErrorKind::InvalidArgument, "measure dimension must be positive");
  if (static_cast<int>(mu.mu.size()) != A.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(A.size()) + " measure values, got " +
                                                std::to_string(mu.mu.size()));
  for (std::size_t a = 0; a < mu.mu.size(); ++a)
    if (static_cast<int>(mu.mu[a].size()) != mu.dim)
      throw Error(ErrorKind::InvalidArgument, "measure value " + std::to_string(a) + " has wrong dimension");
}

void require_modular(const ModularMeasure& mu) {
  require(modular_measure_check(mu), ErrorKind::NotModular, "not a modular measure");
}

std::vector<Rational> vec_sum(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

/// p(μ(r) − μ(s)) for coordinate `coord`, or the norm when coord == dim.
Rational seminorm_of_difference(const ModularMeasure& mu, Element r, Element s, int coord) {
  const auto& x = mu.mu[static_cast<std::size_t>(r)];
  const auto& y = mu.mu[static_cast<std::size_t>(s)];
  if (coord < mu.dim) return abs(x[static_cast<std::size_t>(coord)] - y[static_cast<std::size_t>(coord)]);
  Rational acc = 0;
  for (int i = 0; i < mu.dim; ++i) {
    Rational v = abs(x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)]);
    if (mu.norm == NormKind::Sum)
      acc += v;
    else if (v > acc)
      acc = v;
  }
  return acc;
}

Rational max_spread(const ModularMeasure& mu, ElementSet interval, int coord) {
  Rational best = 0;
  interval.for_each([&](Element r) {
    interval.for_each([&](Element s) {
      if (s <= r) return;
      Rational v = seminorm_of_difference(mu, r, s, coord);
      if (v > best) best = v;
    });
  });
  return best;
}

Pseudometric distance_for(const ModularMeasure& mu, int coord) {
  const EffectAlgebra& A = *mu.algebra;
  const int n = A.size();
  Pseudometric d{mu.algebra, std::vector<Rational>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)), 1, 1};
  // The interval [a∧b, a∨b] determines the distance; cache on its endpoints.
  std::vector<std::optional<Rational>> cache(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element lo = A.meet(a, b);
      const Element hi = A.join(a, b);
      auto& slot = cache[static_cast<std::size_t>(lo) * static_cast<std::size_t>(n) + static_cast<std::size_t>(hi)];
      if (!slot) slot = max_spread(mu, A.up_set(lo) & A.down_set(hi), coord);
      d.d[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = *slot;
    }
  return d;
}

CheckResult same_relation(const Relation& x, const Relation& y, const char* condition) {
  auto extra = x.first_outside(y);
  if (!extra) extra = y.first_outside(x);
  if (!extra) return CheckResult::pass();
  return CheckResult::fail(condition, {extra->first, extra->second});
}

std::string coord_name(const std::string& base, int coord) { return base + "[" + std::to_string(coord) + "]"; }

}  // namespace

CheckResult is_k_submeasure(const EffectAlgebra& alg, const std::vector<ExtendedValue>& values, const Rational& k) {
  require_shape(alg, values, k);
  return submeasure_conditions(alg, values, k, true);
}

CheckResult is_k_submeasure(const KSubmeasure& eta) { return is_k_submeasure(*eta.algebra, eta.values, eta.k); }

CheckResult check_without_absorption(const EffectAlgebra& alg, const std::vector<ExtendedValue>& values,
                                     const Rational& k) {
  require_shape(alg, values, k);
  return submeasure_conditions(alg, values, k, false);
}

ElementSet submeasure_kernel(const KSubmeasure& eta) {
  ElementSet s;
  for (Element a = 0; a < eta.algebra->size(); ++a)
    if (eta(a).is_zero()) s.insert(a);
  return s;
}

Congruence kernel_uniformity(const KSubmeasure& eta) {
  checked(eta);
  return Congruence::from_relation(delta_relation(eta.algebra, submeasure_kernel(eta)));
}

CheckResult uniformly_continuous(const KSubmeasure& eta, const Congruence& e) {
  if (eta.algebra != e.algebra()) throw Error(ErrorKind::MixedAlgebras, "submeasure and congruence differ in algebra");
  const int n = eta.algebra->size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (e.related(a, b) && !close_for_all_eps(eta(a), eta(b))) return CheckResult::fail("class_constant", {a, b});
  return CheckResult::pass();
}

Report check_weakest(const KSubmeasure& eta, int partition_cap) {
  checked(eta);
  return check_weakest(eta, enumerate_d_congruences(eta.algebra, CongruenceMode::Brute, partition_cap));
}

Report check_weakest(const KSubmeasure& eta, const std::vector<Congruence>& congruences) {
  const EffectAlgebra& A = *checked(eta).algebra;
  const int n = A.size();
  Report report("submeasure", eta.algebra);

  const ElementSet kernel = submeasure_kernel(eta);
  report.add("kernel_generator", is_dfilter_generator(A, kernel));
  report.count("kernel_size", kernel.size());

  const Congruence u = kernel_uniformity(eta);
  report.count("kernel_classes", u.block_count());
  report.add("continuous_for_kernel_uniformity", uniformly_continuous(eta, u));

  const Relation ur = u.relation();
  CheckResult weakest;
  long long continuous = 0;
  for (const auto& e : congruences) {
    if (!uniformly_continuous(eta, e).ok()) continue;
    ++continuous;
    if (auto out = e.relation().first_outside(ur); out && weakest.ok())
      weakest = CheckResult::fail("finer_than_kernel_uniformity", {out->first, out->second});
  }
  report.add("weakest", weakest, congruences.size());
  report.count("continuous_congruences", continuous);

  CheckResult bound;
  for (Element a = 0; a < n && bound.ok(); ++a)
    for (Element b = 0; b < n; ++b)
      if (eta(A.join(a, b)) > eta(A.symm_diff(a, b)).scaled(eta.k) + eta(A.meet(a, b))) {
        bound = CheckResult::fail("join_bound", {a, b});
        break;
      }
  report.add("continuity_bound", bound, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
  return report;
}

KSubmeasure canonical_indicator(const DFilterGenerator& f) {
  const DFilterGenerator g = DFilterGenerator::make(f.algebra(), f.members());
  KSubmeasure eta{g.algebra(), {}, 1};
  for (Element a = 0; a < g.algebra()->size(); ++a) eta.values.emplace_back(g.contains(a) ? 0 : 1);
  return eta;
}

CheckResult check_pseudometric(const Pseudometric& d) {
  const EffectAlgebra& A = *d.algebra;
  const auto cells = static_cast<std::size_t>(A.size()) * static_cast<std::size_t>(A.size());
  if (d.d.size() != cells) throw Error(ErrorKind::InvalidArgument, "distance table does not match carrier size");
  if (d.k < 1 || d.m < 1) throw Error(ErrorKind::InvalidArgument, "constants k and m must be at least 1");

  using boost::multiprecision::cpp_int;
  cpp_int scale = 1;
  for (const auto& x : d.d) scale = lcm_int(scale, denominator(x));
  std::vector<cpp_int> scaled;
  scaled.reserve(cells);
  const cpp_int limit = cpp_int(1) << 62;
  bool fits = true;
  for (const auto& x : d.d) {
    scaled.push_back(numerator(x) * (scale / denominator(x)));
    if (abs(scaled.back()) >= limit) fits = false;
  }
  for (const auto* q : {&d.k, &d.m})
    if (numerator(*q) >= limit || denominator(*q) >= limit) fits = false;

  if (fits) {
    std::vector<__int128> small(cells);
    for (std::size_t i = 0; i < cells; ++i) small[i] = scaled[i].convert_to<long long>();
    auto w = [](const cpp_int& x) { return static_cast<__int128>(x.convert_to<long long>()); };
    return pseudometric_conditions<__int128>(A, small, w(numerator(d.k)), w(denominator(d.k)), w(numerator(d.m)),
                                             w(denominator(d.m)));
  }
  return pseudometric_conditions<Rational>(A, d.d, Rational(numerator(d.k)), Rational(denominator(d.k)),
                                           Rational(numerator(d.m)), Rational(denominator(d.m)));
}

CheckResult check_join_contraction(const Pseudometric& d) {
  const EffectAlgebra& A = *d.algebra;
  const int n = A.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (d(A.join(a, c), A.join(b, c)) > d(a, b)) return CheckResult::fail("join_contraction", {a, b, c});
  return CheckResult::pass();
}

Relation zero_distance_relation(const Pseudometric& d) {
  Relation r(d.algebra);
  const int n = d.algebra->size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (d(a, b) == 0) r.insert(a, b);
  return r;
}

PseudometricSubmeasure submeasure_from_pseudometric(const Pseudometric& d) {
  require(check_pseudometric(d), ErrorKind::NotAPseudometric, "distance table fails the pseudometric conditions");
  PseudometricSubmeasure out{KSubmeasure{d.algebra, {}, d.k}, false};
  for (Element a = 0; a < d.algebra->size(); ++a) out.eta.values.emplace_back(d(a, d.algebra->zero()));
  out.uniformities_equal = zero_distance_relation(d) == kernel_uniformity(out.eta).relation();
  return out;
}

CheckResult modular_measure_check(const ModularMeasure& mu) {
  require_measure_shape(mu);
  const EffectAlgebra& A = *mu.algebra;
  const int n = A.size();
  auto at = [&](Element a) -> const std::vector<Rational>& { return mu.mu[static_cast<std::size_t>(a)]; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (A.orthogonal(a, b) && at(A.sum_raw(a, b)) != vec_sum(at(a), at(b)))
        return CheckResult::fail("additive", {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (vec_sum(at(a), at(b)) != vec_sum(at(A.join(a, b)), at(A.meet(a, b))))
        return CheckResult::fail("modular", {a, b});
  return CheckResult::pass();
}

Congruence measure_uniformity(const ModularMeasure& mu) {
  require_modular(mu);
  const EffectAlgebra& A = *mu.algebra;
  ElementSet vanishing;
  for (Element r = 0; r < A.size(); ++r)
    if (std::all_of(mu.mu[static_cast<std::size_t>(r)].begin(), mu.mu[static_cast<std::size_t>(r)].end(),
                    [](const Rational& x) { return x == 0; }))
      vanishing.insert(r);
  ElementSet null_set;
  for (Element r = 0; r < A.size(); ++r)
    if (A.down_set(r).subset_of(vanishing)) null_set.insert(r);
  return Congruence::from_relation(delta_relation(mu.algebra, null_set));
}

std::vector<Pseudometric> weber_distance(const ModularMeasure& mu) {
  require_modular(mu);
  std::vector<Pseudometric> out;
  for (int coord = 0; coord <= mu.dim; ++coord) out.push_back(distance_for(mu, coord));
  return out;
}

Report decompose_measure(const ModularMeasure& mu) {
  require_modular(mu);
  const EffectAlgebra& A = *mu.algebra;
  const int n = A.size();
  Report report("measure", mu.algebra);
  report.count("coordinates", mu.dim);

  const Congruence generated = measure_uniformity(mu);
  report.count("generated_classes", generated.block_count());
  report.add("generated_is_d_congruence", is_d_congruence(A, generated.block_of()));

  const auto distances = weber_distance(mu);
  Relation sup_side = Relation::all_pairs(mu.algebra);
  Relation zero_side = Relation::all_pairs(mu.algebra);
  std::vector<Relation> factors;
  for (int coord = 0; coord <= mu.dim; ++coord) {
    const Pseudometric& d = distances[static_cast<std::size_t>(coord)];
    const bool is_norm = coord == mu.dim;
    const std::string base = is_norm ? std::string("norm") : coord_name("coordinate", coord);
    report.add(base + ".pseudometric", check_pseudometric(d));
    report.add(base + ".join_contraction", check_join_contraction(d));

    std::vector<Rational> spread_below;
    for (Element t = 0; t < n; ++t) spread_below.push_back(max_spread(mu, A.down_set(t), coord));
    CheckResult dual;
    for (Element a = 0; a < n && dual.ok(); ++a)
      for (Element b = 0; b < n; ++b) {
        if (d(a, b) != spread_below[static_cast<std::size_t>(A.symm_diff(a, b))]) {
          dual = CheckResult::fail("interval_translation", {a, b});
          break;
        }
      }
    report.add(base + ".distance_via_symm_diff", dual);

    KSubmeasure eta{mu.algebra, {}, 1};
    for (Element a = 0; a < n; ++a) eta.values.emplace_back(d(a, A.zero()));
    const CheckResult is_sub = is_k_submeasure(eta);
    report.add(base + ".submeasure", is_sub);
    if (!is_sub.ok()) continue;
    const Relation kernel = kernel_uniformity(eta).relation();
    const Relation zero = zero_distance_relation(d);
    report.add(base + ".zero_set_is_kernel_uniformity", same_relation(zero, kernel, "differs_at"));
    if (is_norm) {
      report.add("norm_matches_generated", same_relation(zero, generated.relation(), "differs_at"));
    } else {
      sup_side = sup_side.intersect(kernel);
      zero_side = zero_side.intersect(zero);
      factors.push_back(kernel);
    }
  }

  const Relation gen = generated.relation();
  auto compare = [&](const std::string& name, const Relation& r) { report.add(name, same_relation(r, gen, "differs_at")); };
  compare("sup_equals_generated", sup_side);
  compare("zero_distance_equals_generated", zero_side);

  long long strictly_coarser = 0;
  for (const auto& f : factors)
    if (gen.subset_of(f) && !(f == gen)) ++strictly_coarser;
  report.count("factors_strictly_coarser", strictly_coarser);
  report.count("strictly_finer_than_every_factor",
               !factors.empty() && strictly_coarser == static_cast<long long>(factors.size()) ? 1 : 0);

  // A nonnegative scalar measure is itself a 1-submeasure with the same uniformity.
  if (mu.dim == 1) {
    KSubmeasure eta{mu.algebra, {}, 1};
    bool nonnegative = true;
    for (const auto& v : mu.mu) {
      if (v[0] < 0) {
        nonnegative = false;
        break;
      }
      eta.values.emplace_back(v[0]);
    }
    if (nonnegative) {
      const CheckResult is_sub = is_k_submeasure(eta);
      report.add("nonnegative_measure_is_submeasure", is_sub);
      if (is_sub.ok()) compare("agrees_with_submeasure_uniformity", kernel_uniformity(eta).relation());
    } else {
      report.skip("agrees_with_submeasure_uniformity", "measure takes negative values");
    }
  }
  return report;
}

CheckResult mv_s123_check(const AlgebraPtr& alg, const std::vector<ExtendedValue>& values) {
  const Classification c = classify(*alg);
  if (!c.is_mv) throw Error(ErrorKind::NotMV, "algebra is not an MV-algebra", c.mv_witness);
  require(check_without_absorption(*alg, values, 1), ErrorKind::InvalidArgument,
          "values fail the first three submeasure conditions");
  return is_k_submeasure(*alg, values, 1);
}

std::vector<std::vector<Rational>> modular_measure_basis(const EffectAlgebra& A) {
  const int n = A.size();
  std::vector<std::vector<Rational>> rows;
  auto add_row = [&](std::vector<std::pair<Element, int>> terms) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (auto [e, c] : terms) row[static_cast<std::size_t>(e)] += c;
    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; })) rows.push_back(std::move(row));
  };
  add_row({{A.zero(), 1}});
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      add_row({{a, 1}, {b, 1}, {A.join(a, b), -1}, {A.meet(a, b), -1}});
      if (A.orthogonal(a, b)) add_row({{A.sum_raw(a, b), 1}, {a, -1}, {b, -1}});
    }
  for (Element a = 0; a < n; ++a)
    if (A.orthogonal(a, a)) add_row({{A.sum_raw(a, a), 1}, {a, -2}});

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][static_cast<std::size_t>(col)];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<std::size_t>(col)] == 0) continue;
      const Rational f = rows[r][static_cast<std::size_t>(col)];
      for (int j = 0; j < n; ++j) rows[r][static_cast<std::size_t>(j)] -= f * rows[rank][static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -rows[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dlat

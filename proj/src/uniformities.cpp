#include "dlattice/uniformities.hpp"

#include <algorithm>
#include <map>

namespace dlat {

Relation::Relation(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), rows_(static_cast<std::size_t>(algebra_->size())) {}

Relation Relation::diagonal(AlgebraPtr algebra) {
  Relation r(std::move(algebra));
  for (Element a = 0; a < r.algebra_->size(); ++a) r.insert(a, a);
  return r;
}

Relation Relation::all_pairs(AlgebraPtr algebra) {
  Relation r(std::move(algebra));
  for (auto& row : r.rows_) row = r.algebra_->carrier();
  return r;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (auto row : rows_) c += static_cast<std::size_t>(row.size());
  return c;
}

bool Relation::subset_of(const Relation& other) const { return !first_outside(other).has_value(); }

Relation Relation::intersect(const Relation& other) const {
  Relation r(algebra_);
  for (std::size_t i = 0; i < rows_.size(); ++i) r.rows_[i] = rows_[i] & other.rows_[i];
  return r;
}

std::optional<std::pair<Element, Element>> Relation::first_outside(const Relation& other) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const ElementSet extra = rows_[i].minus(other.rows_[i]);
    if (!extra.empty()) return std::pair{static_cast<Element>(i), extra.front()};
  }
  return std::nullopt;
}

bool Relation::is_equivalence() const {
  const auto n = static_cast<Element>(rows_.size());
  for (Element a = 0; a < n; ++a) {
    if (!contains(a, a)) return false;
    for (Element b = 0; b < n; ++b)
      if (contains(a, b) && (!contains(b, a) || !row(b).subset_of(row(a)))) return false;
  }
  return true;
}

Relation relation_combine(const Relation& u, const Relation& v, Combine op) {
  if (u.algebra() != v.algebra()) throw Error(ErrorKind::MixedAlgebras, "relations over different algebras");
  const EffectAlgebra& A = *u.algebra();
  const int n = A.size();
  Relation out(u.algebra());
  for (Element a1 = 0; a1 < n; ++a1)
    u.row(a1).for_each([&](Element a2) {
      for (Element b1 = 0; b1 < n; ++b1)
        v.row(b1).for_each([&](Element b2) {
          switch (op) {
            case Combine::Join: out.insert(A.join(a1, b1), A.join(a2, b2)); break;
            case Combine::Meet: out.insert(A.meet(a1, b1), A.meet(a2, b2)); break;
            case Combine::Minus:
              if (A.leq(b1, a1) && A.leq(b2, a2)) out.insert(A.minus_raw(a1, b1), A.minus_raw(a2, b2));
              break;
          }
        });
    });
  return out;
}

Congruence Congruence::from_blocks(AlgebraPtr algebra, const std::vector<int>& block_of) {
  if (static_cast<int>(block_of.size()) != algebra->size())
    throw Error(ErrorKind::InvalidArgument, "block labelling does not match carrier size");
  std::map<int, int> relabel;
  std::vector<int> blocks;
  blocks.reserve(block_of.size());
  for (int b : block_of) {
    auto [it, fresh] = relabel.emplace(b, static_cast<int>(relabel.size()));
    blocks.push_back(it->second);
  }
  const auto count = static_cast<int>(relabel.size());
  return {std::move(algebra), std::move(blocks), count};
}

Congruence Congruence::from_relation(const Relation& r) {
  if (!r.is_equivalence()) throw Error(ErrorKind::NotEquivalence, "relation is not an equivalence");
  const int n = r.algebra()->size();
  std::vector<int> blocks(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Element a = 0; a < n; ++a) {
    if (blocks[static_cast<std::size_t>(a)] >= 0) continue;
    r.row(a).for_each([&](Element b) { blocks[static_cast<std::size_t>(b)] = count; });
    ++count;
  }
  return {r.algebra(), std::move(blocks), count};
}

ElementSet Congruence::class_of(Element a) const {
  ElementSet s;
  const int b = blocks_[static_cast<std::size_t>(a)];
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] == b) s.insert(static_cast<Element>(i));
  return s;
}

Relation Congruence::relation() const {
  Relation r(algebra_);
  for (Element a = 0; a < static_cast<Element>(blocks_.size()); ++a) {
    const ElementSet cls = class_of(a);
    cls.for_each([&](Element b) { r.insert(a, b); });
  }
  return r;
}

CheckResult is_d_congruence(const EffectAlgebra& A, const std::vector<int>& blk) {
  const int n = A.size();
  auto B = [&](Element x) { return blk[static_cast<std::size_t>(x)]; };
  for (Element a1 = 0; a1 < n; ++a1)
    for (Element a2 = a1 + 1; a2 < n; ++a2) {
      if (B(a1) != B(a2)) continue;
      for (Element c = 0; c < n; ++c) {
        if (B(A.join(a1, c)) != B(A.join(a2, c))) return CheckResult::fail("join", {a1, a2, c});
        if (B(A.meet(a1, c)) != B(A.meet(a2, c))) return CheckResult::fail("meet", {a1, a2, c});
        if (A.leq(c, a1) && A.leq(c, a2) && B(A.minus_raw(a1, c)) != B(A.minus_raw(a2, c)))
          return CheckResult::fail("minus", {a1, a2, c});
        if (A.leq(a1, c) && A.leq(a2, c) && B(A.minus_raw(c, a1)) != B(A.minus_raw(c, a2)))
          return CheckResult::fail("reflect", {a1, a2, c});
      }
    }
  return CheckResult::pass();
}

CheckResult is_d_congruence(const Relation& e) {
  return is_d_congruence(*e.algebra(), Congruence::from_relation(e).block_of());
}

std::vector<Congruence> enumerate_d_congruences(const AlgebraPtr& alg, CongruenceMode mode, int cap) {
  std::vector<Congruence> out;
  if (mode == CongruenceMode::ViaFilters) {
    for (const auto& f : enumerate_dfilters(alg)) out.push_back(congruence_from_filter(f));
    std::sort(out.begin(), out.end());
    return out;
  }
  const int n = alg->size();
  if (n > cap)
    throw Error(ErrorKind::SizeCap, "partition scan of " + std::to_string(n) + " elements exceeds cap " + std::to_string(cap));
  // Restricted growth strings in lexicographic order.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (is_d_congruence(*alg, rgs)) out.push_back(Congruence::from_blocks(alg, rgs));
    int i = n - 1;
    while (i >= 1 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i < 1) break;
    auto ui = static_cast<std::size_t>(i);
    ++rgs[ui];
    prefix_max[ui] = std::max(prefix_max[ui - 1], rgs[ui]);
    for (auto j = ui + 1; j < rgs.size(); ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[ui];
    }
  }
  return out;
}

Relation delta_relation(const AlgebraPtr& alg, ElementSet f) {
  Relation r(alg);
  for (Element a = 0; a < alg->size(); ++a)
    for (Element b = 0; b < alg->size(); ++b)
      if (f.contains(alg->symm_diff(a, b))) r.insert(a, b);
  return r;
}

Congruence congruence_from_filter(const DFilterGenerator& f) {
  require(is_dfilter_generator(*f.algebra(), f.members()), ErrorKind::NotAGenerator, "not a D-filter generator");
  return Congruence::from_relation(delta_relation(f.algebra(), f.members()));
}

DFilterGenerator filter_from_congruence(const Congruence& e) {
  require(is_d_congruence(*e.algebra(), e.block_of()), ErrorKind::NotACongruence, "not a D-congruence");
  return {e.algebra(), e.class_of(e.algebra()->zero())};
}

AltEntourages alt_entourages(const DFilterGenerator& f) {
  const EffectAlgebra& A = *f.algebra();
  require(is_dfilter_generator(A, f.members()), ErrorKind::NotAGenerator, "not a D-filter generator");
  const int n = A.size();
  // Per element: the sets {a⊕h : h∈F0, h⊥a}, {a⊖i : i∈F0, i≤a}.
  std::vector<ElementSet> sums(static_cast<std::size_t>(n)), diffs(static_cast<std::size_t>(n));
  for (Element a = 0; a < n; ++a)
    f.members().for_each([&](Element h) {
      if (A.orthogonal(a, h)) sums[static_cast<std::size_t>(a)].insert(A.sum_raw(a, h));
      if (A.leq(h, a)) diffs[static_cast<std::size_t>(a)].insert(A.minus_raw(a, h));
    });
  AltEntourages out{Relation(f.algebra()), Relation(f.algebra()), false, Relation(f.algebra()), false};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      if (sums[ua].intersects(sums[ub])) out.sum_form.insert(a, b);
      if (diffs[ua].intersects(diffs[ub])) out.difference_form.insert(a, b);
      // Literal reading: k must be both orthogonal to b and below b.
      ElementSet literal;
      f.members().for_each([&](Element k) {
        if (A.orthogonal(b, k) && A.leq(k, b)) literal.insert(A.minus_raw(b, k));
      });
      if (sums[ua].intersects(literal)) out.sum_form_literal.insert(a, b);
    }
  const Relation target = delta_relation(f.algebra(), f.members());
  out.all_equal = out.sum_form == target && out.difference_form == target;
  out.literal_reading_differs = !(out.sum_form_literal == out.sum_form);
  return out;
}

namespace {

std::vector<Element> pair_tuple(std::size_t i, std::size_t j) {
  return {static_cast<Element>(i), static_cast<Element>(j)};
}

}  // namespace

Report verify_isomorphism(const AlgebraPtr& alg, int partition_cap) {
  Report r("filter/congruence isomorphism", alg);
  const auto filters = enumerate_dfilters(alg);
  const auto brute = enumerate_d_congruences(alg, CongruenceMode::Brute, partition_cap);
  r.count("dfilters", static_cast<long long>(filters.size()));
  r.count("d_congruences", static_cast<long long>(brute.size()));

  std::vector<Congruence> image;
  for (const auto& f : filters) image.push_back(congruence_from_filter(f));
  std::vector<Relation> image_rel;
  for (const auto& e : image) image_rel.push_back(e.relation());

  {
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (distinct && sorted == brute) {
      r.add_pass("bijection", filters.size());
    } else {
      std::size_t i = 0;
      while (i < std::min(sorted.size(), brute.size()) && sorted[i] == brute[i]) ++i;
      r.add_fail("bijection", Witness{distinct ? "image differs from partition scan" : "not injective",
                                      {static_cast<Element>(i)}},
                 std::to_string(filters.size()) + " D-filters vs " + std::to_string(brute.size()) + " D-congruences");
    }
  }

  CheckResult round_trip_f = CheckResult::pass();
  for (std::size_t i = 0; i < filters.size() && round_trip_f.ok(); ++i)
    if (filter_from_congruence(image[i]).members() != filters[i].members())
      round_trip_f = CheckResult::fail("filter round trip", {static_cast<Element>(i)});
  r.add("filter_round_trip", round_trip_f, filters.size());

  CheckResult round_trip_e = CheckResult::pass();
  for (std::size_t i = 0; i < brute.size() && round_trip_e.ok(); ++i)
    if (!(congruence_from_filter(filter_from_congruence(brute[i])) == brute[i]))
      round_trip_e = CheckResult::fail("congruence round trip", {static_cast<Element>(i)});
  r.add("congruence_round_trip", round_trip_e, brute.size());

  const auto m = filters.size();
  CheckResult order = CheckResult::pass();
  for (std::size_t i = 0; i < m && order.ok(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool gen = filters[j].members().subset_of(filters[i].members());
      const bool rel = image_rel[j].subset_of(image_rel[i]);
      if (gen != rel) {
        order = CheckResult::fail("order", pair_tuple(i, j));
        break;
      }
    }
  r.add("order_isomorphism", order, m * m);

  // Brute-force bounds among congruences: the meet of two uniformities has
  // the least minimal entourage containing both; the join the greatest one
  // contained in both.
  std::vector<Relation> brute_rel;
  for (const auto& e : brute) brute_rel.push_back(e.relation());
  auto least_above = [&](const Relation& x) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t h = 0; h < brute_rel.size(); ++h)
      if (x.subset_of(brute_rel[h]) && (!best || brute_rel[h].subset_of(brute_rel[*best]))) best = h;
    for (std::size_t h = 0; h < brute_rel.size() && best; ++h)
      if (x.subset_of(brute_rel[h]) && !brute_rel[*best].subset_of(brute_rel[h])) best.reset();
    return best;
  };
  auto greatest_below = [&](const Relation& x) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t h = 0; h < brute_rel.size(); ++h)
      if (brute_rel[h].subset_of(x) && (!best || brute_rel[*best].subset_of(brute_rel[h]))) best = h;
    for (std::size_t h = 0; h < brute_rel.size() && best; ++h)
      if (brute_rel[h].subset_of(x) && !brute_rel[h].subset_of(brute_rel[*best])) best.reset();
    return best;
  };
  CheckResult meets = CheckResult::pass();
  CheckResult joins = CheckResult::pass();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Relation both = image_rel[i];
      for (Element a = 0; a < alg->size(); ++a)
        image_rel[j].row(a).for_each([&](Element b) { both.insert(a, b); });
      const auto lo = least_above(both);
      const auto hi = greatest_below(image_rel[i].intersect(image_rel[j]));
      const auto mt = congruence_from_filter(dfilter_meet(filters[i], filters[j]));
      const auto jn = congruence_from_filter(dfilter_join(filters[i], filters[j]));
      if (meets.ok() && (!lo || !(brute[*lo] == mt))) meets = CheckResult::fail("meet", pair_tuple(i, j));
      if (joins.ok() && (!hi || !(brute[*hi] == jn))) joins = CheckResult::fail("join", pair_tuple(i, j));
    }
  r.add("meets_preserved", meets, m * m);
  r.add("joins_preserved", joins, m * m);

  const Relation diag = Relation::diagonal(alg);
  CheckResult invariance = CheckResult::pass();
  for (std::size_t i = 0; i < m && invariance.ok(); ++i) {
    if (!(relation_combine(image_rel[i], diag, Combine::Minus) == image_rel[i]))
      invariance = CheckResult::fail("E minus diagonal", {static_cast<Element>(i)});
    else if (!(relation_combine(diag, image_rel[i], Combine::Minus) == image_rel[i]))
      invariance = CheckResult::fail("diagonal minus E", {static_cast<Element>(i)});
  }
  r.add("difference_invariance", invariance, m);

  // Same criteria as the partition scan, through the general relation calculus.
  CheckResult criteria = CheckResult::pass();
  for (std::size_t i = 0; i < brute_rel.size() && criteria.ok(); ++i) {
    const Relation& e = brute_rel[i];
    const std::pair<const char*, Relation> images[] = {
        {"join", relation_combine(e, diag, Combine::Join)},
        {"meet", relation_combine(e, diag, Combine::Meet)},
        {"minus", relation_combine(e, diag, Combine::Minus)},
        {"reflect", relation_combine(diag, e, Combine::Minus)},
    };
    for (const auto& [name, img] : images)
      if (auto p = img.first_outside(e)) {
        criteria = CheckResult::fail(name, {static_cast<Element>(i), p->first, p->second});
        break;
      }
  }
  r.add("entourage_criteria", criteria, brute_rel.size());
  return r;
}

Report verify_alternative_bases(const AlgebraPtr& alg, int cap) {
  Report r("alternative entourage bases", alg);
  const auto filters = enumerate_dfilters(alg, EnumerationMethod::Auto, cap);
  CheckResult all = CheckResult::pass();
  long long literal_differs = 0;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const auto alt = alt_entourages(filters[i]);
    if (all.ok() && !alt.all_equal) all = CheckResult::fail("alternative bases", {static_cast<Element>(i)});
    if (alt.literal_reading_differs) ++literal_differs;
  }
  r.add("alternative_bases", all, filters.size());
  r.count("literal_sum_form_differs", literal_differs);
  return r;
}

std::string format_partition(const Congruence& e) {
  std::string out = "{";
  for (int b = 0; b < e.block_count(); ++b) {
    ElementSet cls;
    for (std::size_t i = 0; i < e.block_of().size(); ++i)
      if (e.block_of()[i] == b) cls.insert(static_cast<Element>(i));
    if (b) out += ",";
    out += format_set(*e.algebra(), cls);
  }
  return out + "}";
}

}  // namespace dlat

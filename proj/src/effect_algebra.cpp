#include "dlattice/effect_algebra.hpp"

#include <string>
#include <tuple>

#include "dlattice/report.hpp"

namespace dlat {

namespace {

[[noreturn]] void axiom(const std::string& which, std::vector<Element> tuple) {
  throw Error(ErrorKind::AxiomViolation, "effect algebra axiom " + which + " violated",
              Witness{which, std::move(tuple)});
}

}  // namespace

AlgebraPtr EffectAlgebra::build(const SumTable& table, Element zero, Element one,
                                std::vector<std::string> labels) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty carrier");
  if (n > kMaxCarrier)
    throw Error(ErrorKind::SizeCap, "carrier has " + std::to_string(n) + " elements, limit is " +
                                        std::to_string(kMaxCarrier));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidArgument, "sum table is not square");
    for (Element v : row)
      if (v != kAbsent && (v < 0 || v >= n))
        throw Error(ErrorKind::InvalidArgument, "sum table entry " + std::to_string(v) + " out of range");
  }
  if (zero < 0 || zero >= n || one < 0 || one >= n)
    throw Error(ErrorKind::InvalidArgument, "zero/one index out of range");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "label count does not match carrier size");

  std::shared_ptr<EffectAlgebra> alg(new EffectAlgebra());
  EffectAlgebra& A = *alg;
  A.n_ = n;
  A.zero_ = zero;
  A.one_ = one;
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  A.sum_.resize(nn);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) A.sum_[A.idx(a, b)] = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];

  if (labels.empty())
    for (Element a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  A.labels_ = std::move(labels);

  auto S = [&](Element a, Element b) { return A.sum_[A.idx(a, b)]; };

  // E1
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (S(a, b) != S(b, a)) axiom("E1", {a, b});
  // E4
  for (Element a = 0; a < n; ++a)
    if (a != zero && S(a, one) != kAbsent) axiom("E4", {a, one});
  for (Element a = 0; a < n; ++a)
    if (S(a, zero) != a) axiom("zero-law", {a, zero});
  // E3
  A.complement_.assign(static_cast<std::size_t>(n), kAbsent);
  for (Element a = 0; a < n; ++a) {
    int found = 0;
    for (Element b = 0; b < n; ++b) {
      if (S(a, b) != one) continue;
      if (++found == 2) axiom("E3", {a, A.complement_[static_cast<std::size_t>(a)], b});
      A.complement_[static_cast<std::size_t>(a)] = b;
    }
    if (found == 0) axiom("E3", {a});
  }
  // E2
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c) {
      const Element bc = S(b, c);
      if (bc == kAbsent) continue;
      for (Element a = 0; a < n; ++a) {
        const Element lhs = S(a, bc);
        if (lhs == kAbsent) continue;
        const Element ab = S(a, b);
        if (ab == kAbsent || S(ab, c) != lhs) axiom("E2", {a, b, c});
      }
    }

  A.minus_.assign(nn, kAbsent);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element c = S(a, b);
      if (c == kAbsent) continue;
      Element& slot = A.minus_[A.idx(c, a)];
      if (slot != kAbsent && slot != b) axiom("cancellation", {a, slot, b});
      slot = b;
    }

  A.up_.assign(static_cast<std::size_t>(n), ElementSet{});
  A.down_.assign(static_cast<std::size_t>(n), ElementSet{});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (const Element c = S(a, b); c != kAbsent) {
        A.up_[static_cast<std::size_t>(a)].insert(c);
        A.down_[static_cast<std::size_t>(c)].insert(a);
      }
  for (Element a = 0; a < n; ++a) {
    if (!A.leq(a, a)) throw Error(ErrorKind::NotAPartialOrder, "order is not reflexive", Witness{"reflexive", {a}});
    for (Element b = 0; b < n; ++b) {
      if (a != b && A.leq(a, b) && A.leq(b, a))
        throw Error(ErrorKind::NotAPartialOrder, "order is not antisymmetric", Witness{"antisymmetric", {a, b}});
      if (!A.leq(a, b)) continue;
      if (!A.up_[static_cast<std::size_t>(b)].subset_of(A.up_[static_cast<std::size_t>(a)])) {
        const Element c = A.up_[static_cast<std::size_t>(b)].minus(A.up_[static_cast<std::size_t>(a)]).front();
        throw Error(ErrorKind::NotAPartialOrder, "order is not transitive", Witness{"transitive", {a, b, c}});
      }
    }
  }

  A.join_.assign(nn, kAbsent);
  A.meet_.assign(nn, kAbsent);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const ElementSet upper = A.up_set(a) & A.up_set(b);
      upper.for_each([&](Element u) {
        if (A.join_[A.idx(a, b)] == kAbsent && upper.subset_of(A.up_set(u))) A.join_[A.idx(a, b)] = u;
      });
      const ElementSet lower = A.down_set(a) & A.down_set(b);
      lower.for_each([&](Element l) {
        if (A.meet_[A.idx(a, b)] == kAbsent && lower.subset_of(A.down_set(l))) A.meet_[A.idx(a, b)] = l;
      });
      if (A.join_[A.idx(a, b)] == kAbsent)
        throw Error(ErrorKind::NotALattice, "no least upper bound", Witness{"join", {a, b}});
      if (A.meet_[A.idx(a, b)] == kAbsent)
        throw Error(ErrorKind::NotALattice, "no greatest lower bound", Witness{"meet", {a, b}});
    }

  A.delta_.assign(nn, kAbsent);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) A.delta_[A.idx(a, b)] = A.minus_raw(A.join(a, b), A.meet(a, b));

  return alg;
}

std::optional<Element> EffectAlgebra::osum(Element a, Element b) const {
  if (!valid(a) || !valid(b)) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  const Element s = sum_raw(a, b);
  if (s == kAbsent) return std::nullopt;
  return s;
}

std::optional<Element> EffectAlgebra::ominus(Element c, Element a) const {
  if (!valid(a) || !valid(c)) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  const Element d = minus_raw(c, a);
  if (d == kAbsent) return std::nullopt;
  return d;
}

SumTable EffectAlgebra::sum_table() const {
  SumTable t(static_cast<std::size_t>(n_), std::vector<Element>(static_cast<std::size_t>(n_), kAbsent));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sum_raw(a, b);
  return t;
}

Classification classify(const EffectAlgebra& A) {
  Classification c;
  const int n = A.size();
  for (Element a = 0; a < n && !c.mv_witness; ++a)
    for (Element b = 0; b < n; ++b)
      if (A.minus_raw(A.join(a, b), b) != A.minus_raw(a, A.meet(a, b))) {
        c.mv_witness = Witness{"mv-law", {a, b}};
        break;
      }
  for (Element a = 0; a < n; ++a)
    if (A.meet(A.complement(a), a) != A.zero()) {
      c.oml_witness = Witness{"orthomodular", {a}};
      break;
    }
  c.is_mv = !c.mv_witness;
  c.is_oml = !c.oml_witness;
  return c;
}

namespace {

// Partial operations that propagate kAbsent, so that an identity whose
// right-hand side is undefined registers as a counterexample.
struct PartialOps {
  const EffectAlgebra& A;

  Element add(Element a, Element b) const { return a < 0 || b < 0 ? kAbsent : A.sum_raw(a, b); }
  Element sub(Element c, Element a) const { return a < 0 || c < 0 ? kAbsent : A.minus_raw(c, a); }
  Element join(Element a, Element b) const { return a < 0 || b < 0 ? kAbsent : A.join(a, b); }
  Element meet(Element a, Element b) const { return a < 0 || b < 0 ? kAbsent : A.meet(a, b); }
  Element delta(Element a, Element b) const { return a < 0 || b < 0 ? kAbsent : A.symm_diff(a, b); }
  bool le(Element a, Element b) const { return a >= 0 && b >= 0 && A.leq(a, b); }
  static bool same(Element x, Element y) { return x != kAbsent && x == y; }
};

// Exhaustive scan over tuples of a fixed arity in lexicographic order. Tuples
// failing `hyp` are skipped; the first tuple for which `body` is false is
// recorded as the witness.
template <int Arity, class Hyp, class Body>
void scan(Report& r, const std::string& name, int n, Hyp&& hyp, Body&& body) {
  std::uint64_t cases = 0;
  std::vector<Element> t(Arity, 0);
  for (;;) {
    if (hyp(t)) {
      ++cases;
      if (!body(t)) {
        r.add_fail(name, Witness{name, t});
        return;
      }
    }
    int i = Arity - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  r.add_pass(name, cases);
}

}  // namespace

Report verify_basic_identities(const AlgebraPtr& alg) {
  const EffectAlgebra& A = *alg;
  Report r("basic identities", alg);
  const PartialOps o{A};
  const int n = A.size();
  using T = std::vector<Element>;

  scan<2>(r, "double_difference", n, [&](const T& t) { return A.leq(t[0], t[1]); },
          [&](const T& t) {
            const Element x = o.sub(t[1], t[0]);
            return o.le(x, t[1]) && o.same(o.sub(t[1], x), t[0]);
          });
  scan<3>(r, "difference_antitone", n, [&](const T& t) { return A.leq(t[0], t[1]) && A.leq(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.le(o.sub(c, b), o.sub(c, a)) && o.same(o.sub(o.sub(c, a), o.sub(c, b)), o.sub(b, a));
          });
  scan<3>(r, "difference_monotone", n, [&](const T& t) { return A.leq(t[0], t[1]) && A.leq(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.le(o.sub(b, a), o.sub(c, a)) && o.same(o.sub(o.sub(c, a), o.sub(b, a)), o.sub(c, b));
          });
  scan<3>(r, "difference_of_sum", n,
          [&](const T& t) { return A.orthogonal(t[0], t[1]) && A.leq(A.sum_raw(t[0], t[1]), t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            const Element lhs = o.sub(c, o.add(a, b));
            return o.same(lhs, o.sub(o.sub(c, a), b)) && o.same(lhs, o.sub(o.sub(c, b), a));
          });
  scan<3>(r, "sum_cancellation", n,
          [&](const T& t) { return A.leq(t[0], t[1]) && A.leq(t[1], A.complement(t[2])); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.le(o.add(a, c), o.add(b, c)) && o.same(o.sub(o.add(b, c), o.add(a, c)), o.sub(b, a));
          });
  scan<3>(r, "sum_difference_exchange", n, [&](const T& t) { return A.leq(t[0], t[1]) && A.leq(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.add(a, o.sub(c, b)), o.sub(c, o.sub(b, a)));
          });
  scan<3>(r, "sum_difference_associativity", n,
          [&](const T& t) {
            return A.leq(t[0], A.complement(t[1])) && A.leq(A.complement(t[1]), A.complement(t[2]));
          },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.add(a, o.sub(b, c)), o.sub(o.add(a, b), c));
          });
  scan<3>(r, "difference_de_morgan", n, [&](const T& t) { return A.leq(t[0], t[2]) && A.leq(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.sub(c, o.join(a, b)), o.meet(o.sub(c, a), o.sub(c, b))) &&
                   o.same(o.sub(c, o.meet(a, b)), o.join(o.sub(c, a), o.sub(c, b)));
          });
  scan<3>(r, "difference_distributes", n, [&](const T& t) { return A.leq(t[2], t[0]) && A.leq(t[2], t[1]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.sub(o.meet(a, b), c), o.meet(o.sub(a, c), o.sub(b, c))) &&
                   o.same(o.sub(o.join(a, b), c), o.join(o.sub(a, c), o.sub(b, c)));
          });
  scan<3>(r, "sum_distributes", n,
          [&](const T& t) { return A.orthogonal(t[0], t[2]) && A.orthogonal(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.add(o.join(a, b), c), o.join(o.add(a, c), o.add(b, c))) &&
                   o.same(o.add(o.meet(a, b), c), o.meet(o.add(a, c), o.add(b, c)));
          });
  scan<3>(r, "symm_diff_translation", n, [&](const T& t) { return A.leq(t[2], t[0]) && A.leq(t[2], t[1]); },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.delta(o.sub(a, c), o.sub(b, c)), A.symm_diff(a, b));
          });
  scan<3>(r, "symm_diff_reflection", n, [&](const T& t) { return A.leq(t[0], t[2]) && A.leq(t[1], t[2]); },
          [&](const T& t) {
            const auto [a, b, d] = std::tuple{t[0], t[1], t[2]};
            return o.same(o.delta(o.sub(d, a), o.sub(d, b)), A.symm_diff(a, b));
          });
  scan<2>(r, "sum_via_difference", n, [&](const T& t) { return A.orthogonal(t[0], t[1]); },
          [&](const T& t) {
            const auto [a, b] = std::tuple{t[0], t[1]};
            const Element s = A.sum_raw(a, b);
            const Element x = o.sub(A.complement(a), b);
            const Element y = o.sub(A.complement(b), a);
            return x >= 0 && y >= 0 && A.complement(x) == s && A.complement(y) == s && A.leq(a, A.complement(b));
          });
  scan<3>(r, "partial_order", n, [](const T&) { return true; },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            if (!A.leq(a, a) || !A.leq(A.zero(), a) || !A.leq(a, A.one())) return false;
            if (a != b && A.leq(a, b) && A.leq(b, a)) return false;
            return !(A.leq(a, b) && A.leq(b, c)) || A.leq(a, c);
          });
  scan<3>(r, "lattice_laws", n, [](const T&) { return true; },
          [&](const T& t) {
            const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
            return A.join(a, b) == A.join(b, a) && A.meet(a, b) == A.meet(b, a) &&
                   A.join(A.join(a, b), c) == A.join(a, A.join(b, c)) &&
                   A.meet(A.meet(a, b), c) == A.meet(a, A.meet(b, c)) && A.join(a, A.meet(a, b)) == a &&
                   A.meet(a, A.join(a, b)) == a;
          });
  scan<1>(r, "complement_involution", n, [](const T&) { return true; },
          [&](const T& t) {
            const Element a = t[0];
            return A.complement(A.complement(a)) == a && A.minus_raw(A.one(), a) == A.complement(a);
          });
  return r;
}

}  // namespace dlat

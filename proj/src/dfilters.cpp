#include "dlattice/dfilters.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace dlat {

namespace {

void same_algebra(const DFilterGenerator& f, const DFilterGenerator& g) {
  if (f.algebra() != g.algebra()) throw Error(ErrorKind::MixedAlgebras, "D-filters over different algebras");
}

}  // namespace

DFilterGenerator DFilterGenerator::make(AlgebraPtr algebra, ElementSet members) {
  if (!members.subset_of(algebra->carrier()))
    throw Error(ErrorKind::InvalidArgument, "subset exceeds the carrier");
  require(is_dfilter_generator(*algebra, members), ErrorKind::NotAGenerator, "not a D-filter generator");
  return {std::move(algebra), members};
}

CheckResult is_dfilter_generator(const EffectAlgebra& A, ElementSet s) {
  const int n = A.size();
  if (!s.contains(A.zero())) return CheckResult::fail("zero", {A.zero()});
  for (Element a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (Element b = 0; b < n; ++b)
      if (s.contains(b) && A.orthogonal(a, b) && !s.contains(A.sum_raw(a, b))) return CheckResult::fail("sum", {a, b});
  }
  for (Element a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (Element c = 0; c < n; ++c)
      if (!s.contains(A.minus_raw(A.join(a, c), c))) return CheckResult::fail("absorb", {a, c});
  }
  for (Element a = 0; a < n; ++a)
    if (s.contains(a) && !A.down_set(a).subset_of(s))
      return CheckResult::fail("downward", {A.down_set(a).minus(s).front(), a});
  return CheckResult::pass();
}

DFilterGenerator dfilter_closure(const AlgebraPtr& alg, ElementSet s) {
  const EffectAlgebra& A = *alg;
  ElementSet cur = s & A.carrier();
  cur.insert(A.zero());
  for (bool grew = true; grew;) {
    grew = false;
    ElementSet next = cur;
    cur.for_each([&](Element a) {
      cur.for_each([&](Element b) {
        if (A.orthogonal(a, b)) next.insert(A.sum_raw(a, b));
      });
      for (Element c = 0; c < A.size(); ++c) next.insert(A.minus_raw(A.join(a, c), c));
    });
    if (next != cur) {
      cur = next;
      grew = true;
    }
  }
  return {alg, cur};
}

std::vector<DFilterGenerator> enumerate_dfilters(const AlgebraPtr& alg, EnumerationMethod method, int cap) {
  const EffectAlgebra& A = *alg;
  const int n = A.size();
  if (n > cap) throw Error(ErrorKind::SizeCap, "carrier of " + std::to_string(n) + " elements exceeds cap " + std::to_string(cap));
  if (method == EnumerationMethod::Auto)
    method = n <= kSubsetScanLimit ? EnumerationMethod::SubsetScan : EnumerationMethod::ClosureSearch;

  std::vector<DFilterGenerator> out;
  if (method == EnumerationMethod::SubsetScan) {
    if (n > kSubsetScanLimit) throw Error(ErrorKind::SizeCap, "subset scan is limited to 20 elements");
    // Candidates: subsets containing zero that are downward closed.
    const auto z = static_cast<unsigned>(A.zero());
    const std::uint64_t low = (std::uint64_t{1} << z) - 1;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t x = 0; x < count; ++x) {
      const ElementSet s((x & low) | ((x >> z) << (z + 1)) | (std::uint64_t{1} << z));
      bool down = true;
      s.for_each([&](Element a) { down = down && A.down_set(a).subset_of(s); });
      if (down && is_dfilter_generator(A, s)) out.emplace_back(alg, s);
    }
  } else {
    std::set<ElementSet> seen;
    std::deque<ElementSet> queue;
    const ElementSet bottom = dfilter_closure(alg, ElementSet{}).members();
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
      const ElementSet f = queue.front();
      queue.pop_front();
      A.carrier().minus(f).for_each([&](Element x) {
        ElementSet grown = f;
        grown.insert(x);
        const ElementSet g = dfilter_closure(alg, grown).members();
        if (seen.insert(g).second) queue.push_back(g);
      });
    }
    for (ElementSet s : seen) out.emplace_back(alg, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet orthogonal_sums(const EffectAlgebra& A, ElementSet f, ElementSet g) {
  ElementSet out;
  f.for_each([&](Element a) {
    g.for_each([&](Element b) {
      if (A.orthogonal(a, b)) out.insert(A.sum_raw(a, b));
    });
  });
  return out;
}

ElementSet pairwise_meets(const EffectAlgebra& A, ElementSet f, ElementSet g) {
  ElementSet out;
  f.for_each([&](Element a) { g.for_each([&](Element b) { out.insert(A.meet(a, b)); }); });
  return out;
}

DFilterGenerator dfilter_meet(const DFilterGenerator& f, const DFilterGenerator& g) {
  same_algebra(f, g);
  return {f.algebra(), orthogonal_sums(*f.algebra(), f.members(), g.members())};
}

DFilterGenerator dfilter_join(const DFilterGenerator& f, const DFilterGenerator& g) {
  same_algebra(f, g);
  return {f.algebra(), f.members() & g.members()};
}

std::string format_set(const EffectAlgebra& A, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element a) {
    if (!first) out += ",";
    out += A.label(a);
    first = false;
  });
  return out + "}";
}

namespace {

// Generator-level forms of the closure properties every D-filter enjoys.
void check_generator_properties(const EffectAlgebra& A, const std::vector<DFilterGenerator>& filters, Report& r) {
  const int n = A.size();
  auto per_filter = [&](const std::string& name, auto&& test) {
    std::uint64_t cases = 0;
    for (std::size_t i = 0; i < filters.size(); ++i) {
      ++cases;
      if (auto w = test(filters[i].members())) {
        w->tuple.insert(w->tuple.begin(), static_cast<Element>(i));
        r.add_fail(name, *w, "first tuple entry is the D-filter index");
        return;
      }
    }
    r.add_pass(name, cases);
  };
  using W = std::optional<Witness>;
  per_filter("downward_closed", [&](ElementSet f) -> W {
    for (Element a = 0; a < n; ++a)
      if (f.contains(a) && !A.down_set(a).subset_of(f)) return Witness{"downward_closed", {a}};
    return std::nullopt;
  });
  per_filter("join_closed", [&](ElementSet f) -> W {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (f.contains(a) && f.contains(b) && !f.contains(A.join(a, b))) return Witness{"join_closed", {a, b}};
    return std::nullopt;
  });
  per_filter("delta_join_stable", [&](ElementSet f) -> W {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!f.contains(A.symm_diff(x, y))) continue;
        for (Element z = 0; z < n; ++z)
          if (!f.contains(A.symm_diff(A.join(x, z), A.join(y, z)))) return Witness{"delta_join_stable", {x, y, z}};
      }
    return std::nullopt;
  });
  per_filter("delta_meet_stable", [&](ElementSet f) -> W {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!f.contains(A.symm_diff(x, y))) continue;
        for (Element z = 0; z < n; ++z)
          if (!f.contains(A.symm_diff(A.meet(x, z), A.meet(y, z)))) return Witness{"delta_meet_stable", {x, y, z}};
      }
    return std::nullopt;
  });
  per_filter("delta_transitive", [&](ElementSet f) -> W {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!f.contains(A.symm_diff(x, y))) continue;
        for (Element z = 0; z < n; ++z)
          if (f.contains(A.symm_diff(y, z)) && !f.contains(A.symm_diff(x, z)))
            return Witness{"delta_transitive", {x, y, z}};
      }
    return std::nullopt;
  });
}

}  // namespace

Report verify_filter_lattice(const AlgebraPtr& alg, int cap) {
  const EffectAlgebra& A = *alg;
  Report r("D-filter lattice", alg);
  const auto filters = enumerate_dfilters(alg, EnumerationMethod::Auto, cap);
  const auto m = filters.size();
  r.count("dfilters", static_cast<long long>(m));

  if (A.size() <= kSubsetScanLimit) {
    const auto other = enumerate_dfilters(alg, EnumerationMethod::ClosureSearch, cap);
    if (other == filters) {
      r.add_pass("enumeration_methods_agree", m);
    } else {
      std::vector<ElementSet> a, b, diff;
      for (const auto& f : filters) a.push_back(f.members());
      for (const auto& f : other) b.push_back(f.members());
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      r.add_fail("enumeration_methods_agree", Witness{"differs", diff.front().elements()});
    }
  } else {
    r.skip("enumeration_methods_agree", "subset scan limited to 20 elements");
  }

  std::map<ElementSet, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(filters[i].members(), i);
  const bool has_top = index.count(ElementSet::singleton(A.zero())) > 0;
  const bool has_bottom = index.count(A.carrier()) > 0;
  r.add("bounded", has_top && has_bottom ? CheckResult::pass() : CheckResult::fail("bounds", {}), m);

  // Meet/join tables from generator arithmetic, checked for membership.
  const auto mi = [&](std::size_t i, std::size_t j) { return i * m + j; };
  std::vector<std::size_t> meet(m * m), join(m * m);
  CheckResult closed = CheckResult::pass();
  CheckResult union_in_sum = CheckResult::pass();
  CheckResult join_base = CheckResult::pass();
  for (std::size_t i = 0; i < m && closed.ok(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto mt = dfilter_meet(filters[i], filters[j]).members();
      const auto jn = dfilter_join(filters[i], filters[j]).members();
      const auto ij = std::vector<Element>{static_cast<Element>(i), static_cast<Element>(j)};
      auto im = index.find(mt);
      auto ijn = index.find(jn);
      if (im == index.end() || ijn == index.end()) {
        closed = CheckResult::fail(im == index.end() ? "meet" : "join", ij);
        break;
      }
      meet[mi(i, j)] = im->second;
      join[mi(i, j)] = ijn->second;
      if (union_in_sum.ok() && !(filters[i].members() | filters[j].members()).subset_of(mt))
        union_in_sum = CheckResult::fail("union_in_sum", ij);
      if (join_base.ok() && pairwise_meets(A, filters[i].members(), filters[j].members()) != jn)
        join_base = CheckResult::fail("join_base", ij);
    }
  r.add("meet_join_closed", closed, m * m);
  if (!closed.ok()) return r;
  r.add("union_in_sum", union_in_sum, m * m);
  r.add("join_base", join_base, m * m);

  // Brute-force order-theoretic bounds under reverse generator inclusion.
  CheckResult meet_ok = CheckResult::pass();
  CheckResult join_ok = CheckResult::pass();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const ElementSet fi = filters[i].members();
      const ElementSet fj = filters[j].members();
      std::optional<std::size_t> glb, lub;
      for (std::size_t h = 0; h < m; ++h) {
        const ElementSet fh = filters[h].members();
        if ((fi | fj).subset_of(fh) && (!glb || fh.subset_of(filters[*glb].members()))) glb = h;
        if (fh.subset_of(fi & fj) && (!lub || filters[*lub].members().subset_of(fh))) lub = h;
      }
      // The candidate must be comparable with every other bound.
      for (std::size_t h = 0; h < m && glb; ++h) {
        const ElementSet fh = filters[h].members();
        if ((fi | fj).subset_of(fh) && !filters[*glb].members().subset_of(fh)) glb.reset();
      }
      for (std::size_t h = 0; h < m && lub; ++h) {
        const ElementSet fh = filters[h].members();
        if (fh.subset_of(fi & fj) && !fh.subset_of(filters[*lub].members())) lub.reset();
      }
      const auto ij = std::vector<Element>{static_cast<Element>(i), static_cast<Element>(j)};
      if (meet_ok.ok() && (!glb || *glb != meet[mi(i, j)])) meet_ok = CheckResult::fail("meet", ij);
      if (join_ok.ok() && (!lub || *lub != join[mi(i, j)])) join_ok = CheckResult::fail("join", ij);
    }
  r.add("meet_matches_poset", meet_ok, m * m);
  r.add("join_matches_poset", join_ok, m * m);

  CheckResult distributive = CheckResult::pass();
  for (std::size_t f = 0; f < m && distributive.ok(); ++f)
    for (std::size_t g1 = 0; g1 < m && distributive.ok(); ++g1)
      for (std::size_t g2 = 0; g2 < m; ++g2) {
        const auto lhs = join[mi(f, meet[mi(g1, g2)])];
        const auto rhs = meet[mi(join[mi(f, g1)], join[mi(f, g2)])];
        if (lhs != rhs) {
          distributive = CheckResult::fail(
              "distributive", {static_cast<Element>(f), static_cast<Element>(g1), static_cast<Element>(g2)});
          break;
        }
      }
  r.add("distributive", distributive, m * m * m);

  check_generator_properties(A, filters, r);
  return r;
}

std::string filter_lattice_dot(const std::vector<DFilterGenerator>& filters) {
  std::ostringstream os;
  os << "digraph dfilters {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < filters.size(); ++i) {
    std::string label;
    for (char ch : format_set(*filters[i].algebra(), filters[i].members())) {
      if (ch == '"' || ch == '\\') label += '\\';
      label += ch;
    }
    os << "  f" << i << " [label=\"" << label << "\"];\n";
  }
  // Edge from a coarser filter to each filter covering it.
  for (std::size_t lo = 0; lo < filters.size(); ++lo)
    for (std::size_t hi = 0; hi < filters.size(); ++hi) {
      const ElementSet big = filters[lo].members();
      const ElementSet small = filters[hi].members();
      if (lo == hi || !small.subset_of(big)) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < filters.size() && cover; ++mid) {
        const ElementSet s = filters[mid].members();
        if (mid != lo && mid != hi && small.subset_of(s) && s.subset_of(big)) cover = false;
      }
      if (cover) os << "  f" << lo << " -> f" << hi << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace dlat

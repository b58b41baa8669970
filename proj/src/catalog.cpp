#include "dlattice/catalog.hpp"

#include <string>

namespace dlat::catalog {

namespace {

SumTable empty_table(int n) {
  return SumTable(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n), kAbsent));
}

void check_cap(long long n, int cap) {
  if (n > cap || n > kMaxCarrier)
    throw Error(ErrorKind::SizeCap, "construction would have " + std::to_string(n) + " elements (cap " +
                                        std::to_string(std::min(cap, kMaxCarrier)) + ")");
}

}  // namespace

AlgebraPtr mv_chain(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "mv_chain needs n >= 1");
  check_cap(n + 1, kDefaultSizeCap);
  auto t = empty_table(n + 1);
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) {
    labels.push_back(i == 0 ? "0" : i == n ? "1" : std::to_string(i) + "/" + std::to_string(n));
    for (int j = 0; i + j <= n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i + j;
  }
  return EffectAlgebra::build(t, 0, n, std::move(labels));
}

AlgebraPtr boolean_algebra(int atoms, int size_cap) {
  if (atoms < 0) throw Error(ErrorKind::InvalidArgument, "boolean_algebra needs k >= 0");
  check_cap(1LL << std::min(atoms, 40), size_cap);
  const int n = 1 << atoms;
  auto t = empty_table(n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    std::string l;
    if (a == 0) {
      l = "0";
    } else if (a == n - 1) {
      l = "1";
    } else {
      for (int i = 0; i < atoms; ++i)
        if ((a >> i) & 1) l += static_cast<char>('a' + i);
    }
    labels.push_back(std::move(l));
    for (int b = 0; b < n; ++b)
      if ((a & b) == 0) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a | b;
  }
  return EffectAlgebra::build(t, 0, n - 1, std::move(labels));
}

AlgebraPtr mo(int blocks, int size_cap) {
  if (blocks < 1) throw Error(ErrorKind::InvalidArgument, "mo needs at least one block");
  const int n = 2 * blocks + 2;
  check_cap(n, size_cap);
  auto t = empty_table(n);
  std::vector<std::string> labels{"0", "1"};
  for (int i = 1; i <= blocks; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("a" + std::to_string(i) + "'");
  }
  for (Element x = 0; x < n; ++x) {
    t[static_cast<std::size_t>(x)][0] = x;
    t[0][static_cast<std::size_t>(x)] = x;
  }
  for (int i = 0; i < blocks; ++i) {
    const auto a = static_cast<std::size_t>(2 + 2 * i);
    t[a][a + 1] = 1;
    t[a + 1][a] = 1;
  }
  return EffectAlgebra::build(t, 0, 1, std::move(labels));
}

AlgebraPtr product(const EffectAlgebra& a, const EffectAlgebra& b, int size_cap) {
  const int na = a.size();
  const int nb = b.size();
  check_cap(static_cast<long long>(na) * nb, size_cap);
  const int n = na * nb;
  auto t = empty_table(n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Element x1 = 0; x1 < na; ++x1)
    for (Element x2 = 0; x2 < nb; ++x2) {
      const Element x = x1 * nb + x2;
      labels[static_cast<std::size_t>(x)] = "(" + a.label(x1) + "," + b.label(x2) + ")";
      for (Element y1 = 0; y1 < na; ++y1)
        for (Element y2 = 0; y2 < nb; ++y2) {
          const Element s1 = a.sum_raw(x1, y1);
          const Element s2 = b.sum_raw(x2, y2);
          if (s1 != kAbsent && s2 != kAbsent)
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y1 * nb + y2)] = s1 * nb + s2;
        }
    }
  return EffectAlgebra::build(t, a.zero() * nb + b.zero(), a.one() * nb + b.one(), std::move(labels));
}

AlgebraPtr horizontal_sum(const EffectAlgebra& a, const EffectAlgebra& b, int size_cap) {
  if (a.size() < 2 || b.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "horizontal_sum needs two nontrivial summands");
  const long long total = 2LL + (a.size() - 2) + (b.size() - 2);
  check_cap(total, size_cap);
  const int n = static_cast<int>(total);

  // Map each summand's elements into the glued carrier.
  auto embed = [](const EffectAlgebra& s, Element first) {
    std::vector<Element> m(static_cast<std::size_t>(s.size()));
    Element next = first;
    for (Element x = 0; x < s.size(); ++x)
      m[static_cast<std::size_t>(x)] = x == s.zero() ? 0 : x == s.one() ? 1 : next++;
    return m;
  };
  const auto ma = embed(a, 2);
  const auto mb = embed(b, 2 + a.size() - 2);

  auto t = empty_table(n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "0";
  labels[1] = "1";
  auto fill = [&](const EffectAlgebra& s, const std::vector<Element>& m, const std::string& suffix) {
    for (Element x = 0; x < s.size(); ++x) {
      const auto gx = static_cast<std::size_t>(m[static_cast<std::size_t>(x)]);
      if (gx > 1) labels[gx] = s.label(x) + suffix;
      for (Element y = 0; y < s.size(); ++y)
        if (const Element z = s.sum_raw(x, y); z != kAbsent)
          t[gx][static_cast<std::size_t>(m[static_cast<std::size_t>(y)])] = m[static_cast<std::size_t>(z)];
    }
  };
  fill(a, ma, "_1");
  fill(b, mb, "_2");
  return EffectAlgebra::build(t, 0, 1, std::move(labels));
}

std::vector<NamedAlgebra> standard(int max_n) {
  std::vector<NamedAlgebra> out;
  auto add = [&](std::string name, int size, auto make) {
    if (size <= max_n && size <= kMaxCarrier) out.push_back({std::move(name), make()});
  };
  for (int n = 1; n <= 16; ++n) add("chain(" + std::to_string(n) + ")", n + 1, [&] { return mv_chain(n); });
  for (int k = 0; k <= 6; ++k) add("boolean(" + std::to_string(k) + ")", 1 << k, [&] { return boolean_algebra(k); });
  for (int b = 1; b <= 7; ++b) add("mo(" + std::to_string(b) + ")", 2 * b + 2, [&] { return mo(b); });

  struct Pair {
    const char* name;
    AlgebraPtr (*left)();
    AlgebraPtr (*right)();
  };
  static const Pair products[] = {
      {"chain(1)*chain(1)", [] { return mv_chain(1); }, [] { return mv_chain(1); }},
      {"chain(1)*chain(2)", [] { return mv_chain(1); }, [] { return mv_chain(2); }},
      {"chain(2)*chain(2)", [] { return mv_chain(2); }, [] { return mv_chain(2); }},
      {"chain(2)*chain(3)", [] { return mv_chain(2); }, [] { return mv_chain(3); }},
      {"boolean(2)*chain(2)", [] { return boolean_algebra(2); }, [] { return mv_chain(2); }},
      {"mo(2)*chain(1)", [] { return mo(2); }, [] { return mv_chain(1); }},
      {"chain(3)*chain(3)", [] { return mv_chain(3); }, [] { return mv_chain(3); }},
      {"mo(2)*chain(2)", [] { return mo(2); }, [] { return mv_chain(2); }},
      {"boolean(3)*chain(3)", [] { return boolean_algebra(3); }, [] { return mv_chain(3); }},
  };
  for (const auto& p : products) {
    const auto l = p.left();
    const auto r = p.right();
    add(p.name, l->size() * r->size(), [&] { return product(*l, *r); });
  }
  static const Pair hsums[] = {
      {"hsum(chain(2),chain(2))", [] { return mv_chain(2); }, [] { return mv_chain(2); }},
      {"hsum(chain(3),chain(2))", [] { return mv_chain(3); }, [] { return mv_chain(2); }},
      {"hsum(boolean(2),chain(3))", [] { return boolean_algebra(2); }, [] { return mv_chain(3); }},
      {"hsum(boolean(3),chain(2))", [] { return boolean_algebra(3); }, [] { return mv_chain(2); }},
      {"hsum(chain(4),mo(2))", [] { return mv_chain(4); }, [] { return mo(2); }},
      {"hsum(boolean(3),boolean(3))", [] { return boolean_algebra(3); }, [] { return boolean_algebra(3); }},
  };
  for (const auto& p : hsums) {
    const auto l = p.left();
    const auto r = p.right();
    add(p.name, l->size() + r->size() - 2, [&] { return horizontal_sum(*l, *r); });
  }
  return out;
}

}  // namespace dlat::catalog

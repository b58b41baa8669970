#include "dlattice/suite.hpp"

#include <chrono>

#include "dlattice/corpus.hpp"
#include "dlattice/submeasures.hpp"

namespace dlat {

namespace {

/// Folds many per-item results into one entry per check name, keeping the
/// first failure and the item it came from.
class Tally {
public:
  void add(const std::string& name, const CheckResult& r, std::size_t item) {
    Entry& e = entry(name);
    ++e.cases;
    if (!r.ok() && !e.witness) {
      e.witness = r.witness;
      e.item = item;
    }
  }
  void add_skip(const std::string& name, const std::string& reason) {
    Entry& e = entry(name);
    if (e.skip_reason.empty()) e.skip_reason = reason;
  }
  void merge(const Report& r, std::size_t item, const std::string& prefix = {}) {
    for (const auto& c : r.checks()) {
      if (c.status == Status::Skipped)
        add_skip(prefix + c.name, c.detail);
      else
        add(prefix + c.name, c.status == Status::Pass ? CheckResult::pass() : CheckResult{c.witness}, item);
    }
  }
  void write(Report& report, const std::string& noun) const {
    for (const auto& e : entries_) {
      if (e.cases == 0) {
        report.skip(e.name, e.skip_reason);
      } else if (e.witness) {
        report.add_fail(e.name, *e.witness, noun + " " + std::to_string(e.item));
      } else {
        report.add_pass(e.name, e.cases);
      }
    }
  }

private:
  struct Entry {
    std::string name;
    std::uint64_t cases = 0;
    std::optional<Witness> witness;
    std::size_t item = 0;
    std::string skip_reason;
  };
  Entry& entry(const std::string& name) {
    for (auto& e : entries_)
      if (e.name == name) return e;
    Entry e;
    e.name = name;
    entries_.push_back(std::move(e));
    return entries_.back();
  }
  std::vector<Entry> entries_;
};

CheckResult same_relation(const Relation& x, const Relation& y) {
  auto extra = x.first_outside(y);
  if (!extra) extra = y.first_outside(x);
  if (!extra) return CheckResult::pass();
  return CheckResult::fail("differs_at", {extra->first, extra->second});
}

class Stopwatch {
public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::uint64_t algebra_seed(const std::string& name, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ seed;
}

Report submeasure_layer(const AlgebraPtr& alg, const std::vector<Congruence>& congruences, std::size_t count,
                        std::uint64_t seed) {
  Report report("submeasures", alg);
  const auto corpus = corpus::submeasures(alg, count, seed);
  Tally tally;
  long long with_infinity = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const KSubmeasure& eta = corpus[i];
    for (const auto& v : eta.values)
      if (v.is_infinite()) {
        ++with_infinity;
        break;
      }
    tally.merge(check_weakest(eta, congruences), i);
  }
  tally.write(report, "submeasure");
  report.count("submeasures", static_cast<long long>(corpus.size()));
  report.count("with_infinity", with_infinity);
  return report;
}

Report measure_layer(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed) {
  Report report("measures", alg);
  const auto corpus = corpus::modular_measures(alg, count, seed);
  Tally tally;
  long long multi = 0;
  long long strictly_finer = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ModularMeasure& mu = corpus[i];
    tally.add("modular", modular_measure_check(mu), i);
    if (mu.dim > 1) ++multi;
    for (const auto& d : weber_distance(mu)) {
      const CheckResult pm = check_pseudometric(d);
      tally.add("pseudometric", pm, i);
      if (!pm.ok()) continue;
      const auto derived = submeasure_from_pseudometric(d);
      tally.add("uniformities_equal",
                derived.uniformities_equal
                    ? CheckResult::pass()
                    : same_relation(zero_distance_relation(d), kernel_uniformity(derived.eta).relation()),
                i);
    }
    const Report dec = decompose_measure(mu);
    tally.merge(dec, i, "decompose.");
    if (dec.find_count("strictly_finer_than_every_factor").value_or(0) == 1 && mu.dim > 1) ++strictly_finer;
  }
  tally.write(report, "measure");
  report.count("measures", static_cast<long long>(corpus.size()));
  report.count("multi_dimensional", multi);
  report.count("strictly_finer_instances", strictly_finer);
  return report;
}

Report indicator_layer(const AlgebraPtr& alg, const std::vector<Congruence>& congruences) {
  Report report("indicators", alg);
  Tally tally;
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    const Congruence& e = congruences[i];
    const KSubmeasure eta = canonical_indicator(filter_from_congruence(e));
    const CheckResult sub = is_k_submeasure(eta);
    tally.add("indicator_is_submeasure", sub, i);
    if (sub.ok()) tally.add("regenerates_congruence", same_relation(kernel_uniformity(eta).relation(), e.relation()), i);
  }
  tally.write(report, "congruence");
  report.count("congruences", static_cast<long long>(congruences.size()));
  return report;
}

Report mv_layer(const AlgebraPtr& alg, std::size_t count, std::uint64_t seed) {
  Report report("mv", alg);
  if (!classify(*alg).is_mv) {
    report.skip("absorption_follows", "not an MV-algebra");
    return report;
  }
  const auto functions = corpus::subadditive_functions(alg, count, seed);
  Tally tally;
  for (std::size_t i = 0; i < functions.size(); ++i) tally.add("absorption_follows", mv_s123_check(alg, functions[i]), i);
  tally.write(report, "function");
  report.count("mv_functions", static_cast<long long>(functions.size()));
  return report;
}

Report run_algebra(const catalog::NamedAlgebra& entry, const SuiteOptions& options) {
  const AlgebraPtr& alg = entry.algebra;
  const std::uint64_t seed = algebra_seed(entry.name, options.seed);
  Report report(entry.name, alg);
  auto timed = [&](const std::string& name, auto&& run) {
    Stopwatch watch;
    run();
    if (options.timings) report.timing(name, watch.seconds());
  };

  timed("identities", [&] { report.absorb(verify_basic_identities(alg), "identities."); });
  timed("filters", [&] { report.absorb(verify_filter_lattice(alg), "filters."); });

  std::vector<Congruence> congruences;
  timed("congruences", [&] {
    if (alg->size() <= options.congruence_cap) {
      report.absorb(verify_isomorphism(alg, options.congruence_cap), "iso.");
      congruences = enumerate_d_congruences(alg, CongruenceMode::Brute, options.congruence_cap);
    } else {
      report.skip("iso", "carrier above the congruence cap");
      congruences = enumerate_d_congruences(alg, CongruenceMode::ViaFilters);
    }
  });
  timed("bases", [&] { report.absorb(verify_alternative_bases(alg), "bases."); });
  timed("submeasures",
        [&] { report.absorb(submeasure_layer(alg, congruences, options.submeasures, seed), "submeasures."); });
  timed("indicators", [&] { report.absorb(indicator_layer(alg, congruences), "indicators."); });
  timed("measures", [&] { report.absorb(measure_layer(alg, options.measures, seed + 1), "measures."); });
  timed("mv", [&] { report.absorb(mv_layer(alg, options.mv_functions, seed + 2), "mv."); });
  return report;
}

Report run_suite(const SuiteOptions& options) {
  Report report("suite");
  long long algebras = 0;
  for (const auto& entry : catalog::standard(options.max_n)) {
    report.add_section(run_algebra(entry, options));
    ++algebras;
  }
  report.count("algebras", algebras);
  report.count("max_n", options.max_n);
  report.count("congruence_cap", options.congruence_cap);
  return report;
}

}  // namespace dlat

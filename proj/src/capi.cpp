#include "dlattice/dlattice.h"

#include <cstring>
#include <new>

#include "dlattice/catalog.hpp"
#include "dlattice/json_io.hpp"
#include "dlattice/suite.hpp"

using namespace dlat;
using dlat::json::Json;

struct ea_algebra {
  AlgebraPtr ptr;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

ea_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCap: return EA_ESIZECAP;
    case ErrorKind::InvalidArgument:
    case ErrorKind::MixedAlgebras: return EA_EARG;
    default: return EA_EINPUT;
  }
}

void set_error(const char* kind, const std::string& message) {
  last_kind = kind;
  last_error = message;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
ea_status guarded(F&& body) {
  try {
    last_error.clear();
    last_kind.clear();
    return body();
  } catch (const Error& e) {
    set_error(to_string(e.kind()), e.what());
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    set_error("Internal", "out of memory");
    return EA_EINTERNAL;
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
    return EA_EINTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const AlgebraPtr& unwrap(const ea_algebra* alg) {
  if (!alg || !alg->ptr) throw Error(ErrorKind::InvalidArgument, "null algebra handle");
  return alg->ptr;
}

void require_out(const void* p) {
  if (!p) throw Error(ErrorKind::InvalidArgument, "null output pointer");
}

void require_element(const EffectAlgebra& A, int a) {
  if (!A.valid(a)) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " out of range");
}

ElementSet mask_set(const EffectAlgebra& A, std::uint64_t mask) {
  if (A.size() < 64 && (mask >> A.size()) != 0) throw Error(ErrorKind::InvalidArgument, "mask has bits beyond the carrier");
  return ElementSet(mask);
}

SuiteOptions options_from(const ea_options* o) {
  ea_options d;
  ea_options_default(&d);
  if (!o) o = &d;
  if (o->max_n < 1 || o->congruence_cap < 1 || o->submeasures < 0 || o->measures < 0 || o->mv_functions < 0)
    throw Error(ErrorKind::InvalidArgument, "option values out of range");
  SuiteOptions s;
  s.max_n = o->max_n;
  s.congruence_cap = o->congruence_cap;
  s.submeasures = static_cast<std::size_t>(o->submeasures);
  s.measures = static_cast<std::size_t>(o->measures);
  s.mv_functions = static_cast<std::size_t>(o->mv_functions);
  s.seed = o->seed;
  s.timings = o->timings != 0;
  return s;
}

ea_status emit(const Report& report, const SuiteOptions& opts, Json extra, char** out) {
  require_out(out);
  Json doc = json::report_to_json(report, opts.timings);
  if (extra.is_object())
    for (auto& [key, value] : extra.items()) doc[key] = value;
  *out = dup(doc.dump(2) + "\n");
  return report.passed() ? EA_OK : EA_FAILED;
}

ea_status wrap(AlgebraPtr alg, ea_algebra** out) {
  require_out(out);
  *out = new ea_algebra{std::move(alg)};
  return EA_OK;
}

Json partition_json(const Congruence& e) { return format_partition(e); }

Json filters_json(const EffectAlgebra& A, const std::vector<DFilterGenerator>& filters) {
  Json list = Json::array();
  for (const auto& f : filters) list.push_back(format_set(A, f.members()));
  return list;
}

}  // namespace

extern "C" {

void ea_options_default(ea_options* options) {
  if (!options) return;
  const SuiteOptions s;
  options->max_n = s.max_n;
  options->congruence_cap = s.congruence_cap;
  options->submeasures = static_cast<int>(s.submeasures);
  options->measures = static_cast<int>(s.measures);
  options->mv_functions = static_cast<int>(s.mv_functions);
  options->seed = s.seed;
  options->timings = 0;
}

const char* ea_last_error(void) { return last_error.c_str(); }
const char* ea_last_error_kind(void) { return last_kind.c_str(); }

void ea_string_free(char* s) { std::free(s); }

ea_status ea_algebra_from_json(const char* text, ea_algebra** out) {
  return guarded([&] {
    if (!text) throw Error(ErrorKind::InvalidArgument, "null JSON text");
    return wrap(json::algebra_from_json(json::parse(text)), out);
  });
}

ea_status ea_algebra_load(const char* path, ea_algebra** out) {
  return guarded([&] {
    if (!path) throw Error(ErrorKind::InvalidArgument, "null path");
    return wrap(json::algebra_from_json(json::read_file(path)), out);
  });
}

ea_status ea_algebra_to_json(const ea_algebra* alg, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(json::algebra_to_json(*unwrap(alg)).dump(2) + "\n");
    return EA_OK;
  });
}

void ea_algebra_free(ea_algebra* alg) { delete alg; }

int ea_algebra_size(const ea_algebra* alg) { return alg && alg->ptr ? alg->ptr->size() : 0; }
int ea_algebra_zero(const ea_algebra* alg) { return alg && alg->ptr ? alg->ptr->zero() : -1; }
int ea_algebra_one(const ea_algebra* alg) { return alg && alg->ptr ? alg->ptr->one() : -1; }

ea_status ea_catalog_chain(int n, ea_algebra** out) {
  return guarded([&] { return wrap(catalog::mv_chain(n), out); });
}

ea_status ea_catalog_boolean(int atoms, ea_algebra** out) {
  return guarded([&] { return wrap(catalog::boolean_algebra(atoms), out); });
}

ea_status ea_catalog_mo(int blocks, ea_algebra** out) {
  return guarded([&] { return wrap(catalog::mo(blocks), out); });
}

ea_status ea_catalog_product(const ea_algebra* a, const ea_algebra* b, ea_algebra** out) {
  return guarded([&] { return wrap(catalog::product(*unwrap(a), *unwrap(b)), out); });
}

ea_status ea_catalog_hsum(const ea_algebra* a, const ea_algebra* b, ea_algebra** out) {
  return guarded([&] { return wrap(catalog::horizontal_sum(*unwrap(a), *unwrap(b)), out); });
}

ea_status ea_osum(const ea_algebra* alg, int a, int b, int* out) {
  return guarded([&] {
    require_out(out);
    *out = unwrap(alg)->osum(a, b).value_or(kAbsent);
    return EA_OK;
  });
}

ea_status ea_ominus(const ea_algebra* alg, int c, int a, int* out) {
  return guarded([&] {
    require_out(out);
    *out = unwrap(alg)->ominus(c, a).value_or(kAbsent);
    return EA_OK;
  });
}

ea_status ea_symm_diff(const ea_algebra* alg, int a, int b, int* out) {
  return guarded([&] {
    require_out(out);
    const EffectAlgebra& A = *unwrap(alg);
    require_element(A, a);
    require_element(A, b);
    *out = A.symm_diff(a, b);
    return EA_OK;
  });
}

ea_status ea_is_dfilter_generator(const ea_algebra* alg, uint64_t mask, int* result) {
  return guarded([&] {
    require_out(result);
    const EffectAlgebra& A = *unwrap(alg);
    *result = is_dfilter_generator(A, mask_set(A, mask)).ok() ? 1 : 0;
    return EA_OK;
  });
}

ea_status ea_dfilters(const ea_algebra* alg, uint64_t* masks, int capacity, int* count) {
  return guarded([&] {
    require_out(count);
    const auto filters = enumerate_dfilters(unwrap(alg));
    *count = static_cast<int>(filters.size());
    for (int i = 0; i < capacity && i < *count; ++i) {
      require_out(masks);
      masks[i] = filters[static_cast<std::size_t>(i)].members().bits();
    }
    return EA_OK;
  });
}

ea_status ea_congruence_from_filter(const ea_algebra* alg, uint64_t mask, int* block_of) {
  return guarded([&] {
    require_out(block_of);
    const AlgebraPtr& A = unwrap(alg);
    const Congruence e = congruence_from_filter(DFilterGenerator::make(A, mask_set(*A, mask)));
    std::copy(e.block_of().begin(), e.block_of().end(), block_of);
    return EA_OK;
  });
}

ea_status ea_filter_from_congruence(const ea_algebra* alg, const int* block_of, uint64_t* mask) {
  return guarded([&] {
    require_out(block_of);
    require_out(mask);
    const AlgebraPtr& A = unwrap(alg);
    const std::vector<int> blocks(block_of, block_of + A->size());
    *mask = filter_from_congruence(Congruence::from_blocks(A, blocks)).members().bits();
    return EA_OK;
  });
}

ea_status ea_report_check(const ea_algebra* alg, const ea_options* options, char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    return emit(verify_basic_identities(unwrap(alg)), opts, {}, out);
  });
}

ea_status ea_report_filters(const ea_algebra* alg, const ea_options* options, char** out, char** dot) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    const auto filters = enumerate_dfilters(A);
    Report report("filters", A);
    report.count("dfilters", static_cast<long long>(filters.size()));
    CheckResult valid;
    for (const auto& f : filters)
      if (auto r = is_dfilter_generator(*A, f.members()); !r.ok()) {
        valid = r;
        break;
      }
    report.add("generators_valid", valid, filters.size());
    if (A->size() <= kSubsetScanLimit) {
      const bool same = enumerate_dfilters(A, EnumerationMethod::SubsetScan) ==
                        enumerate_dfilters(A, EnumerationMethod::ClosureSearch);
      if (same)
        report.add_pass("enumeration_methods_agree", filters.size());
      else
        report.add_fail("enumeration_methods_agree", Witness{"enumeration_mismatch", {}});
    } else {
      report.skip("enumeration_methods_agree", "carrier above the subset-scan limit");
    }
    if (dot) *dot = dup(filter_lattice_dot(filters));
    return emit(report, opts, {{"dfilters", filters_json(*A, filters)}}, out);
  });
}

ea_status ea_report_congruences(const ea_algebra* alg, ea_congruence_mode mode, const ea_options* options,
                                char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    const auto list = enumerate_d_congruences(
        A, mode == EA_CONGRUENCES_BRUTE ? CongruenceMode::Brute : CongruenceMode::ViaFilters, opts.congruence_cap);
    Report report("congruences", A);
    report.count("d_congruences", static_cast<long long>(list.size()));
    CheckResult valid;
    Json parts = Json::array();
    for (const auto& e : list) {
      if (auto r = is_d_congruence(*A, e.block_of()); !r.ok() && valid.ok()) valid = r;
      parts.push_back(partition_json(e));
    }
    report.add("entourage_criteria", valid, list.size());
    return emit(report, opts, {{"mode", mode == EA_CONGRUENCES_BRUTE ? "brute" : "filters"}, {"congruences", parts}},
                out);
  });
}

ea_status ea_report_iso(const ea_algebra* alg, const ea_options* options, char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    Report report = verify_isomorphism(A, opts.congruence_cap);
    report.absorb(verify_alternative_bases(A), "bases.");
    const std::string summary = std::to_string(report.find_count("dfilters").value_or(0)) + " D-filters ↔ " +
                                std::to_string(report.find_count("d_congruences").value_or(0)) + " D-congruences";
    return emit(report, opts, {{"summary", summary}}, out);
  });
}

ea_status ea_report_lattice(const ea_algebra* alg, const ea_options* options, char** out, char** dot) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    Report report = verify_filter_lattice(A);
    if (dot) *dot = dup(filter_lattice_dot(enumerate_dfilters(A)));
    return emit(report, opts, {}, out);
  });
}

ea_status ea_report_submeasure(const ea_algebra* alg, const char* submeasure_json, ea_submeasure_op op,
                               const ea_options* options, char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    if (!submeasure_json) throw Error(ErrorKind::InvalidArgument, "null submeasure JSON");
    const KSubmeasure eta = json::submeasure_from_json(A, json::parse(submeasure_json));
    Report report("submeasure", A);
    Json extra = Json::object();
    if (op == EA_SUBMEASURE_CHECK) {
      const CheckResult sub = is_k_submeasure(eta);
      report.add("k_submeasure", sub);
      if (sub.ok()) {
        if (A->size() <= opts.congruence_cap)
          report.absorb(check_weakest(eta, opts.congruence_cap));
        else
          report.absorb(check_weakest(eta, enumerate_d_congruences(A, CongruenceMode::ViaFilters)));
        extra["kernel"] = format_set(*A, submeasure_kernel(eta));
      }
    } else {
      const Congruence u = kernel_uniformity(eta);
      report.count("classes", u.block_count());
      report.add("is_d_congruence", is_d_congruence(*A, u.block_of()));
      extra["kernel"] = format_set(*A, submeasure_kernel(eta));
      extra["partition"] = partition_json(u);
    }
    return emit(report, opts, extra, out);
  });
}

ea_status ea_report_measure(const ea_algebra* alg, const char* measure_json, ea_measure_op op,
                            const ea_options* options, char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    const AlgebraPtr& A = unwrap(alg);
    if (!measure_json) throw Error(ErrorKind::InvalidArgument, "null measure JSON");
    const ModularMeasure mu = json::measure_from_json(A, json::parse(measure_json));
    Json extra = Json::object();
    if (op == EA_MEASURE_CHECK) {
      Report report("measure", A);
      report.add("modular_measure", modular_measure_check(mu));
      return emit(report, opts, extra, out);
    }
    if (op == EA_MEASURE_UNIFORMITY) {
      Report report("measure", A);
      const Congruence u = measure_uniformity(mu);
      report.count("classes", u.block_count());
      report.add("is_d_congruence", is_d_congruence(*A, u.block_of()));
      extra["partition"] = partition_json(u);
      return emit(report, opts, extra, out);
    }
    return emit(decompose_measure(mu), opts, extra, out);
  });
}

ea_status ea_report_suite(const ea_options* options, char** out) {
  return guarded([&] {
    const SuiteOptions opts = options_from(options);
    return emit(run_suite(opts), opts, {}, out);
  });
}

}  // extern "C"

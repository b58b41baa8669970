// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlattice/dlattice.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct AlgebraDeleter {
  void operator()(ea_algebra* a) const { ea_algebra_free(a); }
};
using Algebra = std::unique_ptr<ea_algebra, AlgebraDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { ea_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

/// Thrown to unwind with an exit code after printing an error.
struct Exit {
  int code;
};

[[noreturn]] void fail_with_last_error() {
  std::cerr << "error: " << ea_last_error() << "\n";
  throw Exit{kExitInput};
}

void check_status(ea_status s) {
  if (s != EA_OK && s != EA_FAILED) fail_with_last_error();
}

Algebra load(const std::string& path) {
  ea_algebra* a = nullptr;
  check_status(ea_algebra_load(path.c_str(), &a));
  return Algebra(a);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: Format: cannot read '" << path << "'\n";
    throw Exit{kExitInput};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Exit{kExitInput};
  }
  out << text;
}

std::string join_labels(const Json& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ",") + l.get<std::string>();
  return s;
}

void print_checks(const Json& report, const std::string& indent) {
  for (const auto& c : report["checks"]) {
    const std::string status = c["status"];
    std::cout << indent << status << "  " << c["name"].get<std::string>();
    if (c.contains("witness")) {
      const auto& w = c["witness"];
      std::cout << ": " << w["condition"].get<std::string>() << " at (" << join_labels(w["labels"]) << ")";
    }
    if (c.contains("detail")) std::cout << (status == "PASS" ? " " : " [") << c["detail"].get<std::string>()
                                        << (status == "PASS" ? "" : "]");
    std::cout << "\n";
  }
}

void print_report(const Json& report) {
  if (report.contains("summary")) std::cout << report["summary"].get<std::string>() << "\n";
  for (const auto& [name, value] : report["counts"].items()) std::cout << name << ": " << value.dump() << "\n";
  for (const char* key : {"kernel", "partition"})
    if (report.contains(key)) std::cout << key << ": " << report[key].get<std::string>() << "\n";
  for (const char* key : {"dfilters", "congruences"})
    if (report.contains(key))
      for (const auto& item : report[key]) std::cout << "  " << item.get<std::string>() << "\n";
  print_checks(report, "");
  if (report.contains("sections")) {
    for (const auto& s : report["sections"]) {
      const bool ok = s["passed"].get<bool>();
      std::cout << (ok ? "PASS  " : "FAIL  ") << s["subject"].get<std::string>() << " (n=" << s["algebra"]["n"]
                << ", " << s["checks"].size() << " checks)\n";
      if (!ok)
        for (const auto& c : s["checks"])
          if (c["status"] == "FAIL") {
            Json one = {{"checks", Json::array({c})}};
            print_checks(one, "    ");
          }
    }
  }
  std::cout << (report["passed"].get<bool>() ? "all checks passed" : "FAILED") << "\n";
}

int finish(ea_status status, const CString& json, bool as_json) {
  check_status(status);
  const Json report = Json::parse(json.str());
  if (as_json)
    std::cout << json.str();
  else
    print_report(report);
  return status == EA_OK ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for finite D-lattices"};
  app.require_subcommand(1);

  ea_options opts;
  ea_options_default(&opts);
  bool as_json = false;
  std::string algebra_path;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "Print the report as JSON"); };
  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("algebra", algebra_path, "Algebra JSON file")->required();
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--congruence-cap", opts.congruence_cap, "Largest carrier for the partition scan")
        ->capture_default_str();
  };

  // build
  auto* build = app.add_subcommand("build", "Construct a catalog algebra and print its JSON");
  std::string kind;
  int n = 2;
  std::string left_path;
  std::string right_path;
  std::string output = "-";
  build->add_option("--kind", kind, "chain | boolean | mo | product | hsum")
      ->required()
      ->check(CLI::IsMember({"chain", "boolean", "mo", "product", "hsum"}));
  build->add_option("--n,--k", n, "Chain length, number of atoms or number of blocks")->capture_default_str();
  build->add_option("--left", left_path, "First factor or summand (JSON)");
  build->add_option("--right", right_path, "Second factor or summand (JSON)");
  build->add_option("-o,--output", output, "Output file, - for stdout")->capture_default_str();

  auto* check = app.add_subcommand("check", "Verify the effect-algebra identities");
  add_algebra(check);
  add_json(check);

  auto* filters = app.add_subcommand("filters", "Enumerate D-filters");
  std::string dot_path;
  add_algebra(filters);
  add_json(filters);
  filters->add_option("--dot", dot_path, "Write the Hasse diagram of the D-filter lattice (- for stdout)");

  auto* congruences = app.add_subcommand("congruences", "Enumerate D-congruences");
  std::string mode = "brute";
  add_algebra(congruences);
  add_json(congruences);
  add_cap(congruences);
  congruences->add_option("--mode", mode, "brute | filters")
      ->check(CLI::IsMember({"brute", "filters"}))
      ->capture_default_str();

  auto* iso = app.add_subcommand("iso", "Verify the D-filter / D-uniformity isomorphism");
  add_algebra(iso);
  add_json(iso);
  add_cap(iso);

  auto* lattice = app.add_subcommand("lattice", "Verify the D-filter lattice and its distributivity");
  add_algebra(lattice);
  add_json(lattice);
  lattice->add_option("--dot", dot_path, "Write the Hasse diagram (- for stdout)");

  auto* submeasure = app.add_subcommand("submeasure", "k-submeasure checks");
  std::string op;
  std::string data_path;
  submeasure->add_option("op", op, "check | uniformity")->required()->check(CLI::IsMember({"check", "uniformity"}));
  add_algebra(submeasure);
  submeasure->add_option("submeasure", data_path, "Submeasure JSON file")->required();
  add_json(submeasure);
  add_cap(submeasure);

  auto* measure = app.add_subcommand("measure", "Modular measure checks");
  measure->add_option("op", op, "check | uniformity | decompose")
      ->required()
      ->check(CLI::IsMember({"check", "uniformity", "decompose"}));
  add_algebra(measure);
  measure->add_option("measure", data_path, "Measure JSON file")->required();
  add_json(measure);

  auto* suite = app.add_subcommand("suite", "Run every check on the catalog");
  bool timings = false;
  suite->add_option("--max-n", opts.max_n, "Largest catalog algebra")->capture_default_str();
  add_cap(suite);
  suite->add_option("--submeasures", opts.submeasures, "Generated submeasures per algebra")->capture_default_str();
  suite->add_option("--measures", opts.measures, "Generated modular measures per algebra")->capture_default_str();
  suite->add_option("--seed", opts.seed, "Corpus seed")->capture_default_str();
  suite->add_flag("--timings", timings, "Include timings in the report");
  add_json(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  opts.timings = timings ? 1 : 0;

  try {
    if (build->parsed()) {
      ea_algebra* raw = nullptr;
      if (kind == "chain") {
        check_status(ea_catalog_chain(n, &raw));
      } else if (kind == "boolean") {
        check_status(ea_catalog_boolean(n, &raw));
      } else if (kind == "mo") {
        check_status(ea_catalog_mo(n, &raw));
      } else {
        if (left_path.empty() || right_path.empty()) {
          std::cerr << "error: --left and --right are required for " << kind << "\n";
          return kExitInput;
        }
        Algebra l = load(left_path);
        Algebra r = load(right_path);
        check_status(kind == "product" ? ea_catalog_product(l.get(), r.get(), &raw)
                                       : ea_catalog_hsum(l.get(), r.get(), &raw));
      }
      Algebra result(raw);
      CString text;
      check_status(ea_algebra_to_json(result.get(), &text.p));
      write_text(output, text.str());
      return 0;
    }

    if (suite->parsed()) {
      CString out;
      return finish(ea_report_suite(&opts, &out.p), out, as_json);
    }

    Algebra alg = load(algebra_path);
    CString out;
    if (check->parsed()) return finish(ea_report_check(alg.get(), &opts, &out.p), out, as_json);
    if (filters->parsed() || lattice->parsed()) {
      CString dot;
      char** dot_out = dot_path.empty() ? nullptr : &dot.p;
      const ea_status s = filters->parsed() ? ea_report_filters(alg.get(), &opts, &out.p, dot_out)
                                            : ea_report_lattice(alg.get(), &opts, &out.p, dot_out);
      check_status(s);
      if (dot_out) write_text(dot_path, dot.str());
      if (dot_path == "-") return s == EA_OK ? 0 : kExitFailed;
      return finish(s, out, as_json);
    }
    if (congruences->parsed()) {
      const auto m = mode == "brute" ? EA_CONGRUENCES_BRUTE : EA_CONGRUENCES_VIA_FILTERS;
      return finish(ea_report_congruences(alg.get(), m, &opts, &out.p), out, as_json);
    }
    if (iso->parsed()) return finish(ea_report_iso(alg.get(), &opts, &out.p), out, as_json);
    const std::string data = read_text(data_path);
    if (submeasure->parsed()) {
      const auto o = op == "check" ? EA_SUBMEASURE_CHECK : EA_SUBMEASURE_UNIFORMITY;
      return finish(ea_report_submeasure(alg.get(), data.c_str(), o, &opts, &out.p), out, as_json);
    }
    const auto o = op == "check" ? EA_MEASURE_CHECK : op == "uniformity" ? EA_MEASURE_UNIFORMITY : EA_MEASURE_DECOMPOSE;
    return finish(ea_report_measure(alg.get(), data.c_str(), o, &opts, &out.p), out, as_json);
  } catch (const Exit& e) {
    return e.code;
  }
}

// galehull command-line front end. Talks to the library only through the C
// interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galehull/galehull.h"

namespace {

struct PolytopeDeleter {
  void operator()(ghx_polytope* p) const { ghx_polytope_free(p); }
};
struct AnalysisDeleter {
  void operator()(ghx_analysis* a) const { ghx_analysis_free(a); }
};
using PolytopePtr = std::unique_ptr<ghx_polytope, PolytopeDeleter>;
using AnalysisPtr = std::unique_ptr<ghx_analysis, AnalysisDeleter>;

struct Options {
  std::vector<std::string> catalogs;
  std::vector<std::string> files;
  std::string output;
  bool pretty = false;
  bool json = true;
  bool no_oracle = false;
};

// Thrown to unwind with a status after the error has been reported.
struct Failure {
  ghx_status status;
};

void report_error(ghx_status status) {
  std::string err = ghx_last_error();
  if (err.empty()) err = std::string("{\"error\":\"") + ghx_status_name(status) + "\"}";
  std::cerr << err << "\n";
}

void check(ghx_status status) {
  if (status != GHX_OK) {
    report_error(status);
    throw Failure{status};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "{\"error\":\"ParseError\",\"module\":\"cli\",\"message\":\"cannot open " << path << "\"}\n";
    throw Failure{GHX_E_PARSE};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<PolytopePtr> load_inputs(const Options& o, std::size_t expected) {
  std::vector<PolytopePtr> out;
  for (const auto& spec : o.catalogs) {
    ghx_polytope* p = nullptr;
    check(ghx_polytope_from_catalog(spec.c_str(), &p));
    out.emplace_back(p);
  }
  for (const auto& path : o.files) {
    ghx_polytope* p = nullptr;
    check(ghx_polytope_from_json(read_file(path).c_str(), &p));
    out.emplace_back(p);
  }
  if (out.size() != expected) {
    std::cerr << "{\"error\":\"InvalidArgument\",\"module\":\"cli\",\"message\":\"expected " << expected
              << " input(s), got " << out.size() << "\"}\n";
    throw Failure{GHX_E_INVALID_ARGUMENT};
  }
  return out;
}

AnalysisPtr analyze(const ghx_polytope* p) {
  ghx_analysis* a = nullptr;
  check(ghx_analyze(p, &a));
  return AnalysisPtr(a);
}

void write_output(const Options& o, char* text) {
  std::unique_ptr<char, void (*)(char*)> owned(text, ghx_string_free);
  if (o.output.empty()) {
    std::cout << owned.get() << "\n";
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  out << owned.get() << "\n";
}

int flags(const Options& o) { return o.pretty ? GHX_PRETTY : 0; }

void add_input_options(CLI::App* cmd, Options& o, bool two_inputs) {
  cmd->add_option("--catalog", o.catalogs, "Catalog entry, e.g. cube, prism:6, truncated-octahedron")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("input", o.files, two_inputs ? "Input JSON files" : "Input JSON file");
  cmd->add_option("--output", o.output, "Write the report to this path instead of stdout");
  cmd->add_flag("--pretty", o.pretty, "Indented JSON");
  cmd->add_flag("--json", o.json, "Compact JSON (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex hulls of face-vertex incidence vectors of 3-colorable simple polytopes"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Classify the hull and enumerate its face lattice");
  add_input_options(analyze_cmd, o, false);
  auto* verify_cmd = app.add_subcommand("verify", "Analyze and cross-check against the brute-force hull oracle");
  add_input_options(verify_cmd, o, false);
  auto* compare_cmd = app.add_subcommand("compare", "Decide combinatorial equivalence of two hulls");
  add_input_options(compare_cmd, o, true);
  compare_cmd->add_flag("--no-oracle", o.no_oracle, "Skip the lattice-isomorphism cross-check");
  auto* hamilton_cmd = app.add_subcommand("hamilton", "Search for a Hamiltonian cycle of the 1-skeleton");
  add_input_options(hamilton_cmd, o, false);
  auto* catalog_cmd = app.add_subcommand("catalog", "Print a catalog entry as input JSON, or list entries");
  add_input_options(catalog_cmd, o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    char* text = nullptr;
    if (analyze_cmd->parsed()) {
      auto inputs = load_inputs(o, 1);
      auto a = analyze(inputs[0].get());
      check(ghx_analysis_report(a.get(), flags(o), &text));
    } else if (verify_cmd->parsed()) {
      auto inputs = load_inputs(o, 1);
      auto a = analyze(inputs[0].get());
      const ghx_status s = ghx_verify(a.get(), flags(o), &text);
      if (s == GHX_E_VERIFY_FAILED) {
        write_output(o, text);
        report_error(s);
        return ghx_status_exit_code(s);
      }
      check(s);
    } else if (compare_cmd->parsed()) {
      auto inputs = load_inputs(o, 2);
      auto a = analyze(inputs[0].get());
      auto b = analyze(inputs[1].get());
      check(ghx_compare(a.get(), b.get(), o.no_oracle ? 0 : 1, flags(o), &text));
    } else if (hamilton_cmd->parsed()) {
      auto inputs = load_inputs(o, 1);
      check(ghx_hamilton(inputs[0].get(), flags(o), &text));
    } else if (catalog_cmd->parsed()) {
      if (o.catalogs.empty() && o.files.empty()) {
        check(ghx_catalog_names(flags(o), &text));
      } else {
        auto inputs = load_inputs(o, 1);
        check(ghx_polytope_faces_json(inputs[0].get(), flags(o), &text));
      }
    }
    write_output(o, text);
    return 0;
  } catch (const Failure& f) {
    return ghx_status_exit_code(f.status);
  }
}

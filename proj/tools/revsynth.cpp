// Command-line front end: every analysis in the library as a reproducible,
// scriptable report.  Exit codes: 0 success, 1 usage or parse error, 2 domain
// error (specification not reachable, search cap or depth exceeded, library
// too large).

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/closure.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/reports.hpp"
#include "revsynth/search.hpp"
#include "revsynth/sublibraries.hpp"

namespace {

using namespace revsynth;

int exit_code_for(errc code) {
  switch (code) {
    case errc::not_in_generated_group:
    case errc::cap_exceeded:
    case errc::depth_exceeded:
    case errc::library_too_large:
      return 2;
    default:
      return 1;
  }
}

// Exactly one of --lib / --gates names the library.
GateLibrary resolve_library(const std::string& lib, const std::string& gates,
                            int n) {
  if (lib.empty() == gates.empty())
    fail(errc::bad_input, "provide exactly one of --lib and --gates");
  if (!lib.empty()) return standard_library(lib, n);
  return library_from_gates("custom", n, parse_gate_list(gates, n));
}

// A permutation given either in disjoint-cycle notation (leading "("),
// as a comma-separated image list, or as the word "identity".
Permutation parse_spec(const std::string& text, int degree) {
  size_t i = 0;
  while (i < text.size() &&
         std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == text.size()) fail(errc::bad_input, "empty permutation");
  if (text.compare(i, std::string::npos, "identity") == 0)
    return Permutation::identity(degree);
  if (text[i] == '(') return parse_cycles(text, degree);
  Permutation p = parse_images(text);
  if (p.degree() != degree)
    fail(errc::degree_mismatch,
         "image list has " + std::to_string(p.degree()) +
             " entries, the width calls for " + std::to_string(degree));
  return p;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    fail(errc::bad_input, "cannot open output file '" + out_path + "'");
  f << text;
}

struct Options {
  std::vector<std::string> libs;  // census/sublibs accept several
  std::string lib;
  std::string gates;
  std::string show;
  std::string spec;
  std::string format = "text";
  std::string out;
  int n = 0;
  int max_depth = kDefaultMaxDepth;
  int trials = 20;
  std::uint64_t seed = 0;
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format: text, csv, json")
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "write the report to this file");
}

int run_gate(const Options& opt) {
  auto report = make_gate_report(parse_gate(opt.show, opt.n));
  emit(render_gate(report, parse_format(opt.format)), opt.out);
  return 0;
}

int run_order(const Options& opt) {
  auto lib = resolve_library(opt.lib, opt.gates, opt.n);
  emit(render_order(make_order_report(lib), parse_format(opt.format)),
       opt.out);
  return 0;
}

int run_census(const Options& opt) {
  std::vector<GateLibrary> libs;
  if (!opt.libs.empty() && !opt.gates.empty())
    fail(errc::bad_input, "provide exactly one of --lib and --gates");
  if (opt.libs.empty()) {
    libs.push_back(resolve_library("", opt.gates, opt.n));
  } else {
    for (const auto& name : opt.libs)
      libs.push_back(standard_library(name, opt.n));
  }
  std::vector<CensusReport> reports;
  reports.reserve(libs.size());
  for (const auto& lib : libs) reports.push_back(bfs_census(lib));
  emit(render_census(reports, parse_format(opt.format)), opt.out);
  return 0;
}

int run_sublibs(const Options& opt) {
  if (!opt.libs.empty() && !opt.gates.empty())
    fail(errc::bad_input, "provide exactly one of --lib and --gates");
  std::vector<GateLibrary> libs;
  if (opt.libs.empty()) {
    libs.push_back(resolve_library("", opt.gates, opt.n));
  } else {
    for (const auto& name : opt.libs)
      libs.push_back(standard_library(name, opt.n));
  }
  std::vector<SubLibraryReport> reports;
  reports.reserve(libs.size());
  for (const auto& lib : libs) reports.push_back(sublibrary_census(lib));
  emit(render_sublibs(reports, parse_format(opt.format)), opt.out);
  return 0;
}

int run_minimal(const Options& opt) {
  auto lib = resolve_library(opt.lib, opt.gates, opt.n);
  auto subs = minimal_universal_sublibraries(lib);
  emit(render_minimal(lib, subs, parse_format(opt.format)), opt.out);
  return 0;
}

int run_synth(const Options& opt) {
  auto lib = resolve_library(opt.lib, opt.gates, opt.n);
  auto spec = parse_spec(opt.spec, 1 << opt.n);
  auto circuit = synthesize(spec, lib, opt.max_depth);
  SynthReport report{format_cycles(spec), lib.name, format_circuit(circuit),
                     circuit.length()};
  emit(render_synth(report, parse_format(opt.format)), opt.out);
  return 0;
}

int run_randpairs(const Options& opt) {
  auto checks = random_pair_check(opt.n, opt.trials, opt.seed);
  emit(render_randpairs(opt.n, opt.seed, checks, parse_format(opt.format)),
       opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reversible-circuit synthesis and gate-library analysis\n"
      "Gates are written K[wires] with 1-based wires, e.g. T[1,2,3]; "
      "permutations act on truth-table rows 1..2^n."};
  app.require_subcommand(1);
  Options opt;

  auto* gate = app.add_subcommand(
      "gate", "describe one gate: Boolean map, cycles, images, order");
  gate->add_option("--show", opt.show, "gate term, e.g. \"G[1,2,3]\"")
      ->required();
  gate->add_option("--n", opt.n, "circuit width (lines)")->required();
  add_format(gate, opt);

  auto* order = app.add_subcommand(
      "order", "order of the group a library generates, and universality");
  order->add_option("--lib", opt.lib, "library name, e.g. NCT, G, GT");
  order->add_option("--gates", opt.gates, "explicit gate list");
  order->add_option("--n", opt.n, "circuit width (lines)")->required();
  add_format(order, opt);

  auto* census = app.add_subcommand(
      "census", "functions reachable at each circuit length");
  census->add_option("--lib", opt.libs,
                     "library name (repeat for several columns)");
  census->add_option("--gates", opt.gates, "explicit gate list");
  census->add_option("--n", opt.n, "circuit width (lines)")->required();
  add_format(census, opt);

  auto* sublibs = app.add_subcommand(
      "sublibs", "universality census over every gate subset");
  sublibs->add_option("--lib", opt.libs,
                      "library name (repeat for several rows)");
  sublibs->add_option("--gates", opt.gates, "explicit gate list");
  sublibs->add_option("--n", opt.n, "circuit width (lines)")->required();
  add_format(sublibs, opt);

  auto* minimal = app.add_subcommand(
      "minimal", "all universal sub-libraries of the smallest size");
  minimal->add_option("--lib", opt.lib, "library name");
  minimal->add_option("--gates", opt.gates, "explicit gate list");
  minimal->add_option("--n", opt.n, "circuit width (lines)")->required();
  add_format(minimal, opt);

  auto* synth = app.add_subcommand(
      "synth", "shortest circuit realizing a permutation");
  synth->add_option("--spec", opt.spec,
                    "target permutation: cycles \"(7,8)\", images "
                    "\"1,2,...\", or \"identity\"")
      ->required();
  synth->add_option("--lib", opt.lib, "library name");
  synth->add_option("--gates", opt.gates, "explicit gate list");
  synth->add_option("--n", opt.n, "circuit width (lines)")->required();
  synth->add_option("--max-depth", opt.max_depth, "longest circuit to try")
      ->capture_default_str();
  add_format(synth, opt);

  auto* randpairs = app.add_subcommand(
      "randpairs", "universality of random chain-gate pairs");
  randpairs->add_option("--n", opt.n, "circuit width (lines)")->required();
  randpairs->add_option("--trials", opt.trials, "number of sampled pairs")
      ->capture_default_str();
  randpairs->add_option("--seed", opt.seed, "random seed")
      ->capture_default_str();
  add_format(randpairs, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gate->parsed()) return run_gate(opt);
    if (order->parsed()) return run_order(opt);
    if (census->parsed()) return run_census(opt);
    if (sublibs->parsed()) return run_sublibs(opt);
    if (minimal->parsed()) return run_minimal(opt);
    if (synth->parsed()) return run_synth(opt);
    if (randpairs->parsed()) return run_randpairs(opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#pragma once

// Text, CSV and JSON renderings of the analysis results.  Every serializer
// is a pure function of its inputs with fixed formatting (averages to three
// decimals, percentages to two), so repeated runs produce byte-identical
// output.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/search.hpp"
#include "revsynth/stabilizer_chain.hpp"
#include "revsynth/sublibraries.hpp"
#include "revsynth/universality.hpp"

namespace revsynth {

namespace detail {

// num/den as a percentage with two decimals, rounded half away from zero.
inline std::string percent_text(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "0.00";
  std::uint64_t scaled = (num * 10000 + den / 2) / den;
  std::ostringstream out;
  out << scaled / 100 << '.' << std::setw(2) << std::setfill('0')
      << scaled % 100;
  return out.str();
}

// CSV field quoting for values that may contain commas.
inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  fail(errc::bad_input, "unknown format '" + name + "' (text, csv, json)");
}

// --- function-length census ------------------------------------------------

inline std::string census_text(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "library " << r.library << " (width " << r.arity << ")\n";
    out << "  length  functions\n";
    for (size_t d = 0; d < r.counts.size(); ++d)
      out << "  " << std::setw(6) << d << "  " << std::setw(9) << r.counts[d]
          << "\n";
    out << "  total " << r.total() << ", max length " << r.max_length()
        << ", average " << r.average_text() << "\n";
  }
  return out.str();
}

inline std::string census_csv(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << "library,length,functions,average\n";
  for (const auto& r : reports) {
    auto avg = r.average_text();
    for (size_t d = 0; d < r.counts.size(); ++d)
      out << r.library << ',' << d << ',' << r.counts[d] << ',' << avg
          << "\n";
  }
  return out.str();
}

inline std::string census_json(const std::vector<CensusReport>& reports) {
  nlohmann::ordered_json root;
  root["libraries"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.library;
    j["width"] = r.arity;
    j["counts"] = r.counts;
    j["total"] = r.total();
    j["max_length"] = r.max_length();
    j["average"] = r.average_text();
    root["libraries"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

inline std::string render_census(const std::vector<CensusReport>& reports,
                                 ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return census_text(reports);
    case ReportFormat::csv: return census_csv(reports);
    case ReportFormat::json: return census_json(reports);
  }
  fail(errc::bad_input, "unknown format");
}

// --- sub-library census ----------------------------------------------------

inline std::string sublibs_text(const std::vector<SubLibraryReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "library " << r.library << " (" << r.library_size << " gates)\n";
    out << "  sub-libraries " << r.subset_count << ", universal "
        << r.universal_count << " ("
        << detail::percent_text(r.universal_count, r.subset_count) << "%)\n";
    if (r.min_universal_size == 0) {
      out << "  no universal sub-library\n";
    } else {
      out << "  smallest universal size " << r.min_universal_size << ": "
          << r.universal_at_min << " of " << r.subsets_at_min << " ("
          << detail::percent_text(r.universal_at_min, r.subsets_at_min)
          << "%)\n";
    }
    out << "  universal by size:";
    for (auto c : r.universal_by_size) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

inline std::string sublibs_csv(const std::vector<SubLibraryReport>& reports) {
  std::ostringstream out;
  out << "library,gates,sublibraries,universal,utilization_pct,"
         "min_size,universal_at_min,subsets_at_min,at_min_pct\n";
  for (const auto& r : reports) {
    out << r.library << ',' << r.library_size << ',' << r.subset_count << ','
        << r.universal_count << ','
        << detail::percent_text(r.universal_count, r.subset_count) << ','
        << r.min_universal_size << ',' << r.universal_at_min << ','
        << r.subsets_at_min << ','
        << detail::percent_text(r.universal_at_min, r.subsets_at_min) << "\n";
  }
  return out.str();
}

inline std::string sublibs_json(const std::vector<SubLibraryReport>& reports) {
  nlohmann::ordered_json root;
  root["libraries"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.library;
    j["gates"] = r.library_size;
    j["sublibraries"] = r.subset_count;
    j["universal"] = r.universal_count;
    j["utilization_pct"] =
        detail::percent_text(r.universal_count, r.subset_count);
    j["min_universal_size"] = r.min_universal_size;
    j["universal_at_min"] = r.universal_at_min;
    j["subsets_at_min"] = r.subsets_at_min;
    j["universal_by_size"] = r.universal_by_size;
    root["libraries"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

inline std::string render_sublibs(const std::vector<SubLibraryReport>& reports,
                                  ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return sublibs_text(reports);
    case ReportFormat::csv: return sublibs_csv(reports);
    case ReportFormat::json: return sublibs_json(reports);
  }
  fail(errc::bad_input, "unknown format");
}

// --- smallest universal sub-libraries ---------------------------------------

inline std::string minimal_text(const GateLibrary& lib,
                                const std::vector<GateLibrary>& subs) {
  std::ostringstream out;
  out << "library " << lib.name << " (" << lib.size() << " gates)\n";
  if (subs.empty()) {
    out << "  no universal sub-library\n";
    return out.str();
  }
  out << "  smallest universal size " << subs.front().size() << ": "
      << subs.size() << " sub-libraries\n";
  for (const auto& s : subs)
    out << "  " << format_gate_list(s.gates) << "\n";
  return out.str();
}

inline std::string minimal_csv(const GateLibrary& lib,
                               const std::vector<GateLibrary>& subs) {
  std::ostringstream out;
  out << "library,index,gates\n";
  for (size_t i = 0; i < subs.size(); ++i)
    out << lib.name << ',' << i + 1 << ','
        << detail::csv_quote(format_gate_list(subs[i].gates)) << "\n";
  return out.str();
}

inline std::string minimal_json(const GateLibrary& lib,
                                const std::vector<GateLibrary>& subs) {
  nlohmann::ordered_json root;
  root["library"] = lib.name;
  root["min_universal_size"] = subs.empty() ? 0 : subs.front().size();
  root["sublibraries"] = nlohmann::ordered_json::array();
  for (const auto& s : subs) {
    nlohmann::ordered_json gates = nlohmann::ordered_json::array();
    for (const auto& g : s.gates) gates.push_back(format_gate(g));
    root["sublibraries"].push_back(std::move(gates));
  }
  return root.dump(2) + "\n";
}

inline std::string render_minimal(const GateLibrary& lib,
                                  const std::vector<GateLibrary>& subs,
                                  ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return minimal_text(lib, subs);
    case ReportFormat::csv: return minimal_csv(lib, subs);
    case ReportFormat::json: return minimal_json(lib, subs);
  }
  fail(errc::bad_input, "unknown format");
}

// --- random chain-gate pairs -------------------------------------------------

inline std::string randpairs_text(int n, std::uint64_t seed,
                                  const std::vector<PairCheck>& checks) {
  std::ostringstream out;
  out << "chain-gate pairs at width " << n << ", seed " << seed << ", "
      << checks.size() << " trials\n";
  std::uint64_t universal = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    universal += c.universal ? 1 : 0;
    out << "  " << std::setw(3) << i + 1 << ": " << format_gate(c.first)
        << " with " << format_gate(c.second) << " -> "
        << (c.universal ? "universal" : "not universal") << "\n";
  }
  out << "universal " << universal << " of " << checks.size() << "\n";
  return out.str();
}

inline std::string randpairs_csv(int n, std::uint64_t seed,
                                 const std::vector<PairCheck>& checks) {
  std::ostringstream out;
  out << "width,seed,trial,first,second,universal\n";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out << n << ',' << seed << ',' << i + 1 << ','
        << detail::csv_quote(format_gate(c.first)) << ','
        << detail::csv_quote(format_gate(c.second)) << ','
        << (c.universal ? "true" : "false") << "\n";
  }
  return out.str();
}

inline std::string randpairs_json(int n, std::uint64_t seed,
                                  const std::vector<PairCheck>& checks) {
  nlohmann::ordered_json root;
  root["width"] = n;
  root["seed"] = seed;
  root["trials"] = nlohmann::ordered_json::array();
  std::uint64_t universal = 0;
  for (const auto& c : checks) {
    universal += c.universal ? 1 : 0;
    nlohmann::ordered_json j;
    j["first"] = format_gate(c.first);
    j["second"] = format_gate(c.second);
    j["universal"] = c.universal;
    root["trials"].push_back(std::move(j));
  }
  root["universal_count"] = universal;
  return root.dump(2) + "\n";
}

inline std::string render_randpairs(int n, std::uint64_t seed,
                                    const std::vector<PairCheck>& checks,
                                    ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return randpairs_text(n, seed, checks);
    case ReportFormat::csv: return randpairs_csv(n, seed, checks);
    case ReportFormat::json: return randpairs_json(n, seed, checks);
  }
  fail(errc::bad_input, "unknown format");
}

// --- generated-group order ----------------------------------------------------

struct OrderReport {
  std::string library;
  int arity = 0;
  int gate_count = 0;
  std::string order;           // decimal string, can exceed 64 bits
  std::string function_count;  // (2^n)! as a decimal string
  bool universal = false;
};

inline OrderReport make_order_report(const GateLibrary& lib) {
  OrderReport r;
  r.library = lib.name;
  r.arity = lib.arity;
  r.gate_count = lib.size();
  r.order = group_order(lib).get_str();
  r.function_count = reversible_function_count(lib.arity).get_str();
  r.universal = is_universal(lib);
  return r;
}

inline std::string order_text(const OrderReport& r) {
  std::ostringstream out;
  out << "library " << r.library << " (width " << r.arity << ", "
      << r.gate_count << " gates)\n";
  out << "  order " << r.order << "\n";
  out << "  reversible functions " << r.function_count << "\n";
  out << "  " << (r.universal ? "UNIVERSAL" : "NOT UNIVERSAL") << "\n";
  return out.str();
}

inline std::string order_csv(const OrderReport& r) {
  std::ostringstream out;
  out << "library,width,gates,order,functions,universal\n";
  out << r.library << ',' << r.arity << ',' << r.gate_count << ',' << r.order
      << ',' << r.function_count << ','
      << (r.universal ? "true" : "false") << "\n";
  return out.str();
}

inline std::string order_json(const OrderReport& r) {
  nlohmann::ordered_json root;
  root["library"] = r.library;
  root["width"] = r.arity;
  root["gates"] = r.gate_count;
  root["order"] = r.order;
  root["functions"] = r.function_count;
  root["universal"] = r.universal;
  return root.dump(2) + "\n";
}

inline std::string render_order(const OrderReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return order_text(r);
    case ReportFormat::csv: return order_csv(r);
    case ReportFormat::json: return order_json(r);
  }
  fail(errc::bad_input, "unknown format");
}

// --- single-gate description ---------------------------------------------------

struct GateReport {
  std::string gate;
  int arity = 0;
  std::vector<std::string> outputs;  // boolean expression per line
  std::string cycles;
  std::string images;
  std::uint64_t order = 0;
  bool odd = false;
};

inline GateReport make_gate_report(const Gate& g) {
  GateReport r;
  r.gate = format_gate(g);
  r.arity = g.arity;
  r.outputs = boolean_map(g);
  Permutation p = elaborate(g);
  r.cycles = format_cycles(p);
  r.images = format_images(p);
  r.order = order_of(p);
  r.odd = is_odd_permutation(p);
  return r;
}

inline std::string gate_text(const GateReport& r) {
  std::ostringstream out;
  out << "gate " << r.gate << " (width " << r.arity << ")\n";
  out << "  outputs:";
  for (const auto& e : r.outputs) out << ' ' << e << ';';
  out << "\n";
  out << "  cycles " << r.cycles << "\n";
  out << "  images " << r.images << "\n";
  out << "  order " << r.order << ", parity "
      << (r.odd ? "odd" : "even") << "\n";
  return out.str();
}

inline std::string gate_csv(const GateReport& r) {
  std::ostringstream out;
  out << "gate,width,outputs,cycles,images,order,parity\n";
  std::string outputs;
  for (size_t i = 0; i < r.outputs.size(); ++i) {
    if (i) outputs += "; ";
    outputs += r.outputs[i];
  }
  out << detail::csv_quote(r.gate) << ',' << r.arity << ','
      << detail::csv_quote(outputs) << ',' << detail::csv_quote(r.cycles)
      << ',' << detail::csv_quote(r.images) << ',' << r.order << ','
      << (r.odd ? "odd" : "even") << "\n";
  return out.str();
}

inline std::string gate_json(const GateReport& r) {
  nlohmann::ordered_json root;
  root["gate"] = r.gate;
  root["width"] = r.arity;
  root["outputs"] = r.outputs;
  root["cycles"] = r.cycles;
  root["images"] = r.images;
  root["order"] = r.order;
  root["parity"] = r.odd ? "odd" : "even";
  return root.dump(2) + "\n";
}

inline std::string render_gate(const GateReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return gate_text(r);
    case ReportFormat::csv: return gate_csv(r);
    case ReportFormat::json: return gate_json(r);
  }
  fail(errc::bad_input, "unknown format");
}

// --- synthesis result -------------------------------------------------------------

struct SynthReport {
  std::string spec;     // permutation, disjoint cycles
  std::string library;
  std::string circuit;  // gate list or "identity"
  int length = 0;
};

inline std::string synth_text(const SynthReport& r) {
  std::ostringstream out;
  out << "spec " << r.spec << "\n";
  out << "library " << r.library << "\n";
  out << "circuit " << r.circuit << "\n";
  out << "length " << r.length << "\n";
  return out.str();
}

inline std::string synth_csv(const SynthReport& r) {
  std::ostringstream out;
  out << "spec,library,circuit,length\n";
  out << detail::csv_quote(r.spec) << ',' << r.library << ','
      << detail::csv_quote(r.circuit) << ',' << r.length << "\n";
  return out.str();
}

inline std::string synth_json(const SynthReport& r) {
  nlohmann::ordered_json root;
  root["spec"] = r.spec;
  root["library"] = r.library;
  root["circuit"] = r.circuit;
  root["length"] = r.length;
  return root.dump(2) + "\n";
}

inline std::string render_synth(const SynthReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return synth_text(r);
    case ReportFormat::csv: return synth_csv(r);
    case ReportFormat::json: return synth_json(r);
  }
  fail(errc::bad_input, "unknown format");
}

}  // namespace revsynth

#include <cstdlib>
#include <set>

#include "golden_data.hpp"
#include "revsynth/closure.hpp"
#include "revsynth/reports.hpp"
#include "revsynth/sublibraries.hpp"
#include "test_util.hpp"

using namespace revsynth;
using testutil::expect_error;

namespace {

// Independent per-subset verdict: explicit closure of the chosen gates.
std::vector<bool> brute_force_verdicts(const GateLibrary& lib) {
  auto perms = elaborate_all(lib);
  std::vector<bool> universal(std::size_t{1} << lib.size(), false);
  for (std::uint32_t mask = 1; mask < (1u << lib.size()); ++mask) {
    std::vector<Permutation> gens;
    for (int i = 0; i < lib.size(); ++i)
      if (mask & (1u << i)) gens.push_back(perms[static_cast<size_t>(i)]);
    universal[mask] = closure_size(gens, 8) == 40320;
  }
  return universal;
}

}  // namespace

TEST_CASE("sub-library census agrees with explicit closures on every subset") {
  for (const char* name : {"NT", "G"}) {
    auto lib = standard_library(name, 3);
    auto brute = brute_force_verdicts(lib);
    std::uint64_t universal = 0;
    std::vector<std::uint64_t> by_size(static_cast<size_t>(lib.size()) + 1, 0);
    for (std::uint32_t mask = 0; mask < brute.size(); ++mask) {
      if (!brute[mask]) continue;
      ++universal;
      ++by_size[static_cast<size_t>(std::popcount(mask))];
    }
    auto report = sublibrary_census(lib, 1);
    INFO(name);
    CHECK(report.library == lib.name);
    CHECK(report.subset_count == brute.size());
    CHECK(report.universal_count == universal);
    CHECK(report.universal_by_size == by_size);
  }
}

TEST_CASE("sub-library census reproduces the reference tallies") {
  // The two largest libraries (2^18 subsets each) run in the acceptance
  // suite; the mid-sized ones are quick enough to pin here.
  std::set<std::string> small = {"NT", "NP", "NCT", "NCF", "G"};
  for (const auto& row : golden::sublibrary_tallies()) {
    if (!small.count(row.name)) continue;
    auto lib = standard_library(row.name, 3);
    auto report = sublibrary_census(lib, 1);
    INFO(row.name);
    REQUIRE(report.library_size == row.size);
    CHECK(report.subset_count == std::uint64_t{1} << row.size);
    CHECK(report.universal_count == row.universal);
    CHECK(report.min_universal_size == row.min_size);
    CHECK(report.universal_at_min == row.universal_at_min);
    CHECK(report.subsets_at_min == binomial(row.size, row.min_size));
    // Tallies below the minimum are zero and the by-size column adds up.
    std::uint64_t sum = 0;
    for (int card = 0; card <= report.library_size; ++card) {
      auto c = report.universal_by_size[static_cast<size_t>(card)];
      if (card < report.min_universal_size) CHECK(c == 0);
      sum += c;
    }
    CHECK(sum == report.universal_count);
    // The full library is universal, so the top tally is exactly one.
    CHECK(report.universal_by_size.back() == 1);
  }
}

TEST_CASE("smallest universal sub-libraries are minimal universal sets") {
  auto lib = standard_library("NT", 3);
  auto subs = minimal_universal_sublibraries(lib, 1);
  REQUIRE(subs.size() == 3);
  std::set<std::vector<Gate>> seen;
  for (const auto& s : subs) {
    REQUIRE(s.size() == 5);
    CHECK(s.arity == 3);
    seen.insert(s.gates);
    CHECK(closure_size(s) == 40320);
    // Dropping any single gate must break universality.
    for (int skip = 0; skip < s.size(); ++skip) {
      std::vector<Permutation> gens;
      for (int i = 0; i < s.size(); ++i)
        if (i != skip)
          gens.push_back(elaborate(s.gates[static_cast<size_t>(i)]));
      CHECK(closure_size(gens, 8) < 40320);
    }
  }
  CHECK(seen.size() == 3);

  auto np = minimal_universal_sublibraries(standard_library("NP", 3), 1);
  REQUIRE(np.size() == 18);
  for (const auto& s : np) {
    REQUIRE(s.size() == 3);
    CHECK(closure_size(s) == 40320);
  }
}

TEST_CASE("smallest universal chain-gate pairs differ at both chain ends") {
  auto subs = minimal_universal_sublibraries(standard_library("G", 3), 1);
  REQUIRE(subs.size() == 9);
  for (const auto& s : subs) {
    REQUIRE(s.size() == 2);
    const auto& a = s.gates[0].wires;
    const auto& b = s.gates[1].wires;
    CHECK(a.front() != b.front());
    CHECK(a.back() != b.back());
    CHECK(closure_size(s) == 40320);
  }
}

TEST_CASE("libraries without universal subsets report none") {
  for (const char* name : {"C", "P"}) {
    auto report = sublibrary_census(standard_library(name, 3), 1);
    INFO(name);
    CHECK(report.universal_count == 0);
    CHECK(report.min_universal_size == 0);
    CHECK(report.universal_at_min == 0);
    CHECK(report.subsets_at_min == 0);
    CHECK(minimal_universal_sublibraries(standard_library(name, 3), 1)
              .empty());
  }
}

TEST_CASE("sub-library census rejects unsupported libraries") {
  expect_error(errc::unsupported_width,
               [] { sublibrary_census(standard_library("NCT", 4), 1); });
  auto big = standard_library("NCTFP", 3);
  REQUIRE(big.size() == 21);
  expect_error(errc::library_too_large, [&] { sublibrary_census(big, 1); });
}

TEST_CASE("sub-library census is independent of the thread count") {
  auto lib = standard_library("NCT", 3);
  auto one = sublibrary_census(lib, 1);
  auto eight = sublibrary_census(lib, 8);
  CHECK(one.universal_count == eight.universal_count);
  CHECK(one.universal_by_size == eight.universal_by_size);
  CHECK(one.min_universal_size == eight.min_universal_size);
  CHECK(render_sublibs({one}, ReportFormat::text) ==
        render_sublibs({eight}, ReportFormat::text));
  CHECK(render_sublibs({one}, ReportFormat::csv) ==
        render_sublibs({eight}, ReportFormat::csv));
  CHECK(render_sublibs({one}, ReportFormat::json) ==
        render_sublibs({eight}, ReportFormat::json));
}

TEST_CASE("thread count comes from REVSYNTH_THREADS") {
  const char* saved = std::getenv("REVSYNTH_THREADS");
  std::string saved_value = saved ? saved : "";
  unsetenv("REVSYNTH_THREADS");
  CHECK(threads_from_env() == 1);
  setenv("REVSYNTH_THREADS", "8", 1);
  CHECK(threads_from_env() == 8);
  setenv("REVSYNTH_THREADS", "0", 1);
  CHECK(threads_from_env() == 1);
  setenv("REVSYNTH_THREADS", "9999", 1);
  CHECK(threads_from_env() == 64);
  setenv("REVSYNTH_THREADS", "junk", 1);
  CHECK(threads_from_env() == 1);
  if (saved)
    setenv("REVSYNTH_THREADS", saved_value.c_str(), 1);
  else
    unsetenv("REVSYNTH_THREADS");
}

TEST_CASE("random pair checks match explicit closures at width 3") {
  auto checks = random_pair_check(3, 60, 0);
  REQUIRE(checks.size() == 60);
  int universal = 0;
  for (const auto& c : checks) {
    REQUIRE(c.first.kind == GateKind::G);
    REQUIRE(c.second.kind == GateKind::G);
    std::uint64_t size =
        closure_size({elaborate(c.first), elaborate(c.second)}, 8);
    CHECK(c.universal == (size == 40320));
    universal += c.universal ? 1 : 0;
  }
  // Both verdicts occur at this width: 9 of the 15 distinct pairs are
  // universal and repeated draws of the same order never are.
  CHECK(universal > 0);
  CHECK(universal < 60);
}

TEST_CASE("random pair checks are reproducible for a fixed seed") {
  auto a = random_pair_check(6, 10, 0);
  auto b = random_pair_check(6, 10, 0);
  CHECK(randpairs_csv(6, 0, a) == randpairs_csv(6, 0, b));
  int universal = 0;
  for (const auto& c : a) universal += c.universal ? 1 : 0;
  CHECK(universal >= 1);
  auto other = random_pair_check(6, 10, 1);
  CHECK(randpairs_csv(6, 1, other) != randpairs_csv(6, 0, a));
}

TEST_CASE("random pair checks reject bad parameters") {
  expect_error(errc::unsupported_width, [] { random_pair_check(0, 5, 0); });
  expect_error(errc::unsupported_width, [] { random_pair_check(11, 5, 0); });
  expect_error(errc::bad_input, [] { random_pair_check(6, 0, 0); });
}

TEST_CASE("known chain-gate pairs at widths 4 and 5") {
  auto pair_universal = [](const Gate& a, const Gate& b) {
    return is_universal({elaborate(a), elaborate(b)},
                        1 << a.arity);
  };
  CHECK(pair_universal(Gate(GateKind::G, 4, {4, 1, 2, 3}),
                       Gate(GateKind::G, 4, {1, 2, 3, 4})));
  CHECK_FALSE(pair_universal(Gate(GateKind::G, 3, {1, 2, 3}),
                             Gate(GateKind::G, 3, {1, 3, 2})));
  // The five-bit partner written 23451 reads either as the wire list
  // [2,3,4,5,1] or, under the positional-label convention, as [5,1,2,3,4].
  // Both readings give a universal pair with the identity chain.
  Gate straight5(GateKind::G, 5, {1, 2, 3, 4, 5});
  CHECK(pair_universal(straight5, Gate(GateKind::G, 5, {2, 3, 4, 5, 1})));
  CHECK(pair_universal(straight5, g_from_label("23451")));
}

TEST_CASE("report renderings are stable") {
  CHECK(detail::percent_text(1960, 4096) == "47.85");
  CHECK(detail::percent_text(9, 15) == "60.00");
  CHECK(detail::percent_text(21, 495) == "4.24");
  CHECK(detail::percent_text(333, 512) == "65.04");
  CHECK(detail::percent_text(0, 0) == "0.00");
  CHECK(detail::csv_quote("a\"b,c") == "\"a\"\"b,c\"");

  CHECK(parse_format("text") == ReportFormat::text);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(parse_format("json") == ReportFormat::json);
  expect_error(errc::bad_input, [] { parse_format("xml"); });

  auto order = make_order_report(standard_library("T", 3));
  CHECK(order_text(order) ==
        "library T (width 3, 3 gates)\n"
        "  order 24\n"
        "  reversible functions 40320\n"
        "  NOT UNIVERSAL\n");
  CHECK(order_csv(order) ==
        "library,width,gates,order,functions,universal\n"
        "T,3,3,24,40320,false\n");

  auto gate = make_gate_report(parse_gate("T[1,2,3]", 3));
  CHECK(gate_text(gate) ==
        "gate T[1,2,3] (width 3)\n"
        "  outputs: x1; x2; x3 ^ (x1 & x2);\n"
        "  cycles (7,8)\n"
        "  images 1,2,3,4,5,6,8,7\n"
        "  order 2, parity odd\n");

  SynthReport synth{"(7,8)", "NCT", "T[1,2,3]", 1};
  CHECK(synth_text(synth) ==
        "spec (7,8)\n"
        "library NCT\n"
        "circuit T[1,2,3]\n"
        "length 1\n");
  CHECK(synth_csv(synth) ==
        "spec,library,circuit,length\n"
        "\"(7,8)\",NCT,\"T[1,2,3]\",1\n");

  auto checks = random_pair_check(3, 2, 0);
  auto csv = randpairs_csv(3, 0, checks);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "width,seed,trial,first,second,universal");
  auto lib = standard_library("NT", 3);
  auto minimal = minimal_universal_sublibraries(lib, 1);
  auto mcsv = minimal_csv(lib, minimal);
  CHECK(mcsv.substr(0, mcsv.find('\n')) == "library,index,gates");
  CHECK(minimal_json(lib, minimal).find("\"min_universal_size\": 5") !=
        std::string::npos);
}

#include <set>

#include "golden_data.hpp"
#include "revsynth/closure.hpp"
#include "revsynth/stabilizer_chain.hpp"
#include "revsynth/universality.hpp"
#include "test_util.hpp"

using namespace revsynth;
using testutil::expect_error;
using testutil::random_perm;

TEST_CASE("closure sizes of the width-3 libraries") {
  for (const auto& row : golden::closures3()) {
    INFO(row.name);
    CHECK(closure_size(standard_library(row.name, 3)) == row.closure);
  }
  CHECK(closure_size(standard_library("G", 2)) == 24);
  CHECK(closure_size(standard_library("N", 1)) == 2);
}

TEST_CASE("closure enumeration basics") {
  auto elems = closure_elements(standard_library("P", 3));
  CHECK(elems.size() == 5040);
  CHECK(elems[0].is_identity());
  std::set<Permutation> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == elems.size());

  expect_error(errc::cap_exceeded,
               [] { closure_size(standard_library("P", 3), 100); });
  expect_error(errc::degree_mismatch, [] {
    closure_size({Permutation::identity(4), Permutation::identity(8)}, 8);
  });
}

TEST_CASE("stabilizer chain order matches closure on every library") {
  for (const auto& row : golden::closures3()) {
    INFO(row.name);
    auto lib = standard_library(row.name, 3);
    CHECK(group_order(lib) == static_cast<unsigned long>(closure_size(lib)));
  }
}

TEST_CASE("stabilizer chain order on random sub-libraries") {
  auto gates = standard_library("NCPF", 3).gates;
  std::mt19937_64 rng(23);
  for (int it = 0; it < 25; ++it) {
    std::vector<Permutation> gens;
    for (const Gate& g : gates)
      if (rng() % 3 == 0) gens.push_back(elaborate(g));
    if (gens.empty()) continue;
    auto order = group_order(gens, 8);
    CHECK(order == static_cast<unsigned long>(closure_size(gens, 8)));
    // Lagrange: the order divides 8!.
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mpz_class(40320).get_mpz_t(),
                order.get_mpz_t());
    CHECK(r == 0);
  }
}

TEST_CASE("small group orders") {
  CHECK(group_order({}, 8) == 1);
  CHECK(group_order({Permutation::identity(8)}, 8) == 1);
  CHECK(group_order({elaborate(parse_gate("N[1]", 3))}, 8) == 2);
  CHECK(group_order({elaborate(parse_gate("T[1,2,3]", 3))}, 8) == 2);
  CHECK(group_order({elaborate(parse_gate("P[1,2,3]", 3))}, 8) == 4);
}

TEST_CASE("full chain libraries generate everything") {
  CHECK(group_order(standard_library("G", 2)) == factorial_big(4));
  CHECK(group_order(standard_library("G", 3)) == factorial_big(8));
  CHECK(group_order(standard_library("G", 4)) == factorial_big(16));
}

TEST_CASE("chain structure invariants") {
  for (const char* name : {"NCT", "NF", "P"}) {
    INFO(name);
    auto lib = standard_library(name, 3);
    StabilizerChain chain(elaborate_all(lib), 8);
    auto base = chain.base();
    std::set<int> distinct(base.begin(), base.end());
    CHECK(distinct.size() == base.size());
    mpz_class prod = 1;
    for (int l = 0; l < chain.num_levels(); ++l) {
      prod *= static_cast<unsigned long>(chain.orbit_size(l));
      // Strong generators at level l fix all earlier base points.
      for (const auto& g : chain.strong_generators(l))
        for (int e = 0; e < l; ++e)
          CHECK(g[base[static_cast<size_t>(e)]] ==
                base[static_cast<size_t>(e)]);
    }
    CHECK(prod == chain.order());
    // Every generator sifts to the identity.
    for (const auto& g : elaborate_all(lib)) CHECK(chain.contains(g));
  }
}

TEST_CASE("chain construction is deterministic") {
  auto gens = elaborate_all(standard_library("NCF", 3));
  StabilizerChain a(gens, 8), b(gens, 8);
  CHECK(a.base() == b.base());
  REQUIRE(a.num_levels() == b.num_levels());
  for (int l = 0; l < a.num_levels(); ++l) {
    CHECK(a.orbit_size(l) == b.orbit_size(l));
    CHECK(a.strong_generators(l) == b.strong_generators(l));
  }
}

TEST_CASE("membership agrees with explicit closure") {
  auto lib = standard_library("P", 3);
  StabilizerChain chain(elaborate_all(lib), 8);
  auto elems = closure_elements(lib);
  std::set<Permutation> in_group(elems.begin(), elems.end());
  CHECK(chain.contains(Permutation::identity(8)));
  std::mt19937_64 rng(29);
  int outside = 0;
  for (int it = 0; it < 200; ++it) {
    auto p = random_perm(rng, 8);
    bool expected = in_group.count(p) > 0;
    CHECK(chain.contains(p) == expected);
    outside += expected ? 0 : 1;
  }
  CHECK(outside > 0);  // the sample actually exercised both outcomes
  CHECK_FALSE(chain.contains(elaborate(parse_gate("N[1]", 3))));
  expect_error(errc::degree_mismatch,
               [&] { chain.contains(Permutation::identity(4)); });
}

TEST_CASE("reversible function counts") {
  CHECK(reversible_function_count(1) == 2);
  CHECK(reversible_function_count(2) == 24);
  CHECK(reversible_function_count(3) == 40320);
  CHECK(reversible_function_count(4) == mpz_class("20922789888000"));
  expect_error(errc::unsupported_width, [] { reversible_function_count(0); });
}

TEST_CASE("universality at width 3") {
  auto universal = [](const char* name) {
    return is_universal(standard_library(name, 3));
  };
  CHECK(universal("NT"));
  CHECK(universal("NP"));
  CHECK(universal("NCT"));
  CHECK(universal("NCPF"));
  CHECK(universal("G"));
  CHECK_FALSE(universal("N"));
  CHECK_FALSE(universal("C"));
  CHECK_FALSE(universal("P"));
  CHECK_FALSE(universal("NF"));

  CHECK_FALSE(is_universal({}, 8));
  CHECK(is_universal({}, 1));  // the one-row group is trivially complete
  expect_error(errc::degree_mismatch,
               [] { is_universal({Permutation::identity(4)}, 8); });
}

TEST_CASE("chain-gate pairs: universal iff first and last wires both differ") {
  // Exhaustive over all 15 pairs, cross-checked against the closure size.
  // Sharing the first chain wire leaves a group of order 576; sharing the
  // last leaves order 192; everything else generates all 40320 functions.
  auto lib = standard_library("G", 3);
  int universal_pairs = 0;
  for (size_t i = 0; i < lib.gates.size(); ++i) {
    for (size_t j = i + 1; j < lib.gates.size(); ++j) {
      const auto& a = lib.gates[i].wires;
      const auto& b = lib.gates[j].wires;
      std::vector<Permutation> gens{elaborate(lib.gates[i]),
                                    elaborate(lib.gates[j])};
      bool expect = a.front() != b.front() && a.back() != b.back();
      INFO(format_gate(lib.gates[i]) << " with " << format_gate(lib.gates[j]));
      CHECK(is_universal(gens, 8) == expect);
      auto size = closure_size(gens, 8);
      if (expect) {
        CHECK(size == 40320);
        ++universal_pairs;
      } else {
        CHECK(size == (a.front() == b.front() ? 576 : 192));
      }
    }
  }
  CHECK(universal_pairs == 9);
}

TEST_CASE("parity and transitivity helpers") {
  CHECK(is_odd_permutation(parse_cycles("(7,8)", 8)));
  CHECK(is_odd_permutation(parse_cycles("(5,7,6,8)", 8)));
  CHECK_FALSE(is_odd_permutation(parse_cycles("(1,2,3)", 8)));
  CHECK_FALSE(is_odd_permutation(Permutation::identity(8)));
  CHECK_FALSE(is_odd_permutation(parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8)));

  auto full_cycle = parse_cycles("(1,2,3,4,5,6,7,8)", 8);
  CHECK(detail::is_transitive({full_cycle}, 8));
  CHECK_FALSE(detail::is_transitive({parse_cycles("(1,2,3)", 8)}, 8));
  // A lone 8-cycle has blocks (e.g. odd/even positions): imprimitive.
  CHECK_FALSE(detail::is_primitive({full_cycle}, 8));
  CHECK(detail::is_primitive(elaborate_all(standard_library("NCT", 3)), 8));
}

namespace {

// (a, a+1, ..., b) as a permutation of the given degree, 1-based endpoints.
revsynth::Permutation long_cycle(int a, int b, int degree) {
  std::string text = "(";
  for (int x = a; x <= b; ++x) {
    if (x > a) text += ',';
    text += std::to_string(x);
  }
  text += ')';
  return revsynth::parse_cycles(text, degree);
}

}  // namespace

TEST_CASE("universality certificates at degree 64") {
  // Two chain gates on 6 lines generate everything (checked again at the
  // acceptance level through the random-pair sweep).
  CHECK(is_universal({elaborate(g_from_label("234561")),
                      elaborate(g_from_label("514326"))},
                     64));
  // A single chain gate only generates a cyclic group.
  CHECK_FALSE(is_universal({elaborate(g_from_label("123456"))}, 64));
  // 3-cycle plus 63-cycle: the alternating group -- everything even, so the
  // odd-generator branch of the certificate must reject it.
  auto rotate = long_cycle(2, 64, 64);
  auto three = parse_cycles("(1,2,3)", 64);
  CHECK_FALSE(is_universal({three, rotate}, 64));
  // Adding a transposition tips it over to the full symmetric group.
  auto swap2 = parse_cycles("(1,2)", 64);
  CHECK(is_universal({three, rotate, swap2}, 64));
  // Intransitive: nothing maps line-1-off onto line-1-on states.
  CHECK_FALSE(is_universal({elaborate(Gate(GateKind::C, 6, {1, 2}))}, 64));
}

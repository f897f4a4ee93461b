#pragma once

// Universality of a gate library: does it generate ALL permutations of the
// 2^n truth-table rows?
//
// Up to degree 63 this is decided by comparing the exact stabilizer-chain
// order with degree!.  From degree 64 on, a full chain for the symmetric
// group gets expensive, so the test switches to an exact certificate route:
//   1. transitivity (necessary),
//   2. primitivity via block closures (necessary: the symmetric group is
//      primitive and any block system certifies a proper subgroup),
//   3. a witness element with a cycle of prime length p, degree/2 < p <=
//      degree-3: a primitive group containing a p-cycle with p <= degree-3
//      contains the alternating group (Jordan), and the witness powers to a
//      p-cycle because no other cycle of the same element can have length
//      divisible by p;
//   4. given the alternating group, the library is universal iff some
//      generator is an odd permutation.
// The witness search walks a deterministic pseudo-random product pool, so
// results are reproducible.  If no witness turns up (primitive non-giant
// groups, which are tiny by comparison), the stabilizer chain decides.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/stabilizer_chain.hpp"

namespace revsynth {

// Number of reversible functions on n lines: (2^n)!.
inline mpz_class reversible_function_count(int n) {
  if (n < 1 || n > kMaxArity)
    fail(errc::unsupported_width,
         "width " + std::to_string(n) + " not supported");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), 1ul << n);
  return f;
}

inline mpz_class factorial_big(std::uint64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline bool is_odd_permutation(const Permutation& p) {
  int transpositions = 0;
  for (const auto& cyc : cycles_of(p))
    transpositions += static_cast<int>(cyc.size()) - 1;
  return transpositions % 2 != 0;
}

namespace detail {

inline bool is_transitive(const std::vector<Permutation>& gens, int degree) {
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  std::vector<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      int b = g[a];
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        ++reached;
        queue.push_back(b);
      }
    }
  }
  return reached == degree;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

// Size of the minimal block (of a block system) containing {0, seed} for a
// transitive group: close {0, seed} under "images of merged pairs get
// merged".  Full degree means no proper block through that pair.
inline int block_closure_size(const std::vector<Permutation>& gens, int degree,
                              int seed) {
  UnionFind uf(degree);
  std::vector<std::pair<int, int>> todo{{0, seed}};
  uf.unite(0, seed);
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    for (const auto& g : gens)
      if (uf.unite(g[a], g[b])) todo.emplace_back(g[a], g[b]);
  }
  int root = uf.find(0);
  int size = 0;
  for (int x = 0; x < degree; ++x)
    if (uf.find(x) == root) ++size;
  return size;
}

inline bool is_primitive(const std::vector<Permutation>& gens, int degree) {
  for (int seed = 1; seed < degree; ++seed)
    if (block_closure_size(gens, degree, seed) != degree) return false;
  return true;
}

inline bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Deterministic pseudo-random walk over products of the generators, looking
// for an element with a prime cycle length in (degree/2, degree-3].
inline bool has_giant_witness(const std::vector<Permutation>& gens,
                              int degree) {
  std::mt19937_64 rng(0x5eed'c1a55ull);
  size_t pool_size = std::max<size_t>(gens.size(), 8);
  std::vector<Permutation> pool(pool_size);
  for (size_t i = 0; i < pool_size; ++i) pool[i] = gens[i % gens.size()];
  Permutation tmp;
  auto mix = [&]() -> const Permutation& {
    size_t i = rng() % pool_size;
    size_t j = rng() % (pool_size - 1);
    if (j >= i) ++j;
    compose_into(tmp, pool[i], pool[j]);
    std::swap(pool[i], tmp);
    return pool[i];
  };
  for (int burn = 0; burn < 64; ++burn) mix();
  for (int trial = 0; trial < 512; ++trial) {
    const Permutation& w = mix();
    for (const auto& cyc : cycles_of(w)) {
      auto len = static_cast<std::uint32_t>(cyc.size());
      if (2 * len > static_cast<std::uint32_t>(degree) &&
          len + 3 <= static_cast<std::uint32_t>(degree) && is_prime_u32(len))
        return true;
    }
  }
  return false;
}

}  // namespace detail

inline constexpr int kGiantCertificateDegree = 64;

inline bool is_universal(const std::vector<Permutation>& gens, int degree) {
  std::vector<Permutation> moving;
  for (const auto& g : gens) {
    if (g.degree() != degree)
      fail(errc::degree_mismatch, "generator degree " +
                                      std::to_string(g.degree()) +
                                      " does not match " +
                                      std::to_string(degree));
    if (!g.is_identity()) moving.push_back(g);
  }
  if (moving.empty()) return degree <= 1;
  if (degree < kGiantCertificateDegree)
    return StabilizerChain(moving, degree).order() ==
           factorial_big(static_cast<std::uint64_t>(degree));

  if (!detail::is_transitive(moving, degree)) return false;
  if (!detail::is_primitive(moving, degree)) return false;
  if (detail::has_giant_witness(moving, degree)) {
    for (const auto& g : moving)
      if (is_odd_permutation(g)) return true;
    return false;  // everything even: the alternating group, not all of S
  }
  // No witness: a small primitive group; the exact chain settles it.
  return StabilizerChain(moving, degree).order() ==
         factorial_big(static_cast<std::uint64_t>(degree));
}

inline bool is_universal(const GateLibrary& lib) {
  return is_universal(elaborate_all(lib), 1 << lib.arity);
}

}  // namespace revsynth

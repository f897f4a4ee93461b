#pragma once

// Exhaustive universality census over all 2^k sub-libraries of a width-3
// library, the list of smallest universal sub-libraries, and seeded random
// chain-gate pair checks at larger widths.
//
// The subset sweep walks cardinalities in ascending order so that
// monotonicity prunes most of the lattice: a superset of a universal subset
// is universal without any group computation.  Two cheap exact filters
// (transitivity of the generated group on the 8 rows, and all-generators-even
// which traps the subset inside the alternating group) dispatch most
// non-universal subsets; the stabilizer chain decides the rest.
//
// REVSYNTH_THREADS (default 1) splits each cardinality level into disjoint
// chunks; verdicts only read smaller cardinalities, so results are identical
// for any thread count.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/universality.hpp"

namespace revsynth {

inline constexpr int kMaxCensusGates = 20;

inline int threads_from_env() {
  const char* v = std::getenv("REVSYNTH_THREADS");
  if (!v) return 1;
  int t = std::atoi(v);
  if (t < 1) return 1;
  return t > 64 ? 64 : t;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

struct SubLibraryReport {
  std::string library;
  int library_size = 0;
  std::uint64_t subset_count = 0;
  std::uint64_t universal_count = 0;
  int min_universal_size = 0;           // 0 when nothing is universal
  std::uint64_t universal_at_min = 0;
  std::uint64_t subsets_at_min = 0;     // choose(library_size, min size)
  std::vector<std::uint64_t> universal_by_size;  // index = cardinality

  double utilization() const {
    return static_cast<double>(universal_count) /
           static_cast<double>(subset_count);
  }
};

namespace detail {

// Per-subset universality verdicts for all 2^k gate subsets.
class SubsetVerdicts {
 public:
  SubsetVerdicts(const GateLibrary& lib, int threads) {
    if (lib.arity != 3)
      fail(errc::unsupported_width,
           "sub-library analysis is defined for width 3, got width " +
               std::to_string(lib.arity));
    if (lib.size() > kMaxCensusGates)
      fail(errc::library_too_large,
           "sub-library analysis handles at most " +
               std::to_string(kMaxCensusGates) + " gates, got " +
               std::to_string(lib.size()));
    k_ = lib.size();
    perms_ = elaborate_all(lib);
    odd_.reserve(perms_.size());
    for (const auto& p : perms_) odd_.push_back(is_odd_permutation(p));
    verdict_.assign(std::uint64_t{1} << k_, kUnknown);
    verdict_[0] = kNonUniversal;  // the empty subset generates only identity
    if (threads < 1) threads = 1;
    sweep(threads);
  }

  bool universal(std::uint32_t mask) const {
    return verdict_[mask] == kUniversal;
  }
  int gate_count() const { return k_; }

 private:
  static constexpr std::uint8_t kUnknown = 0, kNonUniversal = 1,
                                kUniversal = 2;

  void decide(std::uint32_t mask) {
    // Monotone shortcut: any universal co-atom settles it.
    for (int i = 0; i < k_; ++i) {
      std::uint32_t bit = 1u << i;
      if ((mask & bit) && verdict_[mask ^ bit] == kUniversal) {
        verdict_[mask] = kUniversal;
        return;
      }
    }
    // Transitivity on the 8 rows is necessary.
    int parent[8];
    for (int x = 0; x < 8; ++x) parent[x] = x;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int classes = 8;
    bool any_odd = false;
    for (int i = 0; i < k_; ++i) {
      if (!(mask & (1u << i))) continue;
      any_odd |= odd_[static_cast<size_t>(i)];
      const auto& p = perms_[static_cast<size_t>(i)];
      for (int x = 0; x < 8; ++x) {
        int a = find(x), b = find(p[x]);
        if (a != b) {
          parent[a] = b;
          --classes;
        }
      }
    }
    if (classes != 1 || !any_odd) {
      // Intransitive, or trapped in the alternating group.
      verdict_[mask] = kNonUniversal;
      return;
    }
    std::vector<Permutation> gens;
    for (int i = 0; i < k_; ++i)
      if (mask & (1u << i)) gens.push_back(perms_[static_cast<size_t>(i)]);
    verdict_[mask] = StabilizerChain(gens, 8).order() == 40320
                         ? kUniversal
                         : kNonUniversal;
  }

  void sweep(int threads) {
    for (int card = 1; card <= k_; ++card) {
      // All masks of this cardinality, ascending (Gosper's hack).
      std::vector<std::uint32_t> level;
      level.reserve(binomial(k_, card));
      std::uint32_t v = (1u << card) - 1;
      std::uint32_t end = 1u << k_;
      while (v < end) {
        level.push_back(v);
        std::uint32_t c = v & (~v + 1), r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
      }
      auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) decide(level[i]);
      };
      if (threads == 1 || level.size() < 64) {
        work(0, level.size());
      } else {
        std::vector<std::thread> pool;
        size_t chunk = (level.size() + static_cast<size_t>(threads) - 1) /
                       static_cast<size_t>(threads);
        for (int t = 0; t < threads; ++t) {
          size_t lo = static_cast<size_t>(t) * chunk;
          if (lo >= level.size()) break;
          size_t hi = std::min(level.size(), lo + chunk);
          pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
      }
    }
  }

  int k_ = 0;
  std::vector<Permutation> perms_;
  std::vector<bool> odd_;
  std::vector<std::uint8_t> verdict_;
};

}  // namespace detail

inline SubLibraryReport sublibrary_census(const GateLibrary& lib,
                                          int threads = threads_from_env()) {
  detail::SubsetVerdicts verdicts(lib, threads);
  int k = verdicts.gate_count();
  SubLibraryReport report;
  report.library = lib.name;
  report.library_size = k;
  report.subset_count = std::uint64_t{1} << k;
  report.universal_by_size.assign(static_cast<size_t>(k) + 1, 0);
  for (std::uint64_t mask = 0; mask < report.subset_count; ++mask) {
    if (!verdicts.universal(static_cast<std::uint32_t>(mask))) continue;
    ++report.universal_count;
    ++report.universal_by_size[static_cast<size_t>(
        std::popcount(static_cast<std::uint32_t>(mask)))];
  }
  for (int card = 1; card <= k; ++card) {
    if (report.universal_by_size[static_cast<size_t>(card)] > 0) {
      report.min_universal_size = card;
      report.universal_at_min =
          report.universal_by_size[static_cast<size_t>(card)];
      report.subsets_at_min = binomial(k, card);
      break;
    }
  }
  return report;
}

// All universal sub-libraries of the minimum universal cardinality, in
// ascending gate-index order; empty when the library itself is not universal.
inline std::vector<GateLibrary> minimal_universal_sublibraries(
    const GateLibrary& lib, int threads = threads_from_env()) {
  detail::SubsetVerdicts verdicts(lib, threads);
  int k = verdicts.gate_count();
  int min_size = 0;
  std::vector<std::uint32_t> hits;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (!verdicts.universal(mask)) continue;
    int card = std::popcount(mask);
    if (min_size == 0 || card < min_size) {
      min_size = card;
      hits.clear();
    }
    if (card == min_size) hits.push_back(mask);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<GateLibrary> out;
  for (std::uint32_t mask : hits) {
    std::vector<Gate> gates;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) gates.push_back(lib.gates[static_cast<size_t>(i)]);
    out.push_back(GateLibrary{lib.name, lib.arity, std::move(gates)});
  }
  return out;
}

struct PairCheck {
  Gate first;
  Gate second;
  bool universal = false;
};

namespace detail {

// Hand-rolled Fisher-Yates so sampled chain orders do not depend on the
// standard library's shuffle implementation.
inline std::vector<int> random_chain_order(std::mt19937_64& rng, int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(w[static_cast<size_t>(i)], w[j]);
  }
  return w;
}

}  // namespace detail

// Samples `trials` pairs of full-width chain gates at width n and reports
// whether each pair alone is universal.  Same (n, trials, seed) always yields
// the same pairs and verdicts.
inline std::vector<PairCheck> random_pair_check(int n, int trials,
                                                std::uint64_t seed) {
  if (n < 1 || n > 10)
    fail(errc::unsupported_width,
         "random pair checks support widths 1..10, got " + std::to_string(n));
  if (trials < 1) fail(errc::bad_input, "need at least one trial");
  std::mt19937_64 rng(seed);
  std::vector<PairCheck> out;
  out.reserve(static_cast<size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Gate a(GateKind::G, n, detail::random_chain_order(rng, n));
    Gate b(GateKind::G, n, detail::random_chain_order(rng, n));
    bool universal =
        is_universal({elaborate(a), elaborate(b)}, 1 << n);
    out.push_back(PairCheck{std::move(a), std::move(b), universal});
  }
  return out;
}

}  // namespace revsynth

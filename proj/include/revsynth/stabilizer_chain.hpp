#pragma once

// Deterministic Schreier-Sims stabilizer chain.  Builds, for a list of
// generators, a base b_0, b_1, ... and per-level strong generator sets such
// that level k generates the pointwise stabilizer of b_0..b_(k-1).  Every
// Schreier generator is verified by sifting, so order() and contains() are
// exact; no randomization is involved and the construction is reproducible
// bit for bit.
//
// Bases are chosen greedily: each new level stabilizes the smallest point
// moved by the residue that forced the level into existence.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

class StabilizerChain {
 public:
  StabilizerChain(std::vector<Permutation> generators, int degree)
      : degree_(degree) {
    std::vector<Permutation> gens;
    for (auto& g : generators) {
      if (g.degree() != degree_)
        fail(errc::degree_mismatch, "generator degree " +
                                        std::to_string(g.degree()) +
                                        " does not match " +
                                        std::to_string(degree_));
      if (!g.is_identity()) gens.push_back(std::move(g));
    }
    if (gens.empty()) return;  // trivial group, no levels

    add_level(smallest_moved(gens));
    for (auto& g : gens) push_generator(levels_[0], std::move(g));
    verify_all();
  }

  int degree() const { return degree_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& lv : levels_) b.push_back(lv.beta);
    return b;
  }

  std::uint64_t orbit_size(int level) const {
    return levels_[static_cast<size_t>(level)].orbit.size();
  }

  const std::vector<Permutation>& strong_generators(int level) const {
    return levels_[static_cast<size_t>(level)].gens;
  }

  mpz_class order() const {
    mpz_class n = 1;
    for (const auto& lv : levels_)
      n *= static_cast<unsigned long>(lv.orbit.size());
    return n;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      fail(errc::degree_mismatch, "element degree " +
                                      std::to_string(p.degree()) +
                                      " does not match " +
                                      std::to_string(degree_));
    Permutation r = p;
    strip(r, 0);
    return r.is_identity();
  }

 private:
  struct Level {
    int beta = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    std::vector<Point> orbit;            // BFS order, orbit[0] == beta
    std::vector<int> pos;                // point -> orbit index, or -1
    std::vector<Permutation> trans;      // coset rep: beta -> orbit[i]
    std::vector<Permutation> trans_inv;
  };

  int smallest_moved(const std::vector<Permutation>& gens) const {
    for (int x = 0; x < degree_; ++x)
      for (const auto& g : gens)
        if (g[x] != x) return x;
    return 0;  // unreachable: callers pass non-identity generators
  }

  void add_level(int beta) {
    Level lv;
    lv.beta = beta;
    levels_.push_back(std::move(lv));
  }

  static void push_generator(Level& lv, Permutation g) {
    lv.gens_inv.push_back(inverse(g));
    lv.gens.push_back(std::move(g));
  }

  void recompute_orbit(Level& lv) const {
    lv.orbit.assign(1, static_cast<Point>(lv.beta));
    lv.pos.assign(static_cast<size_t>(degree_), -1);
    lv.pos[static_cast<size_t>(lv.beta)] = 0;
    lv.trans.assign(1, Permutation::identity(degree_));
    lv.trans_inv.assign(1, Permutation::identity(degree_));
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
      Point a = lv.orbit[head];
      for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
        Point b = lv.gens[gi][a];
        if (lv.pos[b] < 0) {
          lv.pos[b] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(b);
          lv.trans.push_back(compose(lv.trans[head], lv.gens[gi]));
          lv.trans_inv.push_back(inverse(lv.trans.back()));
        }
      }
    }
  }

  // Strips p through levels [from, num_levels); on return p is the residue.
  // Returns the level whose orbit rejected p, or num_levels if p sifted
  // through everywhere (residue identity iff p was in the group).
  int strip(Permutation& p, int from) const {
    Permutation tmp;
    for (size_t l = static_cast<size_t>(from); l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      int at = lv.pos[p[lv.beta]];
      if (at < 0) return static_cast<int>(l);
      compose_into(tmp, p, lv.trans_inv[static_cast<size_t>(at)]);
      std::swap(tmp, p);
    }
    return num_levels();
  }

  // Verifies every Schreier generator level by level, adding residues as new
  // strong generators (and new base points) until the chain is closed.
  void verify_all() {
    Permutation us, g;
    int i = 0;
    while (i >= 0) {
      Level& lv = levels_[static_cast<size_t>(i)];
      recompute_orbit(lv);
      bool complete = true;
      for (size_t oi = 0; complete && oi < lv.orbit.size(); ++oi) {
        for (size_t si = 0; complete && si < lv.gens.size(); ++si) {
          compose_into(us, lv.trans[oi], lv.gens[si]);
          int at = lv.pos[us[lv.beta]];
          compose_into(g, us, lv.trans_inv[static_cast<size_t>(at)]);
          if (g.is_identity()) continue;
          Permutation h = g;
          int j = strip(h, i + 1);
          if (h.is_identity()) continue;
          if (j == num_levels()) add_level(smallest_moved({h}));
          for (int l = i + 1; l <= j; ++l)
            push_generator(levels_[static_cast<size_t>(l)], h);
          complete = false;
          i = j;  // the new generator invalidates deeper levels first
        }
      }
      if (complete) --i;
    }
  }

  int degree_ = 0;
  std::vector<Level> levels_;
};

inline mpz_class group_order(const std::vector<Permutation>& generators,
                             int degree) {
  return StabilizerChain(generators, degree).order();
}

inline mpz_class group_order(const GateLibrary& lib) {
  return group_order(elaborate_all(lib), 1 << lib.arity);
}

}  // namespace revsynth

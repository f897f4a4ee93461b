#pragma once

// Exact minimum-circuit-size analysis over the Cayley graph of a gate
// library: bfs_census() counts, for every length L, how many functions have
// a shortest realization of exactly L gates; Synthesizer reconstructs one
// shortest circuit per specification (the lexicographically smallest in
// library gate order among all shortest ones).
//
// Width 3 and below runs on a dense distance table indexed by Lehmer rank.
// Larger widths use membership-checked bidirectional meet-in-the-middle,
// which is exact but only practical for specifications of modest distance.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/closure.hpp"
#include "revsynth/errors.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/stabilizer_chain.hpp"

namespace revsynth {

inline constexpr int kDefaultMaxDepth = 10;
inline constexpr std::uint8_t kUnreached = 0xff;

namespace detail {

// Dense Cayley-graph BFS for degree <= 11: dist[rank(p)] = shortest word
// length, kUnreached outside the generated group.  Also returns the per-layer
// counts.  The visit order (frontier order, generators in library order) is
// fixed, so everything downstream is deterministic.
inline std::pair<std::vector<std::uint8_t>, std::vector<std::uint64_t>>
distance_table(const std::vector<Permutation>& gens, int degree,
               std::uint64_t cap) {
  std::vector<std::uint8_t> dist(factorial_u64(degree), kUnreached);
  std::vector<std::uint64_t> counts;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  dist[rank(frontier[0])] = 0;
  std::uint64_t seen = 1;
  Permutation tmp;
  for (std::uint8_t layer = 0; !frontier.empty(); ++layer) {
    counts.push_back(frontier.size());
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        compose_into(tmp, p, g);
        auto r = rank(tmp);
        if (dist[r] == kUnreached) {
          if (++seen > cap)
            fail(errc::cap_exceeded, "generated group exceeds cap of " +
                                         std::to_string(cap) + " elements");
          dist[r] = static_cast<std::uint8_t>(layer + 1);
          next.push_back(tmp);
        }
      }
    }
    frontier = std::move(next);
  }
  return {std::move(dist), std::move(counts)};
}

}  // namespace detail

struct CensusReport {
  std::string library;
  int arity = 0;
  std::vector<std::uint64_t> counts;  // counts[L] = functions of distance L

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  int max_length() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t weighted_sum() const {
    std::uint64_t w = 0;
    for (size_t l = 0; l < counts.size(); ++l) w += l * counts[l];
    return w;
  }
  double average() const {
    return static_cast<double>(weighted_sum()) / static_cast<double>(total());
  }
  // Exact rational average truncated to `decimals` places, the convention
  // the reference tables use (5.8655 prints as "5.865").
  std::string average_text(int decimals = 3) const {
    std::uint64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    std::uint64_t num = weighted_sum() * scale;
    std::uint64_t den = total();
    std::uint64_t q = num / den;  // truncated, the reference-table convention
    std::string digits = std::to_string(q % scale);
    digits.insert(0, static_cast<size_t>(decimals) - digits.size(), '0');
    return std::to_string(q / scale) + "." + digits;
  }
};

inline CensusReport bfs_census(const GateLibrary& lib,
                               std::uint64_t cap = kDefaultClosureCap) {
  int degree = 1 << lib.arity;
  auto gens = elaborate_all(lib);
  CensusReport report{lib.name, lib.arity, {}};
  if (degree <= 11) {
    report.counts = detail::distance_table(gens, degree, cap).second;
    return report;
  }
  // Hashed BFS for wider circuits; exact but bounded by the cap.
  std::unordered_map<Permutation, std::uint8_t, PermHash> dist;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  dist.emplace(frontier[0], 0);
  Permutation tmp;
  for (std::uint8_t layer = 0; !frontier.empty(); ++layer) {
    report.counts.push_back(frontier.size());
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        compose_into(tmp, p, g);
        if (dist.emplace(tmp, static_cast<std::uint8_t>(layer + 1)).second) {
          if (dist.size() > cap)
            fail(errc::cap_exceeded, "generated group exceeds cap of " +
                                         std::to_string(cap) + " elements");
          next.push_back(tmp);
        }
      }
    }
    frontier = std::move(next);
  }
  return report;
}

class Synthesizer {
 public:
  explicit Synthesizer(GateLibrary lib, std::uint64_t cap = kDefaultClosureCap)
      : lib_(std::move(lib)), degree_(1 << lib_.arity), cap_(cap) {
    perms_ = elaborate_all(lib_);
    for (const auto& p : perms_) inverses_.push_back(inverse(p));
    if (degree_ <= 8) {
      dist_ = detail::distance_table(perms_, degree_, cap_).first;
    } else {
      chain_.emplace(perms_, degree_);
    }
  }

  const GateLibrary& library() const { return lib_; }

  // One shortest realization of `spec`, lexicographically smallest by gate
  // index among all shortest ones.
  Circuit run(const Permutation& spec, int max_depth = kDefaultMaxDepth) const {
    if (spec.degree() != degree_)
      fail(errc::degree_mismatch,
           "specification degree " + std::to_string(spec.degree()) +
               " does not match width " + std::to_string(lib_.arity));
    return degree_ <= 8 ? run_table(spec, max_depth)
                        : run_bidirectional(spec, max_depth);
  }

 private:
  Circuit run_table(const Permutation& spec, int max_depth) const {
    std::uint8_t d = dist_[rank(spec)];
    if (d == kUnreached)
      fail(errc::not_in_generated_group,
           "the library cannot realize this specification");
    if (d > max_depth)
      fail(errc::depth_exceeded, "shortest circuit needs " + std::to_string(d) +
                                     " gates, limit is " +
                                     std::to_string(max_depth));
    Circuit out{lib_.arity, {}};
    Permutation rest = spec, tmp;
    for (int remaining = d; remaining > 0; --remaining) {
      bool found = false;
      for (size_t gi = 0; gi < perms_.size() && !found; ++gi) {
        compose_into(tmp, inverses_[gi], rest);  // peel the first gate
        if (dist_[rank(tmp)] == remaining - 1) {
          out.gates.push_back(lib_.gates[gi]);
          std::swap(rest, tmp);
          found = true;
        }
      }
      if (!found)
        throw std::logic_error("distance table is inconsistent");
    }
    return out;
  }

  struct Entry {
    int dist = 0;
    std::vector<std::uint16_t> word;  // gate indices
  };

  Circuit run_bidirectional(const Permutation& spec, int max_depth) const {
    if (!chain_->contains(spec))
      fail(errc::not_in_generated_group,
           "the library cannot realize this specification");
    // Forward BFS layers, each permutation keeping the lex-least shortest
    // word: expanding the frontier in discovery order with generators in
    // library order yields words in (length, lex) order, so first wins.
    std::unordered_map<Permutation, Entry, PermHash> seen;
    std::vector<std::vector<Permutation>> layers{{Permutation::identity(degree_)}};
    seen.emplace(layers[0][0], Entry{});
    Permutation tmp;
    auto grow = [&](int depth) {
      while (static_cast<int>(layers.size()) <= depth) {
        const auto& prev = layers.back();
        std::vector<Permutation> next;
        for (const auto& p : prev) {
          const Entry& pe = seen.at(p);
          for (size_t gi = 0; gi < perms_.size(); ++gi) {
            compose_into(tmp, p, perms_[gi]);
            if (seen.count(tmp)) continue;
            if (seen.size() + 1 > cap_)
              fail(errc::cap_exceeded, "search frontier exceeds cap of " +
                                           std::to_string(cap_) + " elements");
            Entry e{pe.dist + 1, pe.word};
            e.word.push_back(static_cast<std::uint16_t>(gi));
            seen.emplace(tmp, std::move(e));
            next.push_back(tmp);
          }
        }
        layers.push_back(std::move(next));
      }
    };
    Permutation needed, inv_f;
    for (int total = 0; total <= max_depth; ++total) {
      int lf = (total + 1) / 2, lb = total / 2;
      grow(lf);
      // spec = f * b with dist(f) == lf, dist(b) == lb; candidates are
      // word(f) ++ word(b), minimized lexicographically.
      const std::vector<std::uint16_t>* best_f = nullptr;
      const std::vector<std::uint16_t>* best_b = nullptr;
      for (const auto& f : layers[static_cast<size_t>(lf)]) {
        inverse_into(inv_f, f);
        compose_into(needed, inv_f, spec);
        auto it = seen.find(needed);
        if (it == seen.end() || it->second.dist != lb) continue;
        const auto& wf = seen.at(f).word;
        const auto& wb = it->second.word;
        // Compare as concatenations; both halves have fixed lengths lf and
        // lb, so comparing half by half matches concatenation order.
        bool better = !best_f || (wf != *best_f ? wf < *best_f : wb < *best_b);
        if (better) {
          best_f = &wf;
          best_b = &wb;
        }
      }
      if (best_f) {
        Circuit out{lib_.arity, {}};
        for (auto gi : *best_f) out.gates.push_back(lib_.gates[gi]);
        for (auto gi : *best_b) out.gates.push_back(lib_.gates[gi]);
        return out;
      }
    }
    fail(errc::depth_exceeded,
         "no circuit within " + std::to_string(max_depth) + " gates");
  }

  GateLibrary lib_;
  int degree_;
  std::uint64_t cap_;
  std::vector<Permutation> perms_, inverses_;
  std::vector<std::uint8_t> dist_;        // degree <= 8
  std::optional<StabilizerChain> chain_;  // degree > 8
};

inline Circuit synthesize(const Permutation& spec, const GateLibrary& lib,
                          int max_depth = kDefaultMaxDepth) {
  return Synthesizer(lib).run(spec, max_depth);
}

}  // namespace revsynth

#pragma once

// Exhaustive closure of a gate library under composition: breadth-first
// search over the Cayley graph from the identity, right-multiplying by each
// generator.  Practical up to a few million elements; the cap guards against
// accidentally closing a huge group.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

namespace detail {

// Exact membership bookkeeping for the BFS.  Degree <= 11 uses a dense
// bitmap over Lehmer ranks; packing into 4 bits per point covers degrees up
// to 16 in a single word; larger degrees fall back to hashing whole tables.
class VisitedSet {
 public:
  explicit VisitedSet(int degree) : degree_(degree) {
    if (degree_ <= 11) bitmap_.resize(factorial_u64(degree_), false);
  }

  bool insert(const Permutation& p) {
    if (degree_ <= 11) {
      std::uint64_t r = rank(p);
      if (bitmap_[r]) return false;
      bitmap_[r] = true;
      return true;
    }
    if (degree_ <= 16) return packed_.insert(pack(p)).second;
    return full_.insert(p).second;
  }

 private:
  static std::uint64_t pack(const Permutation& p) {
    std::uint64_t key = 0;
    for (int i = 0; i < p.degree(); ++i)
      key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
    return key;
  }

  int degree_;
  std::vector<bool> bitmap_;
  std::unordered_set<std::uint64_t> packed_;
  std::unordered_set<Permutation, PermHash> full_;
};

}  // namespace detail

// All elements of the generated group in BFS order (identity first, then by
// minimal word length, ties in generator order).  Throws CapExceeded once
// more than `cap` elements have been found.
inline std::vector<Permutation> closure_elements(
    const std::vector<Permutation>& generators, int degree,
    std::uint64_t cap = kDefaultClosureCap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      fail(errc::degree_mismatch, "generator degree " +
                                      std::to_string(g.degree()) +
                                      " does not match " +
                                      std::to_string(degree));
  detail::VisitedSet visited(degree);
  std::vector<Permutation> elements{Permutation::identity(degree)};
  visited.insert(elements[0]);
  Permutation next;
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      compose_into(next, elements[head], g);
      if (visited.insert(next)) {
        if (elements.size() + 1 > cap)
          fail(errc::cap_exceeded, "closure exceeds cap of " +
                                       std::to_string(cap) + " elements");
        elements.push_back(next);
      }
    }
  }
  return elements;
}

inline std::vector<Permutation> closure_elements(
    const GateLibrary& lib, std::uint64_t cap = kDefaultClosureCap) {
  return closure_elements(elaborate_all(lib), 1 << lib.arity, cap);
}

inline std::uint64_t closure_size(const std::vector<Permutation>& generators,
                                  int degree,
                                  std::uint64_t cap = kDefaultClosureCap) {
  return closure_elements(generators, degree, cap).size();
}

inline std::uint64_t closure_size(const GateLibrary& lib,
                                  std::uint64_t cap = kDefaultClosureCap) {
  return closure_size(elaborate_all(lib), 1 << lib.arity, cap);
}

}  // namespace revsynth

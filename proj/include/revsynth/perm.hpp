#pragma once

// Permutations stored as dense image tables over 0-based points.  All text
// I/O (cycle notation, comma-separated image lists) is 1-based, matching the
// truth-table row numbering used throughout the gate analysis.
//
// Composition order: compose(p, q) applies p FIRST and q second,
//   compose(p, q)(x) = q(p(x)),
// which is how circuit stages cascade left to right.  This is the reverse of
// the usual function-composition convention; always go through compose() /
// compose_into() rather than hand-rolling the loop.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"

namespace revsynth {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  // Validates that `images` (0-based) is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
      if (v >= images_.size())
        fail(errc::point_out_of_range,
             "image " + std::to_string(v + 1) + " out of range for degree " +
                 std::to_string(images_.size()));
      if (seen[v])
        fail(errc::repeated_point,
             "image " + std::to_string(v + 1) + " repeated; not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  // Skips validation; for internal hot paths that construct known-valid data.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator[](int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image tables; gives a canonical order for tie-breaking.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend void compose_into(Permutation& dst, const Permutation& p,
                           const Permutation& q);
  friend void inverse_into(Permutation& dst, const Permutation& p);

 private:
  std::vector<Point> images_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

inline void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(errc::degree_mismatch, "degrees " + std::to_string(p.degree()) +
                                    " and " + std::to_string(q.degree()) +
                                    " differ");
}

// dst = apply p, then q.  dst must not alias p or q.
inline void compose_into(Permutation& dst, const Permutation& p,
                         const Permutation& q) {
  check_same_degree(p, q);
  dst.images_.resize(p.images_.size());
  for (size_t i = 0; i < p.images_.size(); ++i)
    dst.images_[i] = q.images_[p.images_[i]];
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r;
  compose_into(r, p, q);
  return r;
}

// dst must not alias p.
inline void inverse_into(Permutation& dst, const Permutation& p) {
  dst.images_.resize(p.images_.size());
  for (size_t i = 0; i < p.images_.size(); ++i)
    dst.images_[p.images_[i]] = static_cast<Point>(i);
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  inverse_into(r, p);
  return r;
}

// Cycle decomposition, 0-based points.  Each cycle starts at its smallest
// point; cycles are listed by ascending smallest point; fixed points omitted.
inline std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || p[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = p[j];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Least common multiple of the cycle lengths.  Throws std::overflow_error if
// the order does not fit in 64 bits (possible from degree ~60 up; callers in
// this toolkit stay far below that for any single element they inspect).
inline std::uint64_t order_of(const Permutation& p) {
  std::uint64_t ord = 1;
  for (const auto& cyc : cycles_of(p)) {
    std::uint64_t len = cyc.size();
    std::uint64_t g = std::gcd(ord, len);
    std::uint64_t m = len / g;
    if (m != 0 && ord > UINT64_MAX / m)
      throw std::overflow_error("element order exceeds 64 bits");
    ord *= m;
  }
  return ord;
}

namespace detail {

inline void skip_spaces(std::string_view s, size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline int parse_point(std::string_view s, size_t& i, int degree) {
  skip_spaces(s, i);
  if (i >= s.size() || s[i] < '0' || s[i] > '9')
    fail(errc::malformed_cycle, "expected a point at offset " +
                                    std::to_string(i) + " in \"" +
                                    std::string(s) + "\"");
  long v = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    v = v * 10 + (s[i] - '0');
    if (v > 1 << 20) break;
    ++i;
  }
  if (v < 1 || v > degree)
    fail(errc::point_out_of_range, "point " + std::to_string(v) +
                                       " out of range for degree " +
                                       std::to_string(degree));
  return static_cast<int>(v);
}

}  // namespace detail

// Parses disjoint cycle notation with 1-based points, e.g. "(1,3,5,6)(7,8)".
// "()" is the identity.
inline Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<Point> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(static_cast<size_t>(degree), false);

  size_t i = 0;
  detail::skip_spaces(text, i);
  if (i >= text.size())
    fail(errc::malformed_cycle, "empty cycle expression");
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      fail(errc::malformed_cycle, "expected '(' at offset " +
                                      std::to_string(i) + " in \"" +
                                      std::string(text) + "\"");
    ++i;
    detail::skip_spaces(text, i);
    std::vector<int> cyc;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" or a stray empty cycle: contributes nothing
    } else {
      while (true) {
        int pt = detail::parse_point(text, i, degree);
        if (used[static_cast<size_t>(pt - 1)])
          fail(errc::repeated_point,
               "point " + std::to_string(pt) + " appears twice");
        used[static_cast<size_t>(pt - 1)] = true;
        cyc.push_back(pt - 1);
        detail::skip_spaces(text, i);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        fail(errc::malformed_cycle, "expected ',' or ')' at offset " +
                                        std::to_string(i) + " in \"" +
                                        std::string(text) + "\"");
      }
    }
    saw_cycle = true;
    for (size_t k = 0; k < cyc.size(); ++k)
      images[static_cast<size_t>(cyc[k])] =
          static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    detail::skip_spaces(text, i);
  }
  if (!saw_cycle) fail(errc::malformed_cycle, "no cycles found");
  return Permutation::unchecked(std::move(images));
}

// Canonical disjoint cycle notation, 1-based; identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  auto cycles = cycles_of(p);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

// Parses a comma-separated 1-based image list, e.g. "3,2,5,4,6,1,8,7".
inline Permutation parse_images(std::string_view text) {
  std::vector<Point> images;
  size_t i = 0;
  while (true) {
    detail::skip_spaces(text, i);
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start)
      fail(errc::bad_input,
           "expected a number at offset " + std::to_string(i) + " in \"" +
               std::string(text) + "\"");
    long v = std::stol(std::string(text.substr(start, i - start)));
    if (v < 1)
      fail(errc::point_out_of_range, "image " + std::to_string(v) +
                                         " out of range (points are 1-based)");
    images.push_back(static_cast<Point>(v - 1));
    detail::skip_spaces(text, i);
    if (i >= text.size()) break;
    if (text[i] != ',')
      fail(errc::bad_input, "expected ',' at offset " + std::to_string(i) +
                                " in \"" + std::string(text) + "\"");
    ++i;
  }
  return Permutation(std::move(images));  // validates range/bijection
}

inline std::string format_images(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i] + 1);
  }
  return out;
}

inline constexpr std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline constexpr int kMaxRankingDegree = 12;  // 12! still fits comfortably

// Lehmer rank: lexicographic index of the image table among all degree!
// permutations.  Restricted to degree <= 12 so ranks stay well inside 64 bits
// and dense rank-indexed tables stay practical.
inline std::uint64_t rank(const Permutation& p) {
  int n = p.degree();
  if (n > kMaxRankingDegree)
    fail(errc::degree_too_large_for_ranking,
         "ranking supports degree <= " + std::to_string(kMaxRankingDegree) +
             ", got " + std::to_string(n));
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial_u64(n - 1 - i);
  }
  return r;
}

inline Permutation unrank(std::uint64_t r, int degree) {
  if (degree > kMaxRankingDegree)
    fail(errc::degree_too_large_for_ranking,
         "ranking supports degree <= " + std::to_string(kMaxRankingDegree) +
             ", got " + std::to_string(degree));
  if (r >= factorial_u64(degree))
    fail(errc::rank_out_of_range, "rank " + std::to_string(r) +
                                      " out of range for degree " +
                                      std::to_string(degree));
  std::vector<Point> pool(static_cast<size_t>(degree));
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<Point> images;
  images.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    std::uint64_t f = factorial_u64(degree - 1 - i);
    size_t idx = static_cast<size_t>(r / f);
    r %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::unchecked(std::move(images));
}

// Truth-table row numbering: assignment (x_1, ..., x_n) with x_1 the most
// significant bit sits in row  1 + sum_i x_i * 2^(n-i)  (rows are 1-based).

inline int assignment_index(const std::vector<int>& bits) {
  if (bits.empty()) fail(errc::bad_input, "empty assignment");
  int idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1)
      fail(errc::bad_input, "assignment bits must be 0 or 1");
    idx = (idx << 1) | b;
  }
  return idx + 1;
}

inline std::vector<int> assignment_bits(int index, int n) {
  if (n < 1 || n > 20) fail(errc::bad_input, "invalid assignment width");
  if (index < 1 || index > (1 << n))
    fail(errc::point_out_of_range,
         "row " + std::to_string(index) + " out of range for " +
             std::to_string(n) + " bits");
  std::vector<int> bits(static_cast<size_t>(n));
  int v = index - 1;
  for (int i = n - 1; i >= 0; --i) {
    bits[static_cast<size_t>(i)] = v & 1;
    v >>= 1;
  }
  return bits;
}

}  // namespace revsynth

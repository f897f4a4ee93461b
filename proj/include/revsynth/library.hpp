#pragma once

// Named gate libraries.  A library name is either
//   - a combination of the letters N, C, T, F, P (each at most once): one
//     block of every gate of that kind, blocks in name order, wire lists in
//     lexicographic order within a block (T here means the 2-control gate);
//   - "G": all n! chain gates on n lines;
//   - "GT": the generalized-Toffoli family, i.e. N, C and every k-control
//     T for k = 2..n-1, blocks by ascending control count.
//
// Width rules: N and G need n >= 1, C needs n >= 2, T needs n >= 3, and the
// F and P blocks are only defined at n = 3.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

struct GateLibrary {
  std::string name;
  int arity = 0;
  std::vector<Gate> gates;

  int size() const { return static_cast<int>(gates.size()); }
};

inline GateLibrary library_from_gates(std::string name, int arity,
                                      std::vector<Gate> gates) {
  if (gates.empty()) fail(errc::bad_input, "a library needs at least one gate");
  for (size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].arity != arity)
      fail(errc::degree_mismatch, "gate " + format_gate(gates[i]) +
                                      " has width " +
                                      std::to_string(gates[i].arity) +
                                      ", library has width " +
                                      std::to_string(arity));
    for (size_t j = i + 1; j < gates.size(); ++j)
      if (gates[i] == gates[j])
        fail(errc::invalid_gate,
             "gate " + format_gate(gates[i]) + " listed twice");
  }
  return GateLibrary{std::move(name), arity, std::move(gates)};
}

namespace detail {

inline void require_width(bool ok, std::string_view what, int n) {
  if (!ok)
    fail(errc::unsupported_width, std::string(what) + " not defined at width " +
                                      std::to_string(n));
}

inline void append_n_block(std::vector<Gate>& gates, int n) {
  require_width(n >= 1, "N gates", n);
  for (int t = 1; t <= n; ++t) gates.emplace_back(GateKind::N, n, std::vector<int>{t});
}

inline void append_c_block(std::vector<Gate>& gates, int n) {
  require_width(n >= 2, "C gates", n);
  for (int c = 1; c <= n; ++c)
    for (int t = 1; t <= n; ++t)
      if (t != c) gates.emplace_back(GateKind::C, n, std::vector<int>{c, t});
}

// All gates with k sorted controls and one target, wire tuples in
// lexicographic order.
inline void append_t_block(std::vector<Gate>& gates, int n, int k) {
  require_width(n >= k + 1, "T gates", n);
  std::vector<int> ctl(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) ctl[static_cast<size_t>(i)] = i + 1;
  while (true) {
    for (int t = 1; t <= n; ++t) {
      bool used = false;
      for (int c : ctl) used |= (c == t);
      if (!used) {
        std::vector<int> w = ctl;
        w.push_back(t);
        gates.emplace_back(GateKind::T, n, std::move(w));
      }
    }
    // next k-combination of 1..n
    int i = k - 1;
    while (i >= 0 && ctl[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++ctl[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      ctl[static_cast<size_t>(j)] = ctl[static_cast<size_t>(j - 1)] + 1;
  }
}

inline void append_f_block(std::vector<Gate>& gates, int n) {
  require_width(n == 3, "F gates", n);
  for (int c = 1; c <= 3; ++c) {
    std::vector<int> rest;
    for (int x = 1; x <= 3; ++x)
      if (x != c) rest.push_back(x);
    gates.emplace_back(GateKind::F, n, std::vector<int>{c, rest[0], rest[1]});
  }
}

inline void append_p_block(std::vector<Gate>& gates, int n) {
  require_width(n == 3, "P gates", n);
  std::vector<int> w{1, 2, 3};
  do {
    gates.emplace_back(GateKind::P, n, w);
  } while (std::next_permutation(w.begin(), w.end()));
}

inline void append_g_block(std::vector<Gate>& gates, int n) {
  require_width(n >= 1, "G gates", n);
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  do {
    gates.emplace_back(GateKind::G, n, w);
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace detail

inline GateLibrary standard_library(std::string_view name, int n) {
  std::vector<Gate> gates;
  if (name == "G") {
    detail::append_g_block(gates, n);
  } else if (name == "GT") {
    detail::require_width(n >= 1, "the generalized-Toffoli family", n);
    detail::append_n_block(gates, n);
    if (n >= 2) detail::append_c_block(gates, n);
    for (int k = 2; k <= n - 1; ++k) detail::append_t_block(gates, n, k);
  } else {
    if (name.empty()) fail(errc::bad_input, "empty library name");
    bool used[5] = {false, false, false, false, false};
    for (char ch : name) {
      int which;
      switch (ch) {
        case 'N': which = 0; break;
        case 'C': which = 1; break;
        case 'T': which = 2; break;
        case 'F': which = 3; break;
        case 'P': which = 4; break;
        default:
          fail(errc::bad_input,
               "unknown library name \"" + std::string(name) + "\"");
      }
      if (used[which])
        fail(errc::bad_input,
             "letter '" + std::string(1, ch) + "' repeated in library name");
      used[which] = true;
      switch (ch) {
        case 'N': detail::append_n_block(gates, n); break;
        case 'C': detail::append_c_block(gates, n); break;
        case 'T': detail::append_t_block(gates, n, 2); break;
        case 'F': detail::append_f_block(gates, n); break;
        case 'P': detail::append_p_block(gates, n); break;
      }
    }
  }
  return GateLibrary{std::string(name), n, std::move(gates)};
}

// Size of the generalized-Toffoli family without enumerating it: n * 2^(n-1).
inline std::uint64_t gt_library_size(int n) {
  if (n < 1 || n > 59)  // above 59 the count no longer fits in 64 bits
    fail(errc::unsupported_width,
         "generalized-Toffoli family size needs 1 <= n <= 59, got " +
             std::to_string(n));
  return static_cast<std::uint64_t>(n) << (n - 1);
}

inline std::vector<Permutation> elaborate_all(const GateLibrary& lib) {
  std::vector<Permutation> perms;
  perms.reserve(lib.gates.size());
  for (const Gate& g : lib.gates) perms.push_back(elaborate(g));
  return perms;
}

// Comma- or semicolon-separated gate terms, e.g. "T[1,2,3], C[1,2]".
inline std::vector<Gate> parse_gate_list(std::string_view text, int arity) {
  std::vector<Gate> gates;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    bool split = i == text.size();
    if (!split) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      split = depth == 0 && (text[i] == ',' || text[i] == ';');
    }
    if (split) {
      gates.push_back(parse_gate(text.substr(start, i - start), arity));
      start = i + 1;
    }
  }
  return gates;
}

inline std::string format_gate_list(const std::vector<Gate>& gates,
                                    std::string_view sep = ", ") {
  std::string out;
  for (size_t i = 0; i < gates.size(); ++i) {
    if (i) out += sep;
    out += format_gate(gates[i]);
  }
  return out;
}

}  // namespace revsynth

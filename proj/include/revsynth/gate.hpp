#pragma once

// Reversible gates over n circuit lines and their permutation semantics.
//
// A gate maps each truth-table row (an assignment of the n line values) to
// another row; rows are numbered 1..2^n with line 1 as the most significant
// bit.  All gate equations read their INPUT values simultaneously: a product
// of lines in some output expression always refers to the values entering the
// gate, never to values already updated by the same gate.
//
// Gate kinds and wire lists:
//   N[t]           invert line t
//   C[c,t]         invert t when c is 1
//   T[c1,..,ck,t]  invert t when all controls are 1 (k >= 2)
//   F[c,a,b]       swap lines a and b when c is 1
//   P[c,a,b]       a ^= c;  b ^= c & a   (a on the right-hand side is the
//                  input value; wire order matters, no canonical form)
//   G[i1,..,im]    chain gate: i1 ^= 1, and each later line ik picks up the
//                  product of all earlier chain lines i1..i(k-1)
//
// T's controls and F's swap pair are order-insensitive and get canonicalized
// (sorted) on construction, so equal gates compare equal.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

enum class GateKind : char { N = 'N', C = 'C', T = 'T', F = 'F', P = 'P', G = 'G' };

inline constexpr int kMaxArity = 16;  // 2^16 truth-table rows at most

struct Gate {
  GateKind kind;
  int arity;                // number of circuit lines n
  std::vector<int> wires;   // 1-based line numbers, meaning depends on kind

  Gate(GateKind k, int n, std::vector<int> w)
      : kind(k), arity(n), wires(std::move(w)) {
    if (n < 1 || n > kMaxArity)
      fail(errc::unsupported_width,
           "circuit width " + std::to_string(n) + " not supported");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : wires) {
      if (x < 1 || x > n)
        fail(errc::invalid_gate, "wire " + std::to_string(x) +
                                     " out of range for width " +
                                     std::to_string(n));
      if (seen[static_cast<size_t>(x)])
        fail(errc::invalid_gate, "wire " + std::to_string(x) + " repeated");
      seen[static_cast<size_t>(x)] = true;
    }
    size_t m = wires.size();
    switch (kind) {
      case GateKind::N:
        if (m != 1) fail(errc::invalid_gate, "N takes exactly 1 wire");
        break;
      case GateKind::C:
        if (m != 2) fail(errc::invalid_gate, "C takes exactly 2 wires");
        break;
      case GateKind::T:
        if (m < 3) fail(errc::invalid_gate, "T takes at least 3 wires");
        std::sort(wires.begin(), wires.end() - 1);  // controls
        break;
      case GateKind::F:
        if (m != 3) fail(errc::invalid_gate, "F takes exactly 3 wires");
        std::sort(wires.begin() + 1, wires.end());  // swap pair
        break;
      case GateKind::P:
        if (m != 3) fail(errc::invalid_gate, "P takes exactly 3 wires");
        break;
      case GateKind::G:
        if (m < 1) fail(errc::invalid_gate, "G takes at least 1 wire");
        break;
    }
  }

  friend bool operator==(const Gate&, const Gate&) = default;
  // Order by (arity, kind, wires); used only as an arbitrary canonical order.
  friend auto operator<=>(const Gate&, const Gate&) = default;
};

// Permutation of the 2^n truth-table rows realized by the gate (0-based
// states; state bit for line i sits at position n-i so that line 1 is the
// most significant).
inline Permutation elaborate(const Gate& g) {
  int n = g.arity;
  auto line_mask = [n](int wire) { return 1u << (n - wire); };
  size_t size = size_t{1} << n;
  std::vector<Point> images(size);
  for (size_t s = 0; s < size; ++s) {
    unsigned in = static_cast<unsigned>(s);
    auto bit = [&](int wire) { return (in >> (n - wire)) & 1u; };
    unsigned out = in;
    switch (g.kind) {
      case GateKind::N:
        out ^= line_mask(g.wires[0]);
        break;
      case GateKind::C:
        if (bit(g.wires[0])) out ^= line_mask(g.wires[1]);
        break;
      case GateKind::T: {
        unsigned all = 1;
        for (size_t k = 0; k + 1 < g.wires.size(); ++k) all &= bit(g.wires[k]);
        if (all) out ^= line_mask(g.wires.back());
        break;
      }
      case GateKind::F:
        if (bit(g.wires[0]) && bit(g.wires[1]) != bit(g.wires[2]))
          out ^= line_mask(g.wires[1]) | line_mask(g.wires[2]);
        break;
      case GateKind::P: {
        if (bit(g.wires[0])) out ^= line_mask(g.wires[1]);
        if (bit(g.wires[0]) & bit(g.wires[1])) out ^= line_mask(g.wires[2]);
        break;
      }
      case GateKind::G: {
        out ^= line_mask(g.wires[0]);
        unsigned prod = 1;
        for (size_t k = 1; k < g.wires.size(); ++k) {
          prod &= bit(g.wires[k - 1]);
          if (prod) out ^= line_mask(g.wires[k]);
        }
        break;
      }
    }
    images[s] = static_cast<Point>(out);
  }
  return Permutation::unchecked(std::move(images));
}

// Chain gates on m lines are often written with a positional label: digit k
// of the label gives the chain position of line k (label 2341 puts line 1 at
// chain position 2, line 2 at position 3, ...).  The wire list in chain order
// is therefore the inverse of the digit sequence.
inline Gate g_from_label(std::string_view label) {
  size_t m = label.size();
  if (m < 1 || m > 9)
    fail(errc::malformed_label,
         "label \"" + std::string(label) + "\" must have 1 to 9 digits");
  std::vector<int> wires(m, 0);
  for (size_t k = 0; k < m; ++k) {
    char c = label[k];
    if (c < '1' || c > '0' + static_cast<char>(m))
      fail(errc::malformed_label, "label \"" + std::string(label) +
                                      "\" is not a permutation of 1.." +
                                      std::to_string(m));
    int pos = c - '1';
    if (wires[static_cast<size_t>(pos)] != 0)
      fail(errc::malformed_label, "label \"" + std::string(label) +
                                      "\" repeats digit " + std::string(1, c));
    wires[static_cast<size_t>(pos)] = static_cast<int>(k) + 1;
  }
  return Gate(GateKind::G, static_cast<int>(m), std::move(wires));
}

inline Gate g4_from_label(std::string_view label) {
  if (label.size() != 4)
    fail(errc::malformed_label,
         "expected a 4-digit label, got \"" + std::string(label) + "\"");
  return g_from_label(label);
}

inline std::string format_gate(const Gate& g) {
  std::string out(1, static_cast<char>(g.kind));
  out += '[';
  for (size_t i = 0; i < g.wires.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.wires[i]);
  }
  out += ']';
  return out;
}

inline Gate parse_gate(std::string_view text, int arity) {
  size_t i = 0;
  detail::skip_spaces(text, i);
  if (i >= text.size())
    fail(errc::invalid_gate, "empty gate term");
  char k = text[i];
  GateKind kind;
  switch (k) {
    case 'N': kind = GateKind::N; break;
    case 'C': kind = GateKind::C; break;
    case 'T': kind = GateKind::T; break;
    case 'F': kind = GateKind::F; break;
    case 'P': kind = GateKind::P; break;
    case 'G': kind = GateKind::G; break;
    default:
      fail(errc::invalid_gate,
           "unknown gate kind '" + std::string(1, k) + "'");
  }
  ++i;
  detail::skip_spaces(text, i);
  if (i >= text.size() || text[i] != '[')
    fail(errc::invalid_gate,
         "expected '[' after gate kind in \"" + std::string(text) + "\"");
  ++i;
  std::vector<int> wires;
  while (true) {
    detail::skip_spaces(text, i);
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start)
      fail(errc::invalid_gate,
           "expected a wire number in \"" + std::string(text) + "\"");
    wires.push_back(std::stoi(std::string(text.substr(start, i - start))));
    detail::skip_spaces(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    fail(errc::invalid_gate,
         "expected ',' or ']' in \"" + std::string(text) + "\"");
  }
  detail::skip_spaces(text, i);
  if (i != text.size())
    fail(errc::invalid_gate,
         "trailing characters after gate term in \"" + std::string(text) + "\"");
  return Gate(kind, arity, std::move(wires));
}

namespace detail {

inline std::string product_term(const std::vector<int>& lines) {
  std::string t;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) t += " & ";
    t += "x" + std::to_string(lines[i]);
  }
  return lines.size() > 1 ? "(" + t + ")" : t;
}

}  // namespace detail

// Per-line output expressions in input variables, C-style operators.
// Example: T[1,2,3] -> {"x1", "x2", "x3 ^ (x1 & x2)"}.
inline std::vector<std::string> boolean_map(const Gate& g) {
  std::vector<std::string> out(static_cast<size_t>(g.arity));
  for (int i = 1; i <= g.arity; ++i)
    out[static_cast<size_t>(i - 1)] = "x" + std::to_string(i);
  auto at = [&](int wire) -> std::string& {
    return out[static_cast<size_t>(wire - 1)];
  };
  switch (g.kind) {
    case GateKind::N:
      at(g.wires[0]) += " ^ 1";
      break;
    case GateKind::C:
      at(g.wires[1]) += " ^ x" + std::to_string(g.wires[0]);
      break;
    case GateKind::T: {
      std::vector<int> ctl(g.wires.begin(), g.wires.end() - 1);
      at(g.wires.back()) += " ^ " + detail::product_term(ctl);
      break;
    }
    case GateKind::F: {
      // Conditional swap in xor form: both swapped lines pick up
      // c & (a ^ b).
      int c = g.wires[0], a = g.wires[1], b = g.wires[2];
      std::string d = "(x" + std::to_string(c) + " & (x" + std::to_string(a) +
                      " ^ x" + std::to_string(b) + "))";
      at(a) += " ^ " + d;
      at(b) += " ^ " + d;
      break;
    }
    case GateKind::P: {
      int c = g.wires[0], a = g.wires[1], b = g.wires[2];
      at(a) += " ^ x" + std::to_string(c);
      at(b) += " ^ " + detail::product_term({c, a});
      break;
    }
    case GateKind::G: {
      at(g.wires[0]) += " ^ 1";
      for (size_t k = 1; k < g.wires.size(); ++k) {
        std::vector<int> prefix(g.wires.begin(),
                                g.wires.begin() + static_cast<std::ptrdiff_t>(k));
        at(g.wires[k]) += " ^ " + detail::product_term(prefix);
      }
      break;
    }
  }
  return out;
}

}  // namespace revsynth

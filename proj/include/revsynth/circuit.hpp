#pragma once

// Circuits are gate cascades applied left to right; the realized permutation
// is the left-to-right composition of the gates' permutations.

#include <string>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

struct Circuit {
  int arity = 0;
  std::vector<Gate> gates;  // applied first to last

  int length() const { return static_cast<int>(gates.size()); }
};

inline Permutation apply_circuit(const Circuit& c) {
  Permutation p = Permutation::identity(1 << c.arity);
  Permutation tmp;
  for (const Gate& g : c.gates) {
    Permutation gp = elaborate(g);
    if (gp.degree() != p.degree())
      fail(errc::degree_mismatch, "gate " + format_gate(g) +
                                      " does not fit a width-" +
                                      std::to_string(c.arity) + " circuit");
    compose_into(tmp, p, gp);
    std::swap(tmp, p);
  }
  return p;
}

inline bool verify(const Circuit& c, const Permutation& spec) {
  if (spec.degree() != 1 << c.arity)
    fail(errc::degree_mismatch,
         "specification degree " + std::to_string(spec.degree()) +
             " does not match circuit width " + std::to_string(c.arity));
  return apply_circuit(c) == spec;
}

// Text form: gates joined by "; "; the empty circuit prints as "identity".
inline std::string format_circuit(const Circuit& c) {
  if (c.gates.empty()) return "identity";
  return format_gate_list(c.gates, "; ");
}

inline Circuit parse_circuit(std::string_view text, int arity) {
  size_t i = 0;
  detail::skip_spaces(text, i);
  if (i == text.size() || text.substr(i) == "identity")
    return Circuit{arity, {}};
  return Circuit{arity, parse_gate_list(text.substr(i), arity)};
}

}  // namespace revsynth

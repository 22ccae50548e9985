#pragma once

#include <string>
#include <vector>

#include "srkit/toeplitz.hpp"

namespace srkit {

enum class ActionKind { inverse, scale, frobenius, global_scale };

const char* action_name(ActionKind k);

/// One generator application. alpha is a field code for scale/global_scale;
/// i is the Frobenius exponent.
struct Action {
  ActionKind kind;
  code_t alpha = 0;
  std::uint32_t i = 1;
};

/// Matrix inverse; lower triangular Toeplitz matrices are closed under
/// inversion and the first column follows by forward substitution.
Toeplitz act_inverse(const Toeplitz& a);

/// Diagonal conjugation diag(1,alpha,...,alpha^gamma): entry a_k picks up
/// alpha^k.
Toeplitz act_scale(code_t alpha, const Toeplitz& a);

/// Entrywise a_k -> a_k^(p^i).
Toeplitz act_frobenius(std::uint32_t i, const Toeplitz& a);

/// Entrywise a_k -> c * a_k. Scales every s x s minor by c^s, so it also
/// preserves superregularity; used to normalize a_0 = 1.
Toeplitz act_global_scale(code_t c, const Toeplitz& a);

Toeplitz apply(const Action& act, const Toeplitz& a);

struct OrbitElement {
  Toeplitz matrix;
  std::string word;  // generator word, latest application leftmost; "" marks the seed
};

/// Closure of {a} under the chosen generators, breadth first, deterministic.
std::vector<OrbitElement> orbit(const Toeplitz& a, const std::vector<ActionKind>& generators);

bool canon_less(const Toeplitz& x, const Toeplitz& y);

/// Smallest orbit element in the canonical element order.
Toeplitz canonical_form(const Toeplitz& a, const std::vector<ActionKind>& generators);

}  // namespace srkit

#include "srkit/actions.hpp"

#include <deque>
#include <map>

namespace srkit {

const char* action_name(ActionKind k) {
  switch (k) {
    case ActionKind::inverse: return "inverse";
    case ActionKind::scale: return "scale";
    case ActionKind::frobenius: return "frobenius";
    case ActionKind::global_scale: return "global-scale";
  }
  return "?";
}

Toeplitz act_inverse(const Toeplitz& a) {
  const Field& f = *a.field;
  if (a.col[0] == 0) fail(errc::singular, "a_0 = 0");
  const int n = a.dim();
  std::vector<code_t> b(n);
  const code_t a0_inv = f.inv(a.col[0]);
  b[0] = a0_inv;
  for (int k = 1; k < n; ++k) {
    code_t acc = 0;
    for (int i = 1; i <= k; ++i) acc = f.add(acc, f.mul(a.col[i], b[k - i]));
    b[k] = f.neg(f.mul(a0_inv, acc));
  }
  return {a.field, std::move(b)};
}

Toeplitz act_scale(code_t alpha, const Toeplitz& a) {
  const Field& f = *a.field;
  if (alpha == 0) fail(errc::zero_scalar, "scale");
  std::vector<code_t> b(a.col.size());
  code_t power = 1;
  for (std::size_t k = 0; k < b.size(); ++k) {
    b[k] = f.mul(power, a.col[k]);
    power = f.mul(power, alpha);
  }
  return {a.field, std::move(b)};
}

Toeplitz act_frobenius(std::uint32_t i, const Toeplitz& a) {
  const Field& f = *a.field;
  std::vector<code_t> b(a.col.size());
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = f.frobenius(a.col[k], i);
  return {a.field, std::move(b)};
}

Toeplitz act_global_scale(code_t c, const Toeplitz& a) {
  const Field& f = *a.field;
  if (c == 0) fail(errc::zero_scalar, "global-scale");
  std::vector<code_t> b(a.col.size());
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = f.mul(c, a.col[k]);
  return {a.field, std::move(b)};
}

Toeplitz apply(const Action& act, const Toeplitz& a) {
  switch (act.kind) {
    case ActionKind::inverse: return act_inverse(a);
    case ActionKind::scale: return act_scale(act.alpha, a);
    case ActionKind::frobenius: return act_frobenius(act.i, a);
    case ActionKind::global_scale: return act_global_scale(act.alpha, a);
  }
  fail(errc::usage, "unknown action");
}

namespace {

std::string describe(const Action& act, const Field& f) {
  switch (act.kind) {
    case ActionKind::inverse: return "inverse";
    case ActionKind::scale: return "scale(" + f.format(act.alpha) + ")";
    case ActionKind::frobenius: return "frobenius(" + std::to_string(act.i) + ")";
    case ActionKind::global_scale: return "global-scale(" + f.format(act.alpha) + ")";
  }
  return "?";
}

/// Concrete generator set: inversion is a single map, the two scalings get
/// one generator per admissible scalar, Frobenius gets one per power.
std::vector<Action> expand_generators(const Field& f, const std::vector<ActionKind>& kinds) {
  std::vector<Action> out;
  for (ActionKind k : kinds) {
    switch (k) {
      case ActionKind::inverse:
        out.push_back({k, 0, 0});
        break;
      case ActionKind::scale:
      case ActionKind::global_scale:
        for (std::uint32_t r = 0; r + 1 < f.q(); ++r) {
          const code_t alpha = f.value_by_rank(r);
          if (alpha == 1) continue;
          out.push_back({k, alpha, 0});
        }
        break;
      case ActionKind::frobenius:
        for (std::uint32_t i = 1; i < f.e(); ++i) out.push_back({k, 0, i});
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<OrbitElement> orbit(const Toeplitz& a, const std::vector<ActionKind>& generators) {
  const Field& f = *a.field;
  const std::vector<Action> gens = expand_generators(f, generators);

  std::vector<OrbitElement> out;
  std::map<std::vector<code_t>, std::size_t> seen;
  std::deque<std::size_t> frontier;

  out.push_back({a, ""});
  seen.emplace(a.col, 0);
  frontier.push_back(0);

  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const Action& g : gens) {
      Toeplitz next = apply(g, out[idx].matrix);
      auto [it, inserted] = seen.emplace(next.col, out.size());
      if (!inserted) continue;
      std::string word = describe(g, f);
      if (!out[idx].word.empty()) word += " . " + out[idx].word;
      frontier.push_back(out.size());
      out.push_back({std::move(next), std::move(word)});
    }
  }
  return out;
}

bool canon_less(const Toeplitz& x, const Toeplitz& y) {
  if (!x.field->same(*y.field)) fail(errc::field_mismatch, "canonical comparison");
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  const Field& f = *x.field;
  for (int k = 0; k < x.dim(); ++k) {
    const std::uint32_t rx = f.canon_rank(x.col[k]);
    const std::uint32_t ry = f.canon_rank(y.col[k]);
    if (rx != ry) return rx < ry;
  }
  return false;
}

Toeplitz canonical_form(const Toeplitz& a, const std::vector<ActionKind>& generators) {
  const auto elems = orbit(a, generators);
  const Toeplitz* best = &elems.front().matrix;
  for (const auto& e : elems) {
    if (canon_less(e.matrix, *best)) best = &e.matrix;
  }
  return *best;
}

}  // namespace srkit

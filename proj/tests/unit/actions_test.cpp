#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "srkit/actions.hpp"
#include "srkit/search.hpp"

using namespace srkit;

namespace {

Toeplitz random_superregular(const FieldPtr& f, int gamma, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f->q() - 2);
  while (true) {
    std::vector<code_t> col;
    col.reserve(static_cast<std::size_t>(gamma) + 1);
    for (int i = 0; i <= gamma; ++i) col.push_back(f->value_by_rank(dist(rng)));
    Toeplitz t(f, std::move(col));
    if (is_superregular(t).superregular) return t;
  }
}

// Applies one generator word token, e.g. "scale(w^3)".
Toeplitz apply_token(const std::string& tok, const Toeplitz& a) {
  const Field& f = *a.field;
  if (tok == "inverse") return act_inverse(a);
  const auto open = tok.find('(');
  REQUIRE(open != std::string::npos);
  REQUIRE(tok.back() == ')');
  const std::string name = tok.substr(0, open);
  const std::string arg = tok.substr(open + 1, tok.size() - open - 2);
  if (name == "scale") return act_scale(f.parse(arg), a);
  if (name == "frobenius") return act_frobenius(static_cast<std::uint32_t>(std::stoul(arg)), a);
  if (name == "global-scale") return act_global_scale(f.parse(arg), a);
  FAIL("unknown token ", tok);
  return a;
}

}  // namespace

TEST_CASE("inverse of a toeplitz matrix by forward substitution") {
  FieldPtr f3 = Field::create(3, 1);
  Toeplitz t(f3, {1, 1, 2});
  Toeplitz inv = act_inverse(t);
  CHECK(inv.col == std::vector<code_t>{1, 2, 2});

  // Cross-check against dense matrix inversion on a larger field.
  std::mt19937 rng(7);
  FieldPtr f = Field::create(2, 4);
  for (int trial = 0; trial < 25; ++trial) {
    Toeplitz a = random_superregular(f, 3, rng);
    CHECK(act_inverse(a).to_mat() == inverse(a.to_mat()));
    CHECK(act_inverse(act_inverse(a)) == a);
  }
}

TEST_CASE("scale action is diagonal conjugation") {
  FieldPtr f = Field::create(2, 3);
  Toeplitz a(f, {1, f->parse("w"), f->parse("w^5"), 1});
  for (std::uint32_t r = 0; r + 1 < f->q(); ++r) {
    const code_t alpha = f->value_by_rank(r);
    Toeplitz scaled = act_scale(alpha, a);
    for (int k = 0; k <= a.gamma(); ++k)
      CHECK(scaled.col[static_cast<std::size_t>(k)] ==
            f->mul(a.col[static_cast<std::size_t>(k)], f->pow(alpha, k)));

    Mat d(f, a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) d.at(i, i) = f->pow(alpha, i);
    CHECK(scaled.to_mat() == mat_mul(mat_mul(d, a.to_mat()), inverse(d)));
  }
}

TEST_CASE("frobenius action is the entrywise power map") {
  FieldPtr f = Field::create(3, 2);
  Toeplitz a(f, {1, f->parse("w"), f->parse("w^3")});
  Toeplitz fr = act_frobenius(1, a);
  for (int k = 0; k <= a.gamma(); ++k)
    CHECK(fr.col[static_cast<std::size_t>(k)] ==
          f->pow(a.col[static_cast<std::size_t>(k)], 3));
  CHECK(act_frobenius(f->e(), a) == a);
}

TEST_CASE("global scaling multiplies each s by s minor determinant by c^s") {
  FieldPtr f = Field::create(5, 1);
  Toeplitz a(f, {1, 1, 2});
  const code_t c = 3;
  Toeplitz scaled = act_global_scale(c, a);
  for (const auto& [idx, d] : superregular_certificate(a)) {
    const code_t expected = f->mul(d, f->pow(c, static_cast<long long>(idx.rows.size())));
    CHECK(det(submatrix(scaled, idx)) == expected);
  }
  CHECK_THROWS_AS(act_global_scale(0, a), Error);
  CHECK_THROWS_AS(act_scale(0, a), Error);
}

TEST_CASE("composition laws") {
  std::mt19937 rng(99);
  FieldPtr f = Field::create(2, 4);
  const code_t w = f->primitive();
  Toeplitz a = random_superregular(f, 4, rng);

  CHECK(act_scale(f->mul(w, w), a) == act_scale(w, act_scale(w, a)));
  CHECK(act_frobenius(2, a) == act_frobenius(1, act_frobenius(1, a)));
  CHECK(act_global_scale(f->parse("w^5"), a) ==
        act_global_scale(f->parse("w^3"), act_global_scale(f->parse("w^2"), a)));

  // Frobenius semicommutes with scaling: the scalar gets raised too.
  CHECK(act_frobenius(1, act_scale(w, a)) ==
        act_scale(f->pow(w, f->p()), act_frobenius(1, a)));

  // apply() dispatches to the same maps.
  CHECK(apply({ActionKind::inverse}, a) == act_inverse(a));
  CHECK(apply({ActionKind::scale, w}, a) == act_scale(w, a));
  CHECK(apply({ActionKind::frobenius, 0, 2}, a) == act_frobenius(2, a));
  CHECK(apply({ActionKind::global_scale, w}, a) == act_global_scale(w, a));
}

TEST_CASE("every action preserves superregularity") {
  std::mt19937 rng(20260817);
  for (std::uint32_t q : {4u, 5u, 8u, 9u}) {
    FieldPtr f = field_for_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      Toeplitz a = random_superregular(f, 2, rng);
      CHECK(is_superregular(act_inverse(a)).superregular);
      for (std::uint32_t r = 0; r + 1 < q; ++r) {
        CHECK(is_superregular(act_scale(f->value_by_rank(r), a)).superregular);
        CHECK(is_superregular(act_global_scale(f->value_by_rank(r), a)).superregular);
      }
      for (std::uint32_t i = 1; i <= f->e(); ++i)
        CHECK(is_superregular(act_frobenius(i, a)).superregular);
    }
  }
}

TEST_CASE("orbit closure, determinism, and word bookkeeping") {
  FieldPtr f = Field::create(2, 2);
  Toeplitz seed(f, {1, f->parse("w"), 1});
  const std::vector<ActionKind> gens{ActionKind::inverse, ActionKind::scale,
                                     ActionKind::frobenius};
  const auto orb = orbit(seed, gens);
  CHECK(orb.size() == 6);
  CHECK(orb[0].word.empty());
  CHECK(orb[0].matrix == seed);

  auto contains = [&](const Toeplitz& t) {
    return std::any_of(orb.begin(), orb.end(),
                       [&](const OrbitElement& e) { return e.matrix == t; });
  };

  for (const OrbitElement& e : orb) {
    CHECK(is_superregular(e.matrix).superregular);
    CHECK(contains(act_inverse(e.matrix)));
    for (std::uint32_t r = 0; r + 1 < f->q(); ++r)
      CHECK(contains(act_scale(f->value_by_rank(r), e.matrix)));
    for (std::uint32_t i = 1; i < f->e(); ++i)
      CHECK(contains(act_frobenius(i, e.matrix)));
  }

  // Each word is "<token> . <parent word>" with the newest action leftmost;
  // replaying the head token on the parent element reproduces the matrix.
  for (const OrbitElement& e : orb) {
    if (e.word.empty()) continue;
    const auto cut = e.word.find(" . ");
    const std::string head = cut == std::string::npos ? e.word : e.word.substr(0, cut);
    const std::string rest = cut == std::string::npos ? "" : e.word.substr(cut + 3);
    const auto parent = std::find_if(orb.begin(), orb.end(),
                                     [&](const OrbitElement& p) { return p.word == rest; });
    REQUIRE(parent != orb.end());
    CHECK(apply_token(head, parent->matrix) == e.matrix);
  }

  // Rerunning gives the identical element order.
  const auto again = orbit(seed, gens);
  REQUIRE(again.size() == orb.size());
  for (std::size_t i = 0; i < orb.size(); ++i) {
    CHECK(again[i].matrix == orb[i].matrix);
    CHECK(again[i].word == orb[i].word);
  }
}

TEST_CASE("canonical form is the orbit minimum and is orbit invariant") {
  FieldPtr f = Field::create(2, 2);
  Toeplitz seed(f, {1, f->parse("w"), 1});
  const std::vector<ActionKind> gens{ActionKind::inverse, ActionKind::scale,
                                     ActionKind::frobenius};
  const Toeplitz canon = canonical_form(seed, gens);
  for (const OrbitElement& e : orbit(seed, gens)) {
    CHECK_FALSE(canon_less(e.matrix, canon));
    CHECK(canonical_form(e.matrix, gens) == canon);
  }
}

TEST_CASE("opting into global scaling can only grow the orbit") {
  FieldPtr f = Field::create(5, 1);
  Toeplitz seed(f, {1, 1, 2});
  const std::vector<ActionKind> base{ActionKind::inverse, ActionKind::scale,
                                     ActionKind::frobenius};
  std::vector<ActionKind> all = base;
  all.push_back(ActionKind::global_scale);
  const auto small = orbit(seed, base);
  const auto big = orbit(seed, all);
  CHECK(big.size() >= small.size());
  for (const OrbitElement& e : small) {
    CHECK(std::any_of(big.begin(), big.end(),
                      [&](const OrbitElement& b) { return b.matrix == e.matrix; }));
  }
}

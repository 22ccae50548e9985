#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "srkit/codes.hpp"
#include "srkit/search.hpp"

using namespace srkit;

namespace {

Poly mk_poly(const Field& f, const std::vector<std::string>& coeffs) {
  Poly p;
  for (const std::string& c : coeffs) p.c.push_back(f.parse(c));
  return poly_trim(std::move(p));
}

// The worked 8x8 example over GF(64) and the generator matrix displayed
// alongside it.
Toeplitz example_matrix() {
  FieldPtr f = field_for_order(64);
  std::vector<code_t> col;
  for (const char* e : {"1", "w", "w^9", "w^33", "w^33", "w^9", "w", "1"})
    col.push_back(f->parse(e));
  return Toeplitz(f, col);
}

PolyMatrix example_generator() {
  FieldPtr f = field_for_order(64);
  PolyMatrix g(f, 3, 2);
  g.at(0, 0) = mk_poly(*f, {"w^62", "w^57", "1"});
  g.at(1, 1) = mk_poly(*f, {"w^62", "w^57", "1"});
  g.at(2, 0) = mk_poly(*f, {"w^54", "w^44", "w"});
  g.at(2, 1) = mk_poly(*f, {"w^21", "w^17", "1"});
  return g;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  FieldPtr f = Field::create(3, 1);
  const Poly a = mk_poly(*f, {"1", "2"});       // 1 + 2s
  const Poly b = mk_poly(*f, {"2", "1"});       // 2 + s
  CHECK(poly_add(*f, a, b).c == std::vector<code_t>{});  // sums to zero
  CHECK(poly_mul(*f, a, b).c == std::vector<code_t>{2, 2, 2});
  CHECK(a.deg() == 1);
  CHECK(Poly{}.deg() == -1);

  // gcd((s-1)(s+1), s-1) is monic s-1 = s+2.
  const Poly prod = mk_poly(*f, {"2", "0", "1"});  // s^2 - 1
  const Poly lin = mk_poly(*f, {"2", "1"});
  CHECK(poly_gcd(*f, prod, lin).c == std::vector<code_t>{2, 1});
  // gcd with zero returns the monic version of the other argument.
  CHECK(poly_gcd(*f, Poly{}, mk_poly(*f, {"0", "2"})).c == std::vector<code_t>{0, 1});
}

TEST_CASE("code parameter arithmetic and validation") {
  const CodeParams p{3, 2, 2};
  CHECK(p.L() == 3);
  CHECK(singleton_bound(p) == 5);
  CHECK(coldist_bound(p, 0) == 2);
  CHECK(coldist_bound(p, 3) == 5);

  const CodeParams r12{2, 1, 1};
  CHECK(r12.L() == 2);
  CHECK(singleton_bound(r12) == 4);
  // When n-k divides delta the Singleton bound is the column bound at L.
  CHECK(singleton_bound(r12) == coldist_bound(r12, r12.L()));

  CHECK_THROWS_AS(validate_params({2, 2, 1}), Error);
  CHECK_THROWS_AS(validate_params({2, 0, 1}), Error);
  CHECK_THROWS_AS(validate_params({0, 0, 0}), Error);
  CHECK_THROWS_AS(validate_params({3, 2, -1}), Error);
}

TEST_CASE("coefficient expansion and degrees") {
  FieldPtr f = Field::create(2, 1);
  PolyMatrix g(f, 2, 1);
  g.at(0, 0) = mk_poly(*f, {"1", "1"});  // 1 + s
  g.at(1, 0) = mk_poly(*f, {"1"});
  CHECK(g.max_degree() == 1);
  CHECK(g.column_degrees() == std::vector<int>{1});

  const auto coeff = expand(g);
  REQUIRE(coeff.size() == 2);
  CHECK(coeff[0].at(0, 0) == 1);
  CHECK(coeff[0].at(1, 0) == 1);
  CHECK(coeff[1].at(0, 0) == 1);
  CHECK(coeff[1].at(1, 0) == 0);
}

TEST_CASE("sliding matrices place the coefficient blocks on the diagonals") {
  FieldPtr f = Field::create(3, 1);
  PolyMatrix g(f, 2, 1);
  g.at(0, 0) = mk_poly(*f, {"1", "2"});
  g.at(1, 0) = mk_poly(*f, {"1", "1"});

  const Mat s1 = sliding(g, 1, Orientation::generator);
  CHECK(s1.rows == 4);
  CHECK(s1.cols == 2);
  // Block (0,0) and (1,1) are G_0, block (1,0) is G_1, above-diagonal zero.
  CHECK(s1.at(0, 0) == 1);
  CHECK(s1.at(1, 0) == 1);
  CHECK(s1.at(0, 1) == 0);
  CHECK(s1.at(2, 0) == 2);
  CHECK(s1.at(3, 0) == 1);
  CHECK(s1.at(2, 1) == 1);
  CHECK(s1.at(3, 1) == 1);

  // Parity-transpose orientation transposes each block of a 2x1 input.
  const Mat s2 = sliding(g, 1, Orientation::parity_transpose);
  CHECK(s2.rows == 2);
  CHECK(s2.cols == 4);
  CHECK(s2.at(0, 0) == 1);
  CHECK(s2.at(0, 1) == 1);
  CHECK(s2.at(1, 0) == 2);
  CHECK(s2.at(1, 1) == 1);
  CHECK(s2.at(0, 2) == 0);
  CHECK(s2.at(1, 2) == 1);
  CHECK(s2.at(1, 3) == 1);

  CHECK_THROWS_AS(sliding(g, -1, Orientation::generator), Error);
}

TEST_CASE("column distance on hand checked codes") {
  FieldPtr f2 = Field::create(2, 1);

  // Repetition: both outputs copy the input, so every window has weight 2.
  PolyMatrix rep(f2, 2, 1);
  rep.at(0, 0) = mk_poly(*f2, {"1"});
  rep.at(1, 0) = mk_poly(*f2, {"1"});
  CHECK(column_distance(rep, 0) == 2);
  CHECK(column_distance(rep, 1) == 2);
  CHECK(column_distance(rep, 3) == 2);

  // Delaying one output leaves a weight-1 leading window; from window 1 on,
  // the input 1 (no continuation) scores one hit per branch.
  PolyMatrix delay(f2, 2, 1);
  delay.at(0, 0) = mk_poly(*f2, {"1"});
  delay.at(1, 0) = mk_poly(*f2, {"0", "1"});
  CHECK(column_distance(delay, 0) == 1);
  CHECK(column_distance(delay, 1) == 2);
  CHECK(column_distance(delay, 2) == 2);
}

TEST_CASE("column distance profile of the worked example generator") {
  const PolyMatrix g = example_generator();
  CHECK(column_distance(g, 0) == 2);
  CHECK(column_distance(g, 1) == 3);

  // 4095 * 4096^2 truncated inputs at j = 2: over the default budget.
  CHECK_THROWS_WITH_AS(
      (void)column_distance(g, 2),
      "BudgetExceeded: input space has 68702699520 sequences, over the budget of 16777216",
      Error);
  // Deep enough windows saturate the 64-bit size computation.
  CHECK_THROWS_WITH_AS(
      (void)column_distance(g, 5),
      "BudgetExceeded: input space has more than 2^64 sequences, over the budget of 16777216",
      Error);
}

TEST_CASE("smallest dependence through designated columns") {
  FieldPtr f = Field::create(2, 1);
  Mat m(f, 2, 3);
  // Columns: e1, e2, e1 + e2.
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(0, 2) = 1;
  m.at(1, 2) = 1;
  CHECK(min_dependence(m, {0}) == 3);
  CHECK(min_dependence(m, {2}) == 3);

  Mat dup(f, 2, 2);
  dup.at(0, 0) = 1;
  dup.at(0, 1) = 1;
  CHECK(min_dependence(dup, {0}) == 2);

  Mat ind(f, 2, 2);
  ind.at(0, 0) = 1;
  ind.at(1, 1) = 1;
  CHECK_FALSE(min_dependence(ind, {0}).has_value());

  Mat zero(f, 2, 2);
  CHECK(min_dependence(zero, {1}) == 1);
}

TEST_CASE("dual route reproduces the generator route where both run") {
  const PolyMatrix g = example_generator();
  const PolyMatrix h = derived_parity_transpose(g);
  REQUIRE(h.rows == 3);
  REQUIRE(h.cols == 1);
  CHECK(dual_column_distance(h, 3, 2, 0) == column_distance(g, 0));
  CHECK(dual_column_distance(h, 3, 2, 1) == column_distance(g, 1));
  // Past the enumeration budget only the dual route remains.
  CHECK(dual_column_distance(h, 3, 2, 2) == 4);
  CHECK(dual_column_distance(h, 3, 2, 3) == 4);
}

TEST_CASE("derived parity data is orthogonal to the generator") {
  const PolyMatrix g = example_generator();
  const Field& f = *g.field;
  const PolyMatrix h = derived_parity_transpose(g);

  // Frozen reduced entries: the three signed maximal minors over their gcd.
  CHECK(h.at(0, 0).c == mk_poly(f, {"w^54", "w^44", "w"}).c);
  CHECK(h.at(1, 0).c == mk_poly(f, {"w^21", "w^17", "1"}).c);
  CHECK(h.at(2, 0).c == mk_poly(f, {"w^62", "w^57", "1"}).c);

  for (int c = 0; c < g.cols; ++c) {
    Poly acc;
    for (int r = 0; r < g.rows; ++r) acc = poly_add(f, acc, poly_mul(f, h.at(r, 0), g.at(r, c)));
    CHECK(acc.c.empty());
  }

  // Seeded random full-rank generators stay orthogonal to their parity data.
  FieldPtr f5 = Field::create(5, 1);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dist(0, 4);
  int built = 0;
  while (built < 20) {
    PolyMatrix rg(f5, 3, 2);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 2; ++c) {
        Poly p;
        for (int d = 0; d <= 1; ++d) p.c.push_back(static_cast<code_t>(dist(rng)));
        rg.at(r, c) = poly_trim(std::move(p));
      }
    }
    PolyMatrix rh;
    try {
      rh = derived_parity_transpose(rg);
    } catch (const Error&) {
      continue;  // rank deficient draw
    }
    ++built;
    for (int c = 0; c < 2; ++c) {
      Poly acc;
      for (int r = 0; r < 3; ++r)
        acc = poly_add(*f5, acc, poly_mul(*f5, rh.at(r, 0), rg.at(r, c)));
      CHECK(acc.c.empty());
    }
  }
}

TEST_CASE("max span property witnesses") {
  FieldPtr f = Field::create(2, 1);
  Mat m(f, 2, 4);
  // [ I_2 | v v ] with v = e1 + e2: the duplicated column kills the span
  // property as soon as single-column spans are allowed.
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  for (int c = 2; c < 4; ++c) {
    m.at(0, c) = 1;
    m.at(1, c) = 1;
  }
  const MaxSpanResult bad = max_span_property_hat(m, 2, 2, 2);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->column0 == 2);
  CHECK(bad.witness->spanning0 == std::vector<int>{3});

  // The identity alone passes: nothing spans a distinct basis vector.
  const MaxSpanResult good = max_span_property(Mat::identity(f, 3), 3, 3);
  CHECK(good.ok);

  CHECK_THROWS_AS(max_span_property(m, 5, 2), Error);
  CHECK_THROWS_AS(max_span_property_hat(m, 3, 2, 2), Error);
}

TEST_CASE("parity data extraction from the worked example") {
  const Toeplitz t = example_matrix();
  const CodeParams p{3, 2, 2};
  const MdpExtraction ex = extract_mdp(t, p, 3);
  CHECK(ex.rows1 == std::vector<int>{2, 4, 6, 8});
  CHECK(ex.cols1 == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(ex.t_prime.rows == 4);
  CHECK(ex.t_prime.cols == 8);
  CHECK(ex.assembled == hconcat(Mat::identity(t.field, 4), ex.t_prime));

  // Entry spot checks against the source matrix.
  const Field& f = *t.field;
  CHECK(ex.t_prime.at(0, 0) == f.parse("w"));
  CHECK(ex.t_prime.at(0, 1) == 1);
  CHECK(ex.t_prime.at(3, 7) == 1);
  CHECK(ex.t_prime.at(1, 0) == f.parse("w^33"));

  // The assembled matrix is the maximum-span certificate for an MDP code:
  // the window profile meets the bound at every j.
  for (int j = 0; j <= 3; ++j) {
    const Mat a = extract_mdp(t, p, j).assembled;
    CHECK(dual_column_distance_hat(a, 3, 2, j) == coldist_bound(p, j));
  }
}

TEST_CASE("extraction of the one block window keeps the constant entry") {
  FieldPtr f = Field::create(3, 1);
  const Toeplitz t(f, {2});
  const MdpExtraction ex = extract_mdp(t, CodeParams{2, 1, 1}, 0);
  CHECK(ex.rows1 == std::vector<int>{1});
  CHECK(ex.cols1 == std::vector<int>{1});
  CHECK(ex.t_prime.rows == 1);
  CHECK(ex.t_prime.cols == 1);
  CHECK(ex.t_prime.at(0, 0) == 2);
}

TEST_CASE("extraction re-verifies the span property unless told not to") {
  FieldPtr f = Field::create(2, 1);
  const Toeplitz bad(f, {1, 0});  // zero entry, not superregular
  CHECK_THROWS_AS(extract_mdp(bad, CodeParams{2, 1, 1}, 1), Error);
  const MdpExtraction forced = extract_mdp(bad, CodeParams{2, 1, 1}, 1, /*unchecked=*/true);
  CHECK(forced.t_prime.at(1, 0) == 0);

  const Toeplitz small(f, {1, 1});
  CHECK_THROWS_AS(extract_mdp(small, CodeParams{3, 2, 2}, 3), Error);  // needs dim 8
}

TEST_CASE("complexity read off the maximal minors") {
  // Rate 1/2, delta 1: minors are the entries, gcd is constant.
  FieldPtr f = Field::create(5, 1);
  PolyMatrix g(f, 2, 1);
  g.at(0, 0) = mk_poly(*f, {"1", "1"});
  g.at(1, 0) = mk_poly(*f, {"1", "2"});
  const ComplexityReport basic = complexity_from_minors(g);
  CHECK(basic.delta_hat == 1);
  CHECK(basic.basic);
  CHECK(basic.minor_degrees == std::vector<int>{1, 1});
  CHECK(basic.degree_sum == 1);

  const ComplexityReport ex = complexity_from_minors(example_generator());
  CHECK(ex.delta_hat == 4);
  CHECK_FALSE(ex.basic);
  CHECK(ex.minor_degrees == std::vector<int>{4, 4, 4});
  CHECK(ex.degree_sum == 4);
}

TEST_CASE("certification of a hand proven MDP code") {
  // Over GF(5) with G = [1+s, 1+2s]^T: d_0 = 2 and d_1 = 3 are forced one
  // entry at a time, and d_2 = 4 because zeroing the third window needs
  // u_1 = u_2 = 0, which pushes the second window to full weight.
  FieldPtr f = Field::create(5, 1);
  PolyMatrix g(f, 2, 1);
  g.at(0, 0) = mk_poly(*f, {"1", "1"});
  g.at(1, 0) = mk_poly(*f, {"1", "2"});

  const CertifyReport r = mdp_certify(g, CodeParams{2, 1, 1});
  CHECK(r.L == 2);
  CHECK(r.profile == std::vector<int>{2, 3, 4});
  CHECK(r.bounds == std::vector<int>{2, 3, 4});
  CHECK(r.profile_method ==
        std::vector<std::string>{"generator", "generator", "generator"});
  CHECK(r.is_mdp);
  CHECK(r.monotone);
  CHECK(r.within_bounds);
  CHECK(r.complexity.delta_hat == 1);
  CHECK(r.delta_matches);
}

TEST_CASE("certification of the worked example generator") {
  const CertifyReport r = mdp_certify(example_generator(), CodeParams{3, 2, 2});
  CHECK(r.L == 3);
  CHECK(r.profile == std::vector<int>{2, 3, 4, 4});
  CHECK(r.bounds == std::vector<int>{2, 3, 4, 5});
  CHECK(r.profile_method ==
        std::vector<std::string>{"generator", "generator", "dual", "dual"});
  CHECK_FALSE(r.is_mdp);
  CHECK(r.monotone);
  CHECK(r.within_bounds);
  CHECK(r.complexity.delta_hat == 4);
  CHECK_FALSE(r.complexity.basic);
  CHECK(r.complexity.minor_degrees == std::vector<int>{4, 4, 4});
  CHECK(r.complexity.degree_sum == 4);
  CHECK_FALSE(r.delta_matches);
}

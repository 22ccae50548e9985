#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "srkit/bounds.hpp"

using namespace srkit;

TEST_CASE("binomials and Catalan numbers") {
  CHECK(big_binom(0, 0) == 1);
  CHECK(big_binom(10, 5) == 252);
  CHECK(big_binom(10, 11) == 0);
  CHECK(big_binom(60, 30) == BigInt("118264581564861424"));

  const BigInt expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (unsigned n = 0; n <= 9; ++n) CHECK(catalan(n) == expected[n]);
  CHECK(catalan(20) == BigInt("6564120420"));

  // Catalan recurrence as an independent cross-check.
  for (unsigned n = 1; n <= 20; ++n)
    CHECK(catalan(n) * (n + 1) == big_binom(2 * n, n));
}

TEST_CASE("walk counts: closed form versus dynamic programming") {
  for (unsigned n = 0; n <= 14; ++n) {
    CHECK(walk_count(n) == walk_count_dp(n));
    CHECK(walk_count(n) == big_binom(n, n / 2));
  }
}

TEST_CASE("walk enumeration matches the count") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto walks = nonneg_walks(n);
    CHECK(BigInt(walks.size()) == walk_count(n));
    for (const auto& w : walks) {
      REQUIRE(w.size() == n);
      int height = 0;
      for (int step : w) {
        CHECK((step == 1 || step == -1));
        height += step;
        CHECK(height >= 0);
      }
    }
  }

  // Vertex extraction on a hand-checked walk: up, up, down, up.
  const StepSeq v = walk_vertices({1, 1, -1, 1});
  CHECK(v.front() == 0);
  CHECK(v.back() == 4);
  CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("product identity holds exactly for every desk scale size") {
  for (unsigned gamma = 1; gamma <= 30; ++gamma) {
    const ProductIdentity id = product_identity_check(gamma);
    CHECK(id.equal);
    CHECK(id.lhs == id.rhs);
  }
  const ProductIdentity one = product_identity_check(1);
  CHECK(one.lhs == BigRat(2));
}

TEST_CASE("field size bound table") {
  const struct {
    int dim;
    int bound;
  } table[] = {{3, 3}, {4, 5}, {5, 11}, {6, 27}, {7, 77}, {8, 233}, {9, 751}, {10, 2495}};
  for (const auto& row : table) {
    const BoundReport r = field_size_bound(row.dim);
    CHECK(r.bound == row.bound);
    CHECK(r.N == row.bound - 1);
    CHECK(r.catalan_prev == catalan(static_cast<unsigned>(row.dim) - 1));
    CHECK(r.walks == big_binom(static_cast<unsigned>(row.dim) - 1,
                               (static_cast<unsigned>(row.dim) - 1) / 2));
    CHECK(r.L_count == r.catalan_prev);
    CHECK(r.Lprime_count == r.walks);
    CHECK((r.L_count + r.Lprime_count) == 2 * r.N);
  }

  // Beyond the direct-enumeration range only the closed forms remain.
  const BoundReport big = field_size_bound(20);
  CHECK(big.L_count == catalan(19));
  CHECK(big.bound == (catalan(19) + big_binom(19, 9)) / 2 + 1);
}

TEST_CASE("pair family counts match their closed forms") {
  for (int gamma = 2; gamma <= 12; ++gamma) {
    CHECK(count_L(gamma) == catalan(static_cast<unsigned>(gamma) - 1));
    CHECK(count_Lprime(gamma) ==
          big_binom(static_cast<unsigned>(gamma) - 1, (static_cast<unsigned>(gamma) - 1) / 2));
  }
}

TEST_CASE("step sequence families are equinumerous and the bijections invert") {
  for (int gamma = 1; gamma <= 7; ++gamma) {
    for (int i = 0; i < gamma; ++i) {
      const auto S = enumerate_S(i, gamma);
      const auto T = enumerate_T(i, gamma);
      CHECK(S.size() == T.size());

      std::set<StepSeq> t_seen;
      for (const StepSeq& s : S) {
        CHECK(in_S(s, i, gamma));
        const StepSeq t = bijection_f(s, i, gamma);
        CHECK(in_T(t, i, gamma));
        CHECK(bijection_g(t, i, gamma) == s);
        t_seen.insert(t);
      }
      CHECK(t_seen.size() == S.size());  // f is injective

      std::set<StepSeq> s_seen;
      for (const StepSeq& t : T) {
        CHECK(in_T(t, i, gamma));
        const StepSeq s = bijection_g(t, i, gamma);
        CHECK(in_S(s, i, gamma));
        CHECK(bijection_f(s, i, gamma) == t);
        s_seen.insert(s);
      }
      CHECK(s_seen.size() == T.size());  // g is injective
    }
  }
}

TEST_CASE("T family sizes sum to the central walk count") {
  for (int n = 2; n <= 8; ++n) {
    BigInt total = 0;
    for (int i = 0; i < n; ++i) total += enumerate_T(i, n).size();
    CHECK(total == walk_count(static_cast<unsigned>(n)));
  }
}

TEST_CASE("membership predicates on hand built sequences") {
  // gamma = 4, i = 1: candidates are (0, x, 4) with 0 < x < 4.
  // S needs s_1 + s_1 <= 4, so x <= 2; T needs x - (4 - x) >= 0, so x >= 2.
  CHECK(in_S({0, 1, 4}, 1, 4));
  CHECK(in_S({0, 2, 4}, 1, 4));
  CHECK_FALSE(in_S({0, 3, 4}, 1, 4));
  CHECK_FALSE(in_T({0, 1, 4}, 1, 4));
  CHECK(in_T({0, 2, 4}, 1, 4));
  CHECK(in_T({0, 3, 4}, 1, 4));
  CHECK(enumerate_S(1, 4).size() == 2);
  CHECK(enumerate_T(1, 4).size() == 2);

  // Malformed shapes are simply not members.
  CHECK_FALSE(in_T({0, 4}, 2, 4));
  CHECK_FALSE(in_S({0, 2, 2, 4}, 2, 4));  // not strictly increasing
  CHECK_FALSE(in_S({1, 2, 4}, 1, 4));     // must start at zero
}

#include <set>
#include <vector>

#include "doctest.h"
#include "srkit/search.hpp"

using namespace srkit;

namespace {

SearchConfig config(std::uint32_t q, int gamma) {
  SearchConfig cfg;
  cfg.field = field_for_order(q);
  cfg.gamma = gamma;
  return cfg;
}

}  // namespace

TEST_CASE("field_for_order resolves prime powers and rejects the rest") {
  CHECK(field_for_order(7)->prime_field());
  CHECK(field_for_order(49)->e() == 2);
  CHECK(field_for_order(64)->header() == "GF p=2 e=6 mod=1,1,0,0,0,0,1");
  CHECK_THROWS_AS(field_for_order(6), Error);
  CHECK_THROWS_AS(field_for_order(1), Error);
  CHECK(field_for_order(65536)->q() == 65536);  // largest supported order
  CHECK_THROWS_WITH_AS(field_for_order(65537), "Usage: field order exceeds the 2^16 cap", Error);
}

TEST_CASE("first witness and node counts are pinned") {
  FindResult r = find_superregular(config(3, 2));
  CHECK(r.outcome == Outcome::completed);
  CHECK(r.found);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->col == std::vector<code_t>{1, 1, 2});
  CHECK(r.stats.nodes == 3);
  CHECK(r.stats.deepest_level == 2);

  // GF(2) has no 3x3 witness; the tree dies after two nodes.
  FindResult none = find_superregular(config(2, 2));
  CHECK(none.outcome == Outcome::completed);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.stats.nodes == 2);
}

TEST_CASE("exhaustive counts over small fields") {
  const struct {
    std::uint32_t q;
    int gamma;
    std::uint64_t count;
  } table[] = {
      {3, 2, 4},  {4, 2, 18}, {5, 2, 48},  {3, 3, 0},
      {4, 3, 0},  {5, 3, 64}, {7, 3, 576},
  };
  for (const auto& row : table) {
    CountResult r = count_superregular(config(row.q, row.gamma));
    CHECK(r.outcome == Outcome::completed);
    CHECK(r.count == row.count);
  }

  CountResult g3 = count_superregular(config(3, 2));
  CHECK(g3.stats.nodes == 10);
  CountResult g5 = count_superregular(config(5, 3));
  CHECK(g5.stats.nodes == 132);
}

TEST_CASE("results are independent of thread count and value order") {
  for (int threads : {1, 2, 4}) {
    SearchConfig cfg = config(5, 3);
    cfg.threads = threads;
    CountResult r = count_superregular(cfg);
    CHECK(r.count == 64);
    CHECK(r.stats.nodes == 132);

    cfg = config(7, 3);
    cfg.threads = threads;
    FindResult f = find_superregular(cfg);
    REQUIRE(f.found);
    CHECK(f.witness->col == std::vector<code_t>{1, 1, 2, 1});
    CHECK(f.stats.nodes == 4);
  }

  SearchConfig rev = config(5, 3);
  rev.reverse_value_order = true;
  CHECK(count_superregular(rev).count == 64);
  FindResult fr = find_superregular(rev);
  CHECK(fr.found);
  // A different DFS order may surface a different witness, never a bogus one.
  CHECK(is_superregular(*fr.witness).superregular);
}

TEST_CASE("enumeration yields exactly the counted set") {
  std::vector<Toeplitz> all;
  enumerate_superregular(config(3, 2), [&](const Toeplitz& t) {
    all.push_back(t);
    return true;
  });
  REQUIRE(all.size() == 4);
  std::set<std::vector<code_t>> distinct;
  for (const Toeplitz& t : all) {
    CHECK(is_superregular(t).superregular);
    distinct.insert(t.col);
  }
  CHECK(distinct.size() == 4);

  int seen = 0;
  enumerate_superregular(config(3, 2), [&](const Toeplitz&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);
}

TEST_CASE("normalized and free searches agree on existence") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    for (int gamma = 1; gamma <= 4; ++gamma) {
      SearchConfig free_cfg = config(q, gamma);
      SearchConfig norm_cfg = config(q, gamma);
      norm_cfg.norm = Normalization::a0a1;
      const bool free_found = find_superregular(free_cfg).found;
      const bool norm_found = find_superregular(norm_cfg).found;
      CHECK(free_found == norm_found);

      SearchConfig a0_cfg = config(q, gamma);
      a0_cfg.norm = Normalization::a0;
      CHECK(find_superregular(a0_cfg).found == free_found);
    }
  }
}

TEST_CASE("normalized witnesses honour their pins") {
  SearchConfig cfg = config(7, 3);
  cfg.norm = Normalization::a0a1;
  FindResult r = find_superregular(cfg);
  REQUIRE(r.found);
  CHECK(r.witness->col[0] == 1);
  CHECK(r.witness->col[1] == 1);
  CHECK(is_superregular(*r.witness).superregular);
}

TEST_CASE("configuration errors") {
  SearchConfig cfg = config(3, 13);
  CHECK_THROWS_AS(find_superregular(cfg), Error);
  cfg = config(3, 2);
  cfg.norm = Normalization::a0a1;
  CHECK_THROWS_AS(count_superregular(cfg), Error);
  cfg.field = nullptr;
  CHECK_THROWS_AS(find_superregular(cfg), Error);
}

TEST_CASE("a tiny budget aborts a deep count") {
  SearchConfig cfg = config(11, 5);
  CHECK(count_superregular(cfg).count == 2000);

  cfg.budget_seconds = 1e-9;
  CountResult r = count_superregular(cfg);
  CHECK(r.outcome == Outcome::budget_exceeded);

  // Nonpositive budget disables the deadline entirely.
  cfg.budget_seconds = 0.0;
  CHECK(count_superregular(cfg).outcome == Outcome::completed);
}

TEST_CASE("minimum field size over both families") {
  MinFieldResult dim3 = min_field_size(3, FieldFamily::primes, 127);
  CHECK(dim3.outcome == Outcome::completed);
  CHECK(dim3.q == 3);
  CHECK(dim3.ruled_out == std::vector<std::uint32_t>{2});
  REQUIRE(dim3.witness.has_value());
  CHECK(is_superregular(*dim3.witness).superregular);

  MinFieldResult dim4 = min_field_size(4, FieldFamily::primes, 127);
  CHECK(dim4.q == 5);
  CHECK(dim4.ruled_out == std::vector<std::uint32_t>{2, 3});

  // GF(4) admits no 4x4 witness, so the prime-power scan rules it out too.
  MinFieldResult pp = min_field_size(4, FieldFamily::prime_powers, 127);
  CHECK(pp.q == 5);
  CHECK(pp.ruled_out == std::vector<std::uint32_t>{2, 3, 4});

  MinFieldResult capped = min_field_size(4, FieldFamily::primes, 3);
  CHECK(capped.outcome == Outcome::cap_exceeded);
  CHECK_FALSE(capped.q.has_value());
  CHECK(capped.ruled_out == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("conjecture probe finds the predicted witnesses") {
  ConjectureResult five = test_conjecture(5);
  CHECK(five.status == ConjectureResult::Status::witness_found);
  CHECK(five.q == 8);
  REQUIRE(five.witness.has_value());
  CHECK(five.witness->col == std::vector<code_t>{1, 1, 2, 6, 3});
  CHECK(five.stats.nodes == 6);
  CHECK(is_superregular(*five.witness).superregular);

  ConjectureResult six = test_conjecture(6);
  CHECK(six.status == ConjectureResult::Status::witness_found);
  CHECK(six.q == 16);
  CHECK(six.stats.nodes == 7);
  CHECK(is_superregular(*six.witness).superregular);

  CHECK_THROWS_AS(test_conjecture(4), Error);
}

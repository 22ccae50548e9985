#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "srkit/toeplitz.hpp"

namespace srkit {

enum class SearchMode { find_first, count_all, enumerate_all };

/// Existence-preserving normalizations. a0 pins a_0 = 1 (global scaling);
/// a0a1 additionally pins a_1 = 1 (diagonal conjugation). Counting modes
/// require none.
enum class Normalization { none, a0, a0a1 };

enum class Outcome { completed, budget_exceeded, cap_exceeded };

struct SearchConfig {
  FieldPtr field;
  int gamma = 0;  // matrix dimension is gamma + 1
  Normalization norm = Normalization::none;
  double budget_seconds = 60.0;
  int threads = 1;
  bool reverse_value_order = false;  // diagnostic: permute the DFS value order
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  int deepest_level = 0;
};

struct FindResult {
  Outcome outcome = Outcome::completed;
  bool found = false;
  std::optional<Toeplitz> witness;  // first hit in the documented value order
  SearchStats stats;
};

struct CountResult {
  Outcome outcome = Outcome::completed;
  std::uint64_t count = 0;
  SearchStats stats;
};

/// Depth-first search over nonzero columns with level-by-level forbidden
/// value pruning. Deterministic; results are independent of thread count.
FindResult find_superregular(const SearchConfig& cfg);
CountResult count_superregular(const SearchConfig& cfg);

/// Visits every superregular matrix in DFS order (single threaded,
/// normalization none). Return false to stop.
void enumerate_superregular(const SearchConfig& cfg, const std::function<bool(const Toeplitz&)>& fn);

enum class FieldFamily { primes, prime_powers };

struct MinFieldResult {
  Outcome outcome = Outcome::completed;
  int dimension = 0;  // matrix dimension (table row label)
  std::optional<std::uint32_t> q;
  std::optional<Toeplitz> witness;
  std::vector<std::uint32_t> ruled_out;  // orders refuted by exhaustion
  SearchStats stats;
};

/// Smallest field order (within the family, up to cap) admitting a
/// superregular matrix of the given dimension.
MinFieldResult min_field_size(int dimension, FieldFamily family, std::uint32_t cap,
                              double budget_per_field = 60.0, int threads = 1);

struct ConjectureResult {
  enum class Status { witness_found, refuted_by_exhaustion, budget_exceeded };
  Status status = Status::budget_exceeded;
  int dimension = 0;
  std::uint32_t q = 0;
  std::optional<Toeplitz> witness;
  SearchStats stats;
};

/// Probes for a dimension x dimension superregular matrix over GF(2^(dimension-2));
/// requires dimension >= 5.
ConjectureResult test_conjecture(int dimension, double budget_seconds = 60.0, int threads = 1);

/// Default field of the given prime-power order.
FieldPtr field_for_order(std::uint32_t q);

}  // namespace srkit

#pragma once

#include <optional>

#include "srkit/bounds.hpp"
#include "srkit/search.hpp"
#include "srkit/toeplitz.hpp"

namespace srkit {

/// First column of X^(gamma-1) where X is the gamma x gamma lower bidiagonal
/// all-ones matrix: the binomials binom(gamma-1, k).
struct PascalMatrix {
  int gamma = 0;
  std::vector<BigInt> col;
};

/// Computes X^(gamma-1) by repeated integer matrix multiplication and checks
/// the closed-form binomial column against it.
PascalMatrix pascal_power(int gamma);

/// The binomial column reduced mod p, as a Toeplitz matrix over GF(p).
Toeplitz pascal_mod_p(int gamma, std::uint32_t p);

struct PascalMinPrime {
  Outcome outcome = Outcome::completed;
  int gamma = 0;
  std::optional<std::uint32_t> prime;  // smallest prime making the reduction superregular
  std::vector<std::uint32_t> failures;
  std::optional<Toeplitz> witness;
};

PascalMinPrime pascal_min_prime(int gamma, std::uint32_t cap);

}  // namespace srkit

#include "srkit/pascal.hpp"

namespace srkit {

PascalMatrix pascal_power(int gamma) {
  if (gamma < 1) fail(errc::too_small, "dimension must be at least 1");
  const int n = gamma;
  std::vector<BigInt> x(static_cast<std::size_t>(n) * n, 0);
  std::vector<BigInt> acc(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    acc[static_cast<std::size_t>(i) * n + i] = 1;
    x[static_cast<std::size_t>(i) * n + i] = 1;
    if (i > 0) x[static_cast<std::size_t>(i) * n + (i - 1)] = 1;
  }
  for (int step = 0; step + 1 < gamma; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k <= i; ++k) {
        const BigInt& v = acc[static_cast<std::size_t>(i) * n + k];
        if (v == 0) continue;
        for (int j = 0; j <= k; ++j) {
          next[static_cast<std::size_t>(i) * n + j] += v * x[static_cast<std::size_t>(k) * n + j];
        }
      }
    }
    acc.swap(next);
  }
  PascalMatrix out;
  out.gamma = gamma;
  out.col.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.col[i] = acc[static_cast<std::size_t>(i) * n];
  for (int k = 0; k < n; ++k) {
    if (out.col[k] != big_binom(static_cast<unsigned>(gamma - 1), static_cast<unsigned>(k)))
      fail(errc::size_mismatch, "matrix power disagrees with the closed-form column");
  }
  return out;
}

Toeplitz pascal_mod_p(int gamma, std::uint32_t p) {
  const PascalMatrix pm = pascal_power(gamma);
  FieldPtr f = Field::create(p, 1);
  std::vector<code_t> col(pm.col.size());
  for (std::size_t k = 0; k < col.size(); ++k) {
    col[k] = static_cast<code_t>((pm.col[k] % p).convert_to<std::uint32_t>());
  }
  return {std::move(f), std::move(col)};
}

PascalMinPrime pascal_min_prime(int gamma, std::uint32_t cap) {
  PascalMinPrime res;
  res.gamma = gamma;
  for (std::uint32_t p = 2; p <= cap; ++p) {
    if (!is_prime_u32(p)) continue;
    Toeplitz t = pascal_mod_p(gamma, p);
    if (is_superregular_incremental(*t.field, t.col)) {
      res.prime = p;
      res.witness = std::move(t);
      res.outcome = Outcome::completed;
      return res;
    }
    res.failures.push_back(p);
  }
  res.outcome = Outcome::cap_exceeded;
  return res;
}

}  // namespace srkit

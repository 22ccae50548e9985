#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "srkit/errors.hpp"

namespace srkit {

/// Field element code. Codes pack the polynomial-basis coefficient vector
/// (c0,...,c_{e-1}) as sum c_i * p^i; prime fields use plain residues.
using code_t = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^e) with exact, table-driven arithmetic. Immutable once created and
/// safe to share across threads. The field order is capped at 2^16 so that
/// full log/antilog tables always fit.
class Field {
public:
  /// Creates GF(p^e) with the default modulus: the irreducible monic
  /// polynomial of degree e with x primitive whose coefficient encoding
  /// sum c_i p^i is smallest. Prime fields use the trivial modulus x.
  static FieldPtr create(std::uint32_t p, std::uint32_t e);

  /// Creates GF(p^e) with an explicit monic modulus, constant term first,
  /// length e+1. The modulus must be irreducible over GF(p).
  static FieldPtr create(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool prime_field() const { return e_ == 1; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  /// A verified generator of the multiplicative group: x when x is
  /// primitive for the chosen modulus (always true for default moduli),
  /// otherwise the smallest code with full order. Prime fields use the
  /// smallest generating residue.
  code_t primitive() const { return primitive_; }

  bool same(const Field& other) const;

  code_t add(code_t a, code_t b) const;
  code_t sub(code_t a, code_t b) const;
  code_t neg(code_t a) const;
  code_t mul(code_t a, code_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  }
  code_t inv(code_t a) const;
  code_t div(code_t a, code_t b) const;
  code_t pow(code_t a, long long n) const;
  code_t frobenius(code_t a, std::uint32_t i) const;  // a^(p^i)

  std::uint32_t dlog(code_t a) const;  // discrete log base primitive(); a != 0
  code_t from_dlog(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Nonzero values in the documented deterministic order: increasing
  /// residues for prime fields, increasing discrete log otherwise.
  /// r ranges over [0, q-2].
  code_t value_by_rank(std::uint32_t r) const;

  /// Total order used for canonical forms: residue order for prime fields,
  /// discrete-log order with zero last for extension fields.
  std::uint32_t canon_rank(code_t a) const;

  std::vector<std::uint32_t> coeffs(code_t a) const;
  code_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// Canonical notation: "0", residues for prime fields, and "1", "w",
  /// "w^k" for extension fields (w = primitive()).
  std::string format(code_t a) const;
  std::string format_poly(code_t a) const;  // "[c0,c1,...,c_{e-1}]"

  /// Accepts "0", residues (prime fields), "w", "w^k" and "[c0,...]".
  /// In strict mode exponents must lie in [0, q-2]; otherwise they reduce
  /// mod q-1.
  code_t parse(std::string_view text, bool strict = false) const;

  std::string header() const;  // "GF p=<p> e=<e> mod=<c0,...,ce>"
  static FieldPtr parse_header(std::string_view line);

private:
  Field() = default;
  void init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus, bool default_modulus);
  code_t mul_slow(code_t a, code_t b) const;
  code_t pow_slow(code_t a, std::uint64_t n) const;
  bool full_order(code_t a, const std::vector<std::uint32_t>& prime_factors) const;

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> mod_;
  code_t primitive_ = 0;
  std::vector<code_t> exp_;        // doubled: 2(q-1) entries, exp_[i] = primitive^i
  std::vector<std::uint32_t> log_; // log_[0] is a sentinel
};

/// Convenience value type pairing a code with its field. Mixed-field
/// arithmetic raises field_mismatch.
struct Element {
  FieldPtr field;
  code_t code = 0;

  Element() = default;
  Element(FieldPtr f, code_t c) : field(std::move(f)), code(c) {}

  Element pow(long long n) const { return {field, field->pow(code, n)}; }
  Element inverse() const { return {field, field->inv(code)}; }
  std::string str() const { return field->format(code); }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator/(const Element& a, const Element& b);
bool operator==(const Element& a, const Element& b);

inline Element parse_element(const FieldPtr& f, std::string_view text, bool strict = false) {
  return {f, f->parse(text, strict)};
}
inline std::string format_element(const Element& x) { return x.str(); }

bool is_prime_u32(std::uint32_t n);
bool is_prime_power_u32(std::uint32_t n, std::uint32_t* p_out = nullptr, std::uint32_t* e_out = nullptr);

}  // namespace srkit

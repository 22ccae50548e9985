#include "srkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace srkit {

namespace {

constexpr std::uint32_t kOrderCap = 1u << 16;

std::vector<std::uint32_t> digits_base_p(std::uint32_t value, std::uint32_t p, std::uint32_t count) {
  std::vector<std::uint32_t> d(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      std::uint64_t v = a[i - dm + j] + c * (p - m[j] % p);
      a[i - dm + j] = static_cast<std::uint32_t>(v % p);
    }
  }
  a.resize(dm);
  return a;
}

std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& m, std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

bool poly_is_zero(const std::vector<std::uint32_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Remainder of a by b (b monic-normalizable, nonzero).
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                    std::uint32_t p) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  const int db = static_cast<int>(b.size()) - 1;
  // normalize b monic
  std::uint32_t lead = b.back();
  if (lead != 1) {
    // multiply by lead^{-1} mod p
    std::uint32_t invl = 1;
    for (std::uint32_t x = 1; x < p; ++x) {
      if (x * std::uint64_t(lead) % p == 1) { invl = x; break; }
    }
    for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t(c) * invl % p);
  }
  while (true) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int da = static_cast<int>(a.size()) - 1;
    if (da < db) break;
    const std::uint64_t c = a.back();
    for (int j = 0; j <= db; ++j) {
      std::uint64_t v = a[da - db + j] + c * (p - b[j] % p);
      a[da - db + j] = static_cast<std::uint32_t>(v % p);
    }
  }
  return a;
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree at most deg/2.
bool poly_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::vector<std::uint32_t> div = digits_base_p(static_cast<std::uint32_t>(enc), p, d);
      div.push_back(1);  // monic degree d
      if (poly_is_zero(poly_rem(m, div, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors_u32(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_i64(std::string_view s, long long& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power_u32(std::uint32_t n, std::uint32_t* p_out, std::uint32_t* e_out) {
  if (n < 2) return false;
  std::uint32_t p = n;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) { p = d; break; }
  }
  std::uint32_t e = 0, m = n;
  while (m % p == 0) { m /= p; ++e; }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

code_t Field::mul_slow(code_t a, code_t b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<code_t>(std::uint64_t(a) * b % p_);
  const auto da = digits_base_p(a, p_, e_);
  const auto db = digits_base_p(b, p_, e_);
  const auto prod = poly_mulmod(da, db, mod_, p_);
  std::uint32_t code = 0;
  for (std::uint32_t i = e_; i-- > 0;) code = code * p_ + prod[i];
  return static_cast<code_t>(code);
}

code_t Field::pow_slow(code_t a, std::uint64_t n) const {
  code_t result = 1, base = a;
  while (n) {
    if (n & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    n >>= 1;
  }
  return result;
}

bool Field::full_order(code_t a, const std::vector<std::uint32_t>& prime_factors) const {
  if (a == 0) return false;
  const std::uint32_t order = q_ - 1;
  if (pow_slow(a, order) != 1) return false;
  for (std::uint32_t f : prime_factors) {
    if (pow_slow(a, order / f) == 1) return false;
  }
  return true;
}

void Field::init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
                 bool default_modulus) {
  if (!is_prime_u32(p)) fail(errc::not_prime, "p = " + std::to_string(p));
  if (e < 1) fail(errc::usage, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kOrderCap) fail(errc::usage, "field order exceeds the 2^16 cap");
  }
  p_ = p;
  e_ = e;
  q_ = static_cast<std::uint32_t>(q);

  const auto factors = prime_factors_u32(q_ - 1);

  if (e_ == 1) {
    if (default_modulus) {
      mod_ = {0, 1};
    } else {
      if (modulus.size() != 2 || modulus[1] != 1 || modulus[0] >= p_)
        fail(errc::usage, "modulus must be monic of degree e with coefficients below p");
      mod_ = std::move(modulus);
    }
    primitive_ = 0;
    if (q_ == 2) {
      primitive_ = 1;
    } else {
      for (std::uint32_t g = 2; g < q_; ++g) {
        if (full_order(static_cast<code_t>(g), factors)) { primitive_ = static_cast<code_t>(g); break; }
      }
    }
    if (primitive_ == 0) fail(errc::no_primitive_root, "no generating residue found");
  } else {
    if (default_modulus) {
      bool found = false;
      for (std::uint32_t enc = 1; enc < q_ && !found; ++enc) {
        auto cand = digits_base_p(enc, p_, e_);
        if (cand[0] == 0) continue;  // divisible by x
        cand.push_back(1);
        if (!poly_irreducible(cand, p_)) continue;
        mod_ = cand;
        if (full_order(static_cast<code_t>(p_), factors)) {  // x primitive
          primitive_ = static_cast<code_t>(p_);
          found = true;
        }
      }
      if (!found) fail(errc::no_primitive_root, "no modulus with x primitive found");
    } else {
      if (modulus.size() != e_ + 1 || modulus[e_] != 1)
        fail(errc::usage, "modulus must be monic of degree e, constant term first");
      for (auto c : modulus) {
        if (c >= p_) fail(errc::usage, "modulus coefficients must lie below p");
      }
      if (!poly_irreducible(modulus, p_)) {
        std::ostringstream os;
        os << "degree-" << e_ << " modulus over GF(" << p_ << ")";
        fail(errc::reducible_modulus, os.str());
      }
      mod_ = std::move(modulus);
      if (full_order(static_cast<code_t>(p_), factors)) {
        primitive_ = static_cast<code_t>(p_);
      } else {
        primitive_ = 0;
        for (std::uint32_t g = 2; g < q_; ++g) {
          if (full_order(static_cast<code_t>(g), factors)) { primitive_ = static_cast<code_t>(g); break; }
        }
        if (primitive_ == 0) fail(errc::no_primitive_root, "no primitive element found");
      }
    }
  }

  // log/antilog tables from the verified generator
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  code_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mul_slow(x, primitive_);
  }
  if (x != 1) fail(errc::no_primitive_root, "generator order check failed");
  log_[0] = 0xffffffffu;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t e) {
  auto f = std::shared_ptr<Field>(new Field());
  f->init(p, e, {}, true);
  return f;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
  auto f = std::shared_ptr<Field>(new Field());
  f->init(p, e, modulus, false);
  return f;
}

bool Field::same(const Field& other) const {
  return p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_;
}

code_t Field::add(code_t a, code_t b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) {
    std::uint32_t s = std::uint32_t(a) + b;
    return static_cast<code_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t out = 0, mult = 1;
  std::uint32_t ua = a, ub = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = ua % p_ + ub % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    ua /= p_;
    ub /= p_;
  }
  return static_cast<code_t>(out);
}

code_t Field::neg(code_t a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return static_cast<code_t>(a == 0 ? 0 : p_ - a);
  std::uint32_t out = 0, mult = 1, ua = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t d = ua % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    ua /= p_;
  }
  return static_cast<code_t>(out);
}

code_t Field::sub(code_t a, code_t b) const { return add(a, neg(b)); }

code_t Field::inv(code_t a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero");
  const std::uint32_t k = log_[a];
  return exp_[(q_ - 1) - k];
}

code_t Field::div(code_t a, code_t b) const {
  if (b == 0) fail(errc::division_by_zero, "division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (q_ - 1) - log_[b]];
}

code_t Field::pow(code_t a, long long n) const {
  if (a == 0) {
    if (n > 0) return 0;
    if (n == 0) return 1;
    fail(errc::division_by_zero, "negative power of zero");
  }
  const long long m = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (n % m)) % m;
  if (k < 0) k += m;
  return exp_[k];
}

code_t Field::frobenius(code_t a, std::uint32_t i) const {
  if (a == 0) return 0;
  std::uint64_t mult = 1;
  for (std::uint32_t t = 0; t < i % e_; ++t) mult = mult * p_ % (q_ - 1);
  return exp_[log_[a] * mult % (q_ - 1)];
}

std::uint32_t Field::dlog(code_t a) const {
  if (a == 0) fail(errc::division_by_zero, "discrete log of zero");
  return log_[a];
}

code_t Field::value_by_rank(std::uint32_t r) const {
  if (r >= q_ - 1) fail(errc::index_out_of_range, "value rank " + std::to_string(r));
  if (e_ == 1) return static_cast<code_t>(r + 1);
  return exp_[r];
}

std::uint32_t Field::canon_rank(code_t a) const {
  if (e_ == 1) return a;
  if (a == 0) return q_ - 1;
  return log_[a];
}

std::vector<std::uint32_t> Field::coeffs(code_t a) const { return digits_base_p(a, p_, e_); }

code_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.empty() || c.size() > e_) fail(errc::syntax_error, "coefficient list length");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) fail(errc::syntax_error, "coefficient out of range");
    code = code * p_ + c[i];
  }
  return static_cast<code_t>(code);
}

std::string Field::format(code_t a) const {
  if (a == 0) return "0";
  if (e_ == 1) return std::to_string(a);
  const std::uint32_t k = log_[a];
  if (k == 0) return "1";
  if (k == 1) return "w";
  return "w^" + std::to_string(k);
}

std::string Field::format_poly(code_t a) const {
  std::string out = "[";
  const auto c = coeffs(a);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

code_t Field::parse(std::string_view text, bool strict) const {
  const std::string_view s = trim(text);
  if (s.empty()) fail(errc::syntax_error, "empty element");

  if (s == "0") return 0;
  if (s == "w") return primitive_;

  if (s.starts_with("w^")) {
    long long k;
    if (!parse_i64(s.substr(2), k)) fail(errc::syntax_error, std::string(s));
    const long long m = q_ - 1;
    if (k < 0 || k > m - 1) {
      if (strict) fail(errc::exponent_out_of_range, std::string(s));
      k = ((k % m) + m) % m;
    }
    return exp_[static_cast<std::size_t>(k)];
  }

  if (s.front() == '[') {
    if (s.back() != ']') fail(errc::syntax_error, std::string(s));
    std::string body(s.substr(1, s.size() - 2));
    std::vector<std::uint32_t> c;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      long long v;
      if (!parse_i64(item, v) || v < 0) fail(errc::syntax_error, std::string(s));
      c.push_back(static_cast<std::uint32_t>(v));
    }
    return from_coeffs(c);
  }

  long long v;
  if (!parse_i64(s, v)) fail(errc::syntax_error, std::string(s));
  if (e_ == 1) {
    if (v < 0 || v >= p_) fail(errc::syntax_error, "residue out of range: " + std::string(s));
    return static_cast<code_t>(v);
  }
  if (v == 1) return 1;
  fail(errc::syntax_error, "extension field elements use w^k or [c0,...]: " + std::string(s));
}

std::string Field::header() const {
  std::string out = "GF p=" + std::to_string(p_) + " e=" + std::to_string(e_) + " mod=";
  for (std::size_t i = 0; i < mod_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mod_[i]);
  }
  return out;
}

FieldPtr Field::parse_header(std::string_view line) {
  const std::string_view s = trim(line);
  std::stringstream ss{std::string(s)};
  std::string tag, pfield, efield, modfield;
  ss >> tag >> pfield >> efield >> modfield;
  if (tag != "GF" || !pfield.starts_with("p=") || !efield.starts_with("e=") ||
      !modfield.starts_with("mod=") || !ss.eof()) {
    fail(errc::syntax_error, "field header: " + std::string(s));
  }
  long long p, e;
  if (!parse_i64(pfield.substr(2), p) || !parse_i64(efield.substr(2), e) || p < 2 || e < 1)
    fail(errc::syntax_error, "field header: " + std::string(s));
  std::vector<std::uint32_t> mod;
  std::stringstream ms(modfield.substr(4));
  std::string item;
  while (std::getline(ms, item, ',')) {
    long long v;
    if (!parse_i64(item, v) || v < 0) fail(errc::syntax_error, "field header modulus");
    mod.push_back(static_cast<std::uint32_t>(v));
  }
  return Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), mod);
}

namespace {
void require_same_field(const Element& a, const Element& b) {
  if (!a.field || !b.field || !a.field->same(*b.field))
    fail(errc::field_mismatch, "operands belong to different fields");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field, a.field->add(a.code, b.code)};
}
Element operator-(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field, a.field->sub(a.code, b.code)};
}
Element operator*(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field, a.field->mul(a.code, b.code)};
}
Element operator/(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field, a.field->div(a.code, b.code)};
}
bool operator==(const Element& a, const Element& b) {
  require_same_field(a, b);
  return a.code == b.code;
}

}  // namespace srkit

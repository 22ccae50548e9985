#include "srkit/codes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace srkit {

Poly poly_trim(Poly p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  return p;
}

Poly poly_add(const Field& f, const Poly& x, const Poly& y) {
  Poly out;
  out.c.resize(std::max(x.c.size(), y.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    const code_t a = i < x.c.size() ? x.c[i] : 0;
    const code_t b = i < y.c.size() ? y.c[i] : 0;
    out.c[i] = f.add(a, b);
  }
  return poly_trim(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& x, const Poly& y) {
  if (x.c.empty() || y.c.empty()) return {};
  Poly out;
  out.c.assign(x.c.size() + y.c.size() - 1, 0);
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      out.c[i + j] = f.add(out.c[i + j], f.mul(x.c[i], y.c[j]));
    }
  }
  return poly_trim(std::move(out));
}

namespace {

Poly poly_scale(const Field& f, const Poly& x, code_t c) {
  if (c == 0) return {};
  Poly out = x;
  for (code_t& v : out.c) v = f.mul(v, c);
  return out;
}

Poly poly_rem(const Field& f, Poly x, const Poly& y) {
  x = poly_trim(std::move(x));
  const int dy = y.deg();
  const code_t lead_inv = f.inv(y.c.back());
  while (x.deg() >= dy) {
    const code_t factor = f.mul(x.c.back(), lead_inv);
    const int shift = x.deg() - dy;
    for (int i = 0; i <= dy; ++i) {
      x.c[static_cast<std::size_t>(shift + i)] =
          f.sub(x.c[static_cast<std::size_t>(shift + i)], f.mul(factor, y.c[static_cast<std::size_t>(i)]));
    }
    x = poly_trim(std::move(x));
  }
  return x;
}

}  // namespace

Poly poly_gcd(const Field& f, Poly x, Poly y) {
  x = poly_trim(std::move(x));
  y = poly_trim(std::move(y));
  while (!y.c.empty()) {
    Poly r = poly_rem(f, std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.c.empty() && x.c.back() != 1) x = poly_scale(f, x, f.inv(x.c.back()));
  return x;
}

void validate_params(const CodeParams& p) {
  if (p.k < 1 || p.n <= p.k) fail(errc::usage, "code parameters need 1 <= k < n");
  if (p.delta < 0) fail(errc::usage, "complexity must be nonnegative");
}

int singleton_bound(const CodeParams& p) {
  return (p.n - p.k) * (p.delta / p.k + 1) + p.delta + 1;
}

int coldist_bound(const CodeParams& p, int j) { return (p.n - p.k) * (j + 1) + 1; }

PolyMatrix::PolyMatrix(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c) {
  if (r < 1 || c < 1) fail(errc::size_mismatch, "matrix shape " + std::to_string(r) + "x" + std::to_string(c));
  e.assign(static_cast<std::size_t>(r) * c, Poly{});
}

int PolyMatrix::max_degree() const {
  int m = 0;
  for (const Poly& p : e) m = std::max(m, p.deg());
  return m;
}

std::vector<int> PolyMatrix::column_degrees() const {
  std::vector<int> out(static_cast<std::size_t>(cols), 0);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out[j] = std::max(out[j], at(i, j).deg());
  }
  return out;
}

std::vector<Mat> expand(const PolyMatrix& p) {
  const int m = p.max_degree();
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int d = 0; d <= m; ++d) out.emplace_back(p.field, p.rows, p.cols);
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      const Poly& entry = p.at(i, j);
      for (int d = 0; d <= entry.deg(); ++d) out[d].at(i, j) = entry.c[static_cast<std::size_t>(d)];
    }
  }
  return out;
}

Mat sliding(const PolyMatrix& p, int j, Orientation o) {
  if (j < 0) fail(errc::too_small, "window index must be nonnegative");
  const std::vector<Mat> coeff = expand(p);
  const int br = o == Orientation::generator ? p.rows : p.cols;
  const int bc = o == Orientation::generator ? p.cols : p.rows;
  Mat out(p.field, (j + 1) * br, (j + 1) * bc);
  for (int rb = 0; rb <= j; ++rb) {
    for (int cb = 0; cb <= rb; ++cb) {
      const int d = rb - cb;
      if (d >= static_cast<int>(coeff.size())) continue;
      const Mat& block = coeff[static_cast<std::size_t>(d)];
      for (int i = 0; i < br; ++i) {
        for (int l = 0; l < bc; ++l) {
          const code_t v = o == Orientation::generator ? block.at(i, l) : block.at(l, i);
          out.at(rb * br + i, cb * bc + l) = v;
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

void decode_message(const Field& f, std::uint64_t enc, int k, std::vector<code_t>& u) {
  const std::uint64_t q = f.q();
  u.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    u[static_cast<std::size_t>(i)] = static_cast<code_t>(enc % q);
    enc /= q;
  }
}

}  // namespace

int column_distance(const PolyMatrix& g, int j, std::uint64_t enum_budget) {
  if (j < 0) fail(errc::too_small, "window index must be nonnegative");
  const Field& f = *g.field;
  const int n = g.rows, k = g.cols;
  const std::uint64_t per_block = saturating_pow(f.q(), k);
  std::uint64_t total = per_block - 1;
  for (int c = 1; c <= j; ++c) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per_block) {
      total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    total *= per_block;
  }
  if (total > enum_budget) {
    const std::string size = total == std::numeric_limits<std::uint64_t>::max()
                                 ? "more than 2^64"
                                 : std::to_string(total);
    fail(errc::budget_exceeded,
         "input space has " + size + " sequences, over the budget of " + std::to_string(enum_budget));
  }

  const std::vector<Mat> coeff = expand(g);
  const int maxd = static_cast<int>(coeff.size()) - 1;

  int best = (j + 1) * n + 1;
  std::vector<code_t> u;
  // acc[r] carries the block-r output of the already fixed message blocks.
  std::vector<std::vector<code_t>> acc(static_cast<std::size_t>(j) + 1,
                                       std::vector<code_t>(static_cast<std::size_t>(n), 0));

  std::function<void(int, int)> rec = [&](int c, int weight) {
    if (weight >= best) return;
    if (c > j) {
      best = weight;
      return;
    }
    const std::uint64_t first = (c == 0) ? 1 : 0;
    for (std::uint64_t enc = first; enc < per_block; ++enc) {
      decode_message(f, enc, k, u);
      // finalize block c and push the contribution into later blocks
      std::vector<std::vector<code_t>> saved(acc.begin() + c, acc.end());
      for (int r = c; r <= j; ++r) {
        const int d = r - c;
        if (d > maxd) break;
        const Mat& block = coeff[static_cast<std::size_t>(d)];
        for (int i = 0; i < n; ++i) {
          code_t s = acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
          for (int l = 0; l < k; ++l) s = f.add(s, f.mul(block.at(i, l), u[static_cast<std::size_t>(l)]));
          acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = s;
        }
      }
      int w = weight;
      for (int i = 0; i < n; ++i) {
        if (acc[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] != 0) ++w;
      }
      if (w < best) rec(c + 1, w);
      std::copy(saved.begin(), saved.end(), acc.begin() + c);
    }
  };
  rec(0, 0);
  return best;
}

namespace {

bool next_combination(std::vector<int>& ix, int n) {
  const int s = static_cast<int>(ix.size());
  for (int pos = s - 1; pos >= 0; --pos) {
    if (ix[pos] < n - (s - pos)) {
      ++ix[pos];
      for (int t = pos + 1; t < s; ++t) ix[t] = ix[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> all_rows(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

std::optional<int> min_dependence(const Mat& m, const std::vector<int>& designated_cols0) {
  if (designated_cols0.empty()) return std::nullopt;
  std::vector<char> designated(static_cast<std::size_t>(m.cols), 0);
  for (int c : designated_cols0) {
    if (c < 0 || c >= m.cols) fail(errc::index_out_of_range, "column " + std::to_string(c));
    designated[static_cast<std::size_t>(c)] = 1;
  }
  const std::vector<int> rows = all_rows(m.rows);

  for (int s = 1; s <= m.cols; ++s) {
    std::vector<int> subset(static_cast<std::size_t>(s));
    std::iota(subset.begin(), subset.end(), 0);
    do {
      bool meets = false;
      for (int c : subset) meets = meets || designated[static_cast<std::size_t>(c)];
      if (!meets) continue;
      const int full_rank = rank(select(m, rows, subset));
      if (full_rank == s) continue;  // independent columns: no dependence at all
      for (int c : subset) {
        if (!designated[static_cast<std::size_t>(c)]) continue;
        std::vector<int> others;
        others.reserve(static_cast<std::size_t>(s) - 1);
        for (int o : subset) {
          if (o != c) others.push_back(o);
        }
        if (rank(select(m, rows, others)) == full_rank) return s;  // c in span(others)
      }
    } while (next_combination(subset, m.cols));
  }
  return std::nullopt;
}

int dual_column_distance(const PolyMatrix& h, int n, int k, int j) {
  if (h.rows != n || h.cols != n - k) fail(errc::size_mismatch, "parity data must be n x (n-k)");
  const Mat m = sliding(h, j, Orientation::parity_transpose);
  std::vector<int> block0(static_cast<std::size_t>(n));
  std::iota(block0.begin(), block0.end(), 0);
  const auto d = min_dependence(m, block0);
  if (!d) fail(errc::usage, "no codeword has a nonzero leading block");
  return *d;
}

int dual_column_distance_hat(const Mat& assembled, int n, int k, int j) {
  const int r = (j + 1) * (n - k);
  if (assembled.rows != r || assembled.cols != (j + 1) * n)
    fail(errc::size_mismatch, "assembled matrix must be (j+1)(n-k) x (j+1)n");
  std::vector<int> block0;
  for (int c = 0; c < n - k; ++c) block0.push_back(c);
  for (int c = 0; c < k; ++c) block0.push_back(r + c);
  const auto d = min_dependence(assembled, block0);
  if (!d) fail(errc::usage, "no codeword has a nonzero leading block");
  return *d;
}

namespace {

MaxSpanResult max_span_core(const Mat& m, const std::vector<int>& tested, int dependency_width) {
  if (dependency_width < 1) fail(errc::too_small, "dependency width must be at least 1");
  MaxSpanResult res;
  const std::vector<int> rows = all_rows(m.rows);
  const int span_size = std::min(dependency_width - 1, m.cols - 1);

  for (int c : tested) {
    if (c < 0 || c >= m.cols) fail(errc::index_out_of_range, "column " + std::to_string(c));
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(m.cols) - 1);
    for (int o = 0; o < m.cols; ++o) {
      if (o != c) others.push_back(o);
    }
    const std::vector<int> target{c};
    if (span_size == 0) {
      bool zero = true;
      for (int i = 0; i < m.rows; ++i) zero = zero && m.at(i, c) == 0;
      if (zero) {
        res.ok = false;
        res.witness = SpanWitness{c, {}};
        return res;
      }
      continue;
    }
    std::vector<int> pick(static_cast<std::size_t>(span_size));
    std::iota(pick.begin(), pick.end(), 0);
    do {
      std::vector<int> span_cols;
      span_cols.reserve(pick.size() + 1);
      for (int ix : pick) span_cols.push_back(others[static_cast<std::size_t>(ix)]);
      const int base = rank(select(m, rows, span_cols));
      span_cols.push_back(c);
      if (rank(select(m, rows, span_cols)) == base) {
        span_cols.pop_back();
        res.ok = false;
        res.witness = SpanWitness{c, span_cols};
        return res;
      }
    } while (next_combination(pick, static_cast<int>(others.size())));
  }
  res.ok = true;
  return res;
}

}  // namespace

MaxSpanResult max_span_property(const Mat& m, int prefix_width, int dependency_width) {
  if (prefix_width < 0 || prefix_width > m.cols) fail(errc::index_out_of_range, "prefix width");
  std::vector<int> tested(static_cast<std::size_t>(prefix_width));
  std::iota(tested.begin(), tested.end(), 0);
  return max_span_core(m, tested, dependency_width);
}

MaxSpanResult max_span_property_hat(const Mat& m, int identity_width, int k, int dependency_width) {
  if (identity_width < 0 || k < 1 || identity_width + k > m.cols)
    fail(errc::index_out_of_range, "tested column range");
  std::vector<int> tested(static_cast<std::size_t>(k));
  std::iota(tested.begin(), tested.end(), identity_width);
  return max_span_core(m, tested, dependency_width);
}

MdpExtraction extract_mdp(const Toeplitz& t, const CodeParams& p, int j, bool unchecked) {
  validate_params(p);
  if (j < 0) fail(errc::too_small, "window index must be nonnegative");
  const int need = (j + 1) * (p.n - 1);
  if (t.dim() < need)
    fail(errc::too_small, "matrix dimension " + std::to_string(t.dim()) + " is below " + std::to_string(need));

  MdpExtraction out;
  for (int b = 0; b <= j; ++b) {
    for (int i = p.k; i <= p.n - 1; ++i) out.rows1.push_back(b * (p.n - 1) + i);
    for (int i = 1; i <= p.k; ++i) out.cols1.push_back(b * (p.n - 1) + i);
  }

  const int r = (j + 1) * (p.n - p.k);
  out.t_prime = Mat(t.field, r, (j + 1) * p.k);
  for (int u = 0; u < r; ++u) {
    for (int v = 0; v < (j + 1) * p.k; ++v) {
      out.t_prime.at(u, v) = t.entry(out.rows1[static_cast<std::size_t>(u)], out.cols1[static_cast<std::size_t>(v)]);
    }
  }
  out.assembled = hconcat(Mat::identity(t.field, r), out.t_prime);

  if (!unchecked) {
    const MaxSpanResult msp = max_span_property_hat(out.assembled, r, p.k, r);
    if (!msp.ok) fail(errc::not_superregular, "extracted columns miss the span property");
  }
  return out;
}

namespace {

Poly poly_minor_det(const Field& f, const PolyMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  if (s == 1) return m.at(rows[0], cols[0]);
  Poly acc;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int v = 0; v < s; ++v) {
    const Poly& head = m.at(rows[0], cols[static_cast<std::size_t>(v)]);
    if (head.c.empty()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(static_cast<std::size_t>(s) - 1);
    for (int w = 0; w < s; ++w) {
      if (w != v) sub_cols.push_back(cols[static_cast<std::size_t>(w)]);
    }
    Poly term = poly_mul(f, head, poly_minor_det(f, m, sub_rows, sub_cols));
    if (v % 2 == 1) term = poly_scale(f, term, f.neg(1));
    acc = poly_add(f, acc, term);
  }
  return acc;
}

}  // namespace

namespace {

/// Exact quotient; the caller guarantees divisibility.
Poly poly_divexact(const Field& f, Poly x, const Poly& y) {
  x = poly_trim(std::move(x));
  if (x.c.empty()) return {};
  const int dy = y.deg();
  Poly q;
  q.c.assign(static_cast<std::size_t>(x.deg() - dy) + 1, 0);
  const code_t lead_inv = f.inv(y.c.back());
  while (x.deg() >= dy) {
    const int shift = x.deg() - dy;
    const code_t factor = f.mul(x.c.back(), lead_inv);
    q.c[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dy; ++i) {
      x.c[static_cast<std::size_t>(shift + i)] =
          f.sub(x.c[static_cast<std::size_t>(shift + i)], f.mul(factor, y.c[static_cast<std::size_t>(i)]));
    }
    x = poly_trim(std::move(x));
  }
  if (!x.c.empty()) fail(errc::size_mismatch, "quotient is not exact");
  return q;
}

}  // namespace

PolyMatrix derived_parity_transpose(const PolyMatrix& g) {
  const Field& f = *g.field;
  if (g.rows != g.cols + 1) fail(errc::size_mismatch, "expects an n x (n-1) input");
  const int n = g.rows, k = g.cols;
  const std::vector<int> cols = all_rows(k);

  std::vector<Poly> minors(static_cast<std::size_t>(n));
  Poly gcd;
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (int r = 0; r < n; ++r) {
      if (r != drop) rows.push_back(r);
    }
    Poly d = poly_minor_det(f, g, rows, cols);
    if (drop % 2 == 1) d = poly_scale(f, d, f.neg(1));
    gcd = poly_gcd(f, gcd, d);
    minors[static_cast<std::size_t>(drop)] = std::move(d);
  }
  if (gcd.c.empty()) fail(errc::singular, "every maximal minor vanishes");

  PolyMatrix h(g.field, n, 1);
  for (int r = 0; r < n; ++r) h.at(r, 0) = poly_divexact(f, minors[static_cast<std::size_t>(r)], gcd);
  return h;
}

ComplexityReport complexity_from_minors(const PolyMatrix& g) {
  const Field& f = *g.field;
  if (g.rows < g.cols) fail(errc::size_mismatch, "expects at least as many rows as columns");
  const int k = g.cols;
  ComplexityReport out;

  std::vector<int> cols = all_rows(k);
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  Poly gcd;
  int max_deg = -1;
  do {
    const Poly d = poly_minor_det(f, g, pick, cols);
    out.minor_degrees.push_back(d.deg());
    max_deg = std::max(max_deg, d.deg());
    gcd = poly_gcd(f, gcd, d);
  } while (next_combination(pick, g.rows));

  out.delta_hat = std::max(max_deg, 0);
  out.basic = gcd.deg() == 0;
  const std::vector<int> cdeg = g.column_degrees();
  out.degree_sum = std::accumulate(cdeg.begin(), cdeg.end(), 0);
  return out;
}

namespace {

bool generator_enumeration_fits(const Field& f, int k, int j, std::uint64_t enum_budget) {
  const std::uint64_t per_block = saturating_pow(f.q(), k);
  std::uint64_t total = per_block - 1;
  for (int c = 1; c <= j; ++c) {
    if (total > enum_budget / per_block + 1) return false;
    total *= per_block;
  }
  return total <= enum_budget;
}

}  // namespace

CertifyReport mdp_certify(const PolyMatrix& g, const CodeParams& p, std::uint64_t enum_budget) {
  validate_params(p);
  if (g.rows != p.n || g.cols != p.k) fail(errc::size_mismatch, "generator data must be n x k");
  const Field& f = *g.field;

  CertifyReport out;
  out.params = p;
  out.L = p.L();

  // The dual route kicks in when direct enumeration of some window is out
  // of budget. It needs a parity row (rate (n-1)/n only) whose constant
  // block is nonzero and a leading generator block of full column rank, so
  // that the truncated kernel is exactly the truncated image.
  std::optional<PolyMatrix> parity;
  if (p.k == p.n - 1 && !generator_enumeration_fits(f, p.k, out.L, enum_budget)) {
    PolyMatrix h = derived_parity_transpose(g);
    bool h0_nonzero = false;
    for (int r = 0; r < h.rows; ++r) {
      h0_nonzero = h0_nonzero || (!h.at(r, 0).c.empty() && h.at(r, 0).c.front() != 0);
    }
    Mat g0(g.field, p.n, p.k);
    for (int i = 0; i < p.n; ++i) {
      for (int c = 0; c < p.k; ++c) g0.at(i, c) = g.at(i, c).c.empty() ? 0 : g.at(i, c).c.front();
    }
    if (h0_nonzero && rank(g0) == p.k) parity = std::move(h);
  }

  for (int j = 0; j <= out.L; ++j) {
    if (generator_enumeration_fits(f, p.k, j, enum_budget)) {
      out.profile.push_back(column_distance(g, j, enum_budget));
      out.profile_method.emplace_back("generator");
    } else if (parity) {
      out.profile.push_back(dual_column_distance(*parity, p.n, p.k, j));
      out.profile_method.emplace_back("dual");
    } else {
      fail(errc::budget_exceeded,
           "window " + std::to_string(j) + " exceeds the enumeration budget and no dual route applies");
    }
    out.bounds.push_back(coldist_bound(p, j));
  }
  out.monotone = true;
  out.within_bounds = true;
  for (std::size_t j = 0; j < out.profile.size(); ++j) {
    if (j > 0 && out.profile[j] < out.profile[j - 1]) out.monotone = false;
    if (out.profile[j] > out.bounds[j]) out.within_bounds = false;
  }
  out.is_mdp = out.profile.back() == out.bounds.back();
  out.complexity = complexity_from_minors(g);
  out.delta_matches = out.complexity.delta_hat == p.delta;
  return out;
}

}  // namespace srkit

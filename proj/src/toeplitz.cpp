#include "srkit/toeplitz.hpp"

#include <array>
#include <mutex>
#include <string>

namespace srkit {

Toeplitz::Toeplitz(FieldPtr f, std::vector<code_t> c) : field(std::move(f)), col(std::move(c)) {
  if (col.empty()) fail(errc::too_small, "matrix needs at least one entry");
  if (dim() > kMaxDim) fail(errc::size_mismatch, "dimension " + std::to_string(dim()));
  for (code_t v : col) {
    if (v >= field->q()) fail(errc::index_out_of_range, "entry code " + std::to_string(v));
  }
}

Mat Toeplitz::to_mat() const {
  Mat m(field, dim(), dim());
  for (int i = 1; i <= dim(); ++i) {
    for (int j = 1; j <= i; ++j) m.at(i - 1, j - 1) = col[i - j];
  }
  return m;
}

bool operator==(const Toeplitz& x, const Toeplitz& y) {
  if (!x.field || !y.field || !x.field->same(*y.field)) return false;
  return x.col == y.col;
}

bool is_proper(const IndexPair& idx) {
  if (idx.rows.size() != idx.cols.size()) return false;
  for (std::size_t v = 0; v < idx.rows.size(); ++v) {
    if (idx.cols[v] > idx.rows[v]) return false;
  }
  return true;
}

void validate_index_pair(const IndexPair& idx, int dim) {
  auto check = [&](const std::vector<int>& ix, const char* what) {
    if (ix.empty()) fail(errc::too_small, std::string(what) + " index set is empty");
    int prev = 0;
    for (int v : ix) {
      if (v <= prev) fail(errc::index_out_of_range, std::string(what) + " indices must be strictly increasing");
      if (v > dim) fail(errc::index_out_of_range, std::string(what) + " index " + std::to_string(v));
      prev = v;
    }
  };
  check(idx.rows, "row");
  check(idx.cols, "column");
  if (idx.rows.size() != idx.cols.size()) fail(errc::size_mismatch, "index sets have different sizes");
}

Mat submatrix(const Toeplitz& t, const IndexPair& idx) {
  validate_index_pair(idx, t.dim());
  const int s = static_cast<int>(idx.rows.size());
  Mat m(t.field, s, s);
  for (int u = 0; u < s; ++u) {
    for (int v = 0; v < s; ++v) m.at(u, v) = t.entry(idx.rows[u], idx.cols[v]);
  }
  return m;
}

namespace {

/// Lexicographic successor over s-subsets of [1, dim].
bool next_subset(std::vector<int>& ix, int dim) {
  const int s = static_cast<int>(ix.size());
  for (int pos = s - 1; pos >= 0; --pos) {
    if (ix[pos] < dim - (s - 1 - pos)) {
      ++ix[pos];
      for (int t = pos + 1; t < s; ++t) ix[t] = ix[t - 1] + 1;
      return true;
    }
  }
  return false;
}

bool first_proper_cols(const std::vector<int>& rows, std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  cols.resize(s);
  for (int v = 0; v < s; ++v) {
    cols[v] = v + 1;
    if (cols[v] > rows[v]) return false;  // cannot happen: rows[v] >= v+1
  }
  return true;
}

/// Successor among proper column sets for fixed rows: strictly increasing,
/// cols[v] <= rows[v]. Increments the rightmost position whose minimal tail
/// continuation stays feasible; raising that position further only raises
/// the tail minima, so a failed position can be skipped outright.
bool next_proper_cols(const std::vector<int>& rows, std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  for (int pos = s - 1; pos >= 0; --pos) {
    if (cols[pos] + 1 > rows[pos]) continue;
    ++cols[pos];
    bool feasible = true;
    for (int t = pos + 1; t < s; ++t) {
      cols[t] = cols[t - 1] + 1;
      if (cols[t] > rows[t]) { feasible = false; break; }
    }
    if (feasible) return true;
    --cols[pos];
  }
  return false;
}

}  // namespace

void for_each_proper(int dim, int s, const std::function<bool(const IndexPair&)>& fn) {
  if (dim < 1) fail(errc::too_small, "dimension must be at least 1");
  const int lo = (s == 0) ? 1 : s;
  const int hi = (s == 0) ? dim : s;
  IndexPair idx;
  for (int size = lo; size <= hi && size <= dim; ++size) {
    idx.rows.resize(size);
    for (int v = 0; v < size; ++v) idx.rows[v] = v + 1;
    do {
      if (!first_proper_cols(idx.rows, idx.cols)) continue;
      do {
        if (!fn(idx)) return;
      } while (next_proper_cols(idx.rows, idx.cols));
    } while (next_subset(idx.rows, dim));
  }
}

std::vector<IndexPair> enumerate_proper(int gamma, int s) {
  std::vector<IndexPair> out;
  for_each_proper(gamma + 1, s, [&](const IndexPair& idx) {
    out.push_back(idx);
    return true;
  });
  return out;
}

std::uint64_t count_proper(int dim) {
  std::uint64_t n = 0;
  for_each_proper(dim, 0, [&](const IndexPair&) {
    ++n;
    return true;
  });
  return n;
}

SrCheck is_superregular(const Toeplitz& t) {
  SrCheck result;
  result.superregular = true;
  std::array<code_t, kMaxDim * kMaxDim> buf;
  for_each_proper(t.dim(), 0, [&](const IndexPair& idx) {
    const int s = static_cast<int>(idx.rows.size());
    for (int u = 0; u < s; ++u) {
      for (int v = 0; v < s; ++v) buf[u * s + v] = t.entry(idx.rows[u], idx.cols[v]);
    }
    if (det_inplace(*t.field, buf.data(), s) == 0) {
      result.superregular = false;
      result.witness = idx;
      return false;
    }
    return true;
  });
  return result;
}

std::vector<std::pair<IndexPair, code_t>> superregular_certificate(const Toeplitz& t) {
  std::vector<std::pair<IndexPair, code_t>> out;
  std::array<code_t, kMaxDim * kMaxDim> buf;
  for_each_proper(t.dim(), 0, [&](const IndexPair& idx) {
    const int s = static_cast<int>(idx.rows.size());
    for (int u = 0; u < s; ++u) {
      for (int v = 0; v < s; ++v) buf[u * s + v] = t.entry(idx.rows[u], idx.cols[v]);
    }
    out.emplace_back(idx, det_inplace(*t.field, buf.data(), s));
    return true;
  });
  return out;
}

namespace {

/// Emits every linear pair of the given level: interior rows
/// i_1 < ... < i_t and interior columns j_2 < ... < j_{t+1} within
/// [2, level], ascending, with j_{v+1} <= i_v. The implicit corner is row
/// level+1, column 1. Every prefix is itself a linear pair, so the
/// recursion emits at each node.
void build_linear_pairs(int level, std::vector<int>& rows, std::vector<int>& cols,
                        std::vector<LinearPair>& out) {
  out.push_back({static_cast<int>(rows.size()) + 1, rows, cols});
  const int last_row = rows.empty() ? 1 : rows.back();
  for (int i = last_row + 1; i <= level; ++i) {
    const int last_col = cols.empty() ? 1 : cols.back();
    for (int j = last_col + 1; j <= i; ++j) {
      rows.push_back(i);
      cols.push_back(j);
      build_linear_pairs(level, rows, cols, out);
      rows.pop_back();
      cols.pop_back();
    }
  }
}

}  // namespace

const std::vector<LinearPair>& linear_pairs(int level) {
  if (level < 1 || level > kMaxSearchLevel) fail(errc::index_out_of_range, "level " + std::to_string(level));
  static std::array<std::vector<LinearPair>, kMaxSearchLevel + 1> cache;
  static std::array<std::once_flag, kMaxSearchLevel + 1> built;
  std::call_once(built[level], [level] {
    std::vector<int> rows, cols;
    build_linear_pairs(level, rows, cols, cache[level]);
  });
  return cache[level];
}

int forbidden_values(const Field& f, std::span<const code_t> prefix, int level,
                     std::vector<char>& forbidden) {
  if (static_cast<int>(prefix.size()) < level)
    fail(errc::size_mismatch, "prefix shorter than the level");
  forbidden.assign(f.q(), 0);
  int marked = 0;
  auto mark = [&](code_t v) {
    if (v != 0 && !forbidden[v]) {
      forbidden[v] = 1;
      ++marked;
    }
  };
  auto entry = [&](int i, int j) -> code_t {  // 1-based within the level+1 square
    return i >= j ? prefix[static_cast<std::size_t>(i - j)] : 0;
  };

  std::array<code_t, (kMaxSearchLevel + 1) * (kMaxSearchLevel + 1)> buf;
  for (const LinearPair& lp : linear_pairs(level)) {
    const int s = lp.s;
    // Full pair with the corner entry a_level set to zero.
    for (int u = 0; u < s; ++u) {
      const int row = (u + 1 < s) ? lp.rows[u] : level + 1;
      for (int v = 0; v < s; ++v) {
        const int col = (v == 0) ? 1 : lp.cols[v - 1];
        buf[u * s + v] = (row == level + 1 && col == 1) ? 0 : entry(row, col);
      }
    }
    const code_t d0 = det_inplace(f, buf.data(), s);

    code_t minor = 1;
    if (s > 1) {
      const int m = s - 1;
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) buf[u * m + v] = entry(lp.rows[u], lp.cols[v]);
      }
      minor = det_inplace(f, buf.data(), m);
    }

    // det(a_level = v) = d0 + sign * minor * v with sign = (-1)^{s+1}.
    if (minor == 0) {
      // Unreachable when the prefix is superregular; the pair is then
      // constant in a_level and the constraint is vacuous or total.
      if (d0 == 0) {
        for (std::uint32_t r = 0; r + 1 < f.q(); ++r) mark(f.value_by_rank(r));
      }
      continue;
    }
    code_t slope = minor;
    if (s % 2 == 0) slope = f.neg(slope);
    mark(f.div(f.neg(d0), slope));
  }
  return marked;
}

bool is_superregular_incremental(const Field& f, std::span<const code_t> prefix) {
  if (prefix.empty()) fail(errc::too_small, "matrix needs at least one entry");
  if (prefix[0] == 0) return false;
  const int gamma = static_cast<int>(prefix.size()) - 1;
  if (gamma > kMaxSearchLevel) {
    // Beyond the cached levels run the plain full check.
    bool ok = true;
    std::array<code_t, kMaxDim * kMaxDim> buf;
    for_each_proper(gamma + 1, 0, [&](const IndexPair& idx) {
      const int s = static_cast<int>(idx.rows.size());
      for (int u = 0; u < s; ++u) {
        for (int v = 0; v < s; ++v) {
          const int diff = idx.rows[u] - idx.cols[v];
          buf[u * s + v] = diff >= 0 ? prefix[static_cast<std::size_t>(diff)] : 0;
        }
      }
      ok = det_inplace(f, buf.data(), s) != 0;
      return ok;
    });
    return ok;
  }
  std::vector<char> forbidden;
  for (int level = 1; level <= gamma; ++level) {
    forbidden_values(f, prefix, level, forbidden);
    const code_t v = prefix[level];
    if (v == 0 || forbidden[v]) return false;
  }
  return true;
}

}  // namespace srkit

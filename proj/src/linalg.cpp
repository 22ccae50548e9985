#include "srkit/linalg.hpp"

#include <algorithm>
#include <string>

namespace srkit {

Mat::Mat(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c) {
  if (r < 0 || c < 0 || r > kMaxDim || c > 2 * kMaxDim)
    fail(errc::size_mismatch, "matrix shape " + std::to_string(r) + "x" + std::to_string(c));
  a.assign(static_cast<std::size_t>(r) * c, 0);
}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const Mat& x, const Mat& y) {
  if (!x.field || !y.field || !x.field->same(*y.field)) return false;
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Mat hconcat(const Mat& left, const Mat& right) {
  if (!left.field->same(*right.field)) fail(errc::field_mismatch, "hconcat");
  if (left.rows != right.rows) fail(errc::size_mismatch, "hconcat row counts differ");
  Mat out(left.field, left.rows, left.cols + right.cols);
  for (int i = 0; i < left.rows; ++i) {
    for (int j = 0; j < left.cols; ++j) out.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols; ++j) out.at(i, left.cols + j) = right.at(i, j);
  }
  return out;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (!x.field->same(*y.field)) fail(errc::field_mismatch, "mat_mul");
  if (x.cols != y.rows) fail(errc::size_mismatch, "mat_mul inner dimensions differ");
  const Field& f = *x.field;
  Mat out(x.field, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const code_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
      }
    }
  }
  return out;
}

Mat select(const Mat& m, std::span<const int> rows0, std::span<const int> cols0) {
  Mat out(m.field, static_cast<int>(rows0.size()), static_cast<int>(cols0.size()));
  for (std::size_t i = 0; i < rows0.size(); ++i) {
    const int r = rows0[i];
    if (r < 0 || r >= m.rows) fail(errc::index_out_of_range, "row " + std::to_string(r));
    for (std::size_t j = 0; j < cols0.size(); ++j) {
      const int c = cols0[j];
      if (c < 0 || c >= m.cols) fail(errc::index_out_of_range, "column " + std::to_string(c));
      out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(r, c);
    }
  }
  return out;
}

Mat antitranspose(const Mat& m) {
  Mat out(m.field, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      out.at(m.cols - 1 - j, m.rows - 1 - i) = m.at(i, j);
    }
  }
  return out;
}

code_t det_inplace(const Field& f, code_t* buf, int s) {
  code_t sign = 1;
  for (int c = 0; c < s; ++c) {
    int pivot = -1;
    for (int r = c; r < s; ++r) {
      if (buf[r * s + c] != 0) { pivot = r; break; }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = c; j < s; ++j) std::swap(buf[pivot * s + j], buf[c * s + j]);
      sign = f.neg(sign);
    }
    const code_t pv = buf[c * s + c];
    const code_t pv_inv = f.inv(pv);
    for (int r = c + 1; r < s; ++r) {
      const code_t head = buf[r * s + c];
      if (head == 0) continue;
      const code_t factor = f.mul(head, pv_inv);
      buf[r * s + c] = 0;
      for (int j = c + 1; j < s; ++j) {
        buf[r * s + j] = f.sub(buf[r * s + j], f.mul(factor, buf[c * s + j]));
      }
    }
  }
  code_t d = sign;
  for (int c = 0; c < s; ++c) d = f.mul(d, buf[c * s + c]);
  return d;
}

code_t det(const Mat& m) {
  if (m.rows != m.cols) fail(errc::not_square, "determinant");
  if (m.rows == 0) return 1;
  std::vector<code_t> buf(m.a);
  return det_inplace(*m.field, buf.data(), m.rows);
}

int rank(const Mat& m) {
  const Field& f = *m.field;
  std::vector<code_t> buf(m.a);
  const int rows = m.rows, cols = m.cols;
  auto at = [&](int i, int j) -> code_t& { return buf[static_cast<std::size_t>(i) * cols + j]; };
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (at(r, c) != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rk) {
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rk, j));
    }
    const code_t inv = f.inv(at(rk, c));
    for (int r = rk + 1; r < rows; ++r) {
      const code_t head = at(r, c);
      if (head == 0) continue;
      const code_t factor = f.mul(head, inv);
      for (int j = c; j < cols; ++j) at(r, j) = f.sub(at(r, j), f.mul(factor, at(rk, j)));
    }
    ++rk;
  }
  return rk;
}

Mat inverse(const Mat& m) {
  if (m.rows != m.cols) fail(errc::not_square, "inverse");
  const Field& f = *m.field;
  const int n = m.rows;
  Mat aug = hconcat(m, Mat::identity(m.field, n));
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (aug.at(r, c) != 0) { pivot = r; break; }
    }
    if (pivot < 0) fail(errc::singular, "matrix has no inverse");
    if (pivot != c) {
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(c, j));
    }
    const code_t inv = f.inv(aug.at(c, c));
    for (int j = 0; j < 2 * n; ++j) aug.at(c, j) = f.mul(aug.at(c, j), inv);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const code_t head = aug.at(r, c);
      if (head == 0) continue;
      for (int j = 0; j < 2 * n; ++j) {
        aug.at(r, j) = f.sub(aug.at(r, j), f.mul(head, aug.at(c, j)));
      }
    }
  }
  Mat out(m.field, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

}  // namespace srkit

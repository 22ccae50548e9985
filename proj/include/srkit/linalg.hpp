#pragma once

#include <span>
#include <vector>

#include "srkit/field.hpp"

namespace srkit {

/// Dense matrices are desk scale by design.
constexpr int kMaxDim = 64;

/// Dense row-major matrix over a finite field.
struct Mat {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<code_t> a;

  Mat() = default;
  Mat(FieldPtr f, int r, int c);

  code_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  code_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(FieldPtr f, int n);
};

bool operator==(const Mat& x, const Mat& y);

Mat hconcat(const Mat& left, const Mat& right);
Mat mat_mul(const Mat& x, const Mat& y);
Mat select(const Mat& m, std::span<const int> rows0, std::span<const int> cols0);  // 0-based
Mat antitranspose(const Mat& m);  // flip across the antidiagonal

code_t det(const Mat& m);
int rank(const Mat& m);
Mat inverse(const Mat& m);

/// In-place determinant of the s x s row-major buffer; clobbers buf.
code_t det_inplace(const Field& f, code_t* buf, int s);

}  // namespace srkit

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srkit/linalg.hpp"

namespace srkit {

/// Lower triangular Toeplitz matrix of dimension gamma+1, stored as its
/// first column (a_0,...,a_gamma); entry (i,j) is a_{i-j} for i >= j.
struct Toeplitz {
  FieldPtr field;
  std::vector<code_t> col;

  Toeplitz() = default;
  Toeplitz(FieldPtr f, std::vector<code_t> c);

  int dim() const { return static_cast<int>(col.size()); }
  int gamma() const { return dim() - 1; }
  code_t entry(int i, int j) const { return i >= j ? col[i - j] : 0; }  // 1-based
  Mat to_mat() const;
};

bool operator==(const Toeplitz& x, const Toeplitz& y);

/// Row and column index sets, 1-based and strictly increasing.
struct IndexPair {
  std::vector<int> rows, cols;
};

/// Proper: equal sizes and cols[v] <= rows[v] componentwise. Submatrices
/// with a non-proper index pair are singular for every assignment of the
/// entries, so superregularity quantifies over proper pairs only.
bool is_proper(const IndexPair& idx);
void validate_index_pair(const IndexPair& idx, int dim);
Mat submatrix(const Toeplitz& t, const IndexPair& idx);

/// Visits every proper index pair of a dim x dim matrix in lexicographic
/// (s, I, J) order; s == 0 visits all sizes. Return false to stop early.
void for_each_proper(int dim, int s, const std::function<bool(const IndexPair&)>& fn);
std::vector<IndexPair> enumerate_proper(int gamma, int s = 0);
std::uint64_t count_proper(int dim);

struct SrCheck {
  bool superregular = false;
  std::optional<IndexPair> witness;  // first singular proper pair in enumeration order
};

/// Full check: every proper submatrix in enumeration order, short circuiting
/// on the first zero determinant.
SrCheck is_superregular(const Toeplitz& t);

/// Exhaustive mode: every proper pair together with its determinant.
std::vector<std::pair<IndexPair, code_t>> superregular_certificate(const Toeplitz& t);

/// True iff every proper submatrix of the leading (prefix.size())-square
/// Toeplitz matrix is nonsingular. Checks level by level, at each level
/// testing only the determinants that involve the newest entry.
bool is_superregular_incremental(const Field& f, std::span<const code_t> prefix);

constexpr int kMaxSearchLevel = 12;

/// Proper submatrices of the leading (level+1)-square matrix whose
/// determinant is linear in a_level: the corner row level+1 and column 1
/// are implicit, only interior indices are stored (sizes s-1 each).
struct LinearPair {
  int s = 1;
  std::vector<int> rows, cols;
};

/// Cached per level; index l <= kMaxSearchLevel. The list size is the
/// (level)-th Catalan number.
const std::vector<LinearPair>& linear_pairs(int level);

/// Marks every value v such that assigning a_level = v makes some
/// linear-pair determinant vanish, given prefix = (a_0,...,a_{level-1}).
/// forbidden is resized/reset to field.q(); returns the number of marked
/// nonzero values.
int forbidden_values(const Field& f, std::span<const code_t> prefix, int level,
                     std::vector<char>& forbidden);

}  // namespace srkit

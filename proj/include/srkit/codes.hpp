#pragma once

#include <optional>
#include <vector>

#include "srkit/linalg.hpp"
#include "srkit/toeplitz.hpp"

namespace srkit {

/// Polynomial over a field, constant term first, trailing zeros trimmed.
struct Poly {
  std::vector<code_t> c;
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
};

Poly poly_trim(Poly p);
Poly poly_add(const Field& f, const Poly& x, const Poly& y);
Poly poly_mul(const Field& f, const Poly& x, const Poly& y);
Poly poly_gcd(const Field& f, Poly x, Poly y);  // monic

/// Rate k/n convolutional code parameters with complexity delta.
struct CodeParams {
  int n = 0, k = 0, delta = 0;
  int L() const { return delta / k + delta / (n - k); }
};

void validate_params(const CodeParams& p);
int singleton_bound(const CodeParams& p);          // (n-k)(floor(delta/k)+1) + delta + 1
int coldist_bound(const CodeParams& p, int j);     // (n-k)(j+1) + 1

/// Matrix of polynomials in the delay operator.
struct PolyMatrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<Poly> e;

  PolyMatrix() = default;
  PolyMatrix(FieldPtr f, int r, int c);

  Poly& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

  int max_degree() const;                 // >= 0; 0 for the zero matrix
  std::vector<int> column_degrees() const;
};

/// Coefficient matrices P_0..P_m, m = max_degree().
std::vector<Mat> expand(const PolyMatrix& p);

enum class Orientation { generator, parity_transpose };

/// Truncated sliding matrix. generator: block (r,c) = P_{r-c} of P itself,
/// (j+1)n x (j+1)k. parity_transpose: block (r,c) = (P_{r-c})^T for an
/// n x (n-k) input, (j+1)(n-k) x (j+1)n.
Mat sliding(const PolyMatrix& p, int j, Orientation o);

/// j-th column distance by exhaustive enumeration of truncated inputs with
/// nonzero leading block. Throws budget_exceeded when the input space
/// exceeds enum_budget.
int column_distance(const PolyMatrix& g, int j, std::uint64_t enum_budget = std::uint64_t(1) << 24);

/// Smallest number of columns of m admitting a linear dependence whose
/// support meets designated_cols0 with a nonzero coefficient; nullopt when
/// no such dependence exists.
std::optional<int> min_dependence(const Mat& m, const std::vector<int>& designated_cols0);

/// Column distance from parity data: sliding parity-transpose of h.
int dual_column_distance(const PolyMatrix& h, int n, int k, int j);
/// Same, from an assembled [I | H-hat] matrix with identity width (j+1)(n-k).
int dual_column_distance_hat(const Mat& assembled, int n, int k, int j);

struct SpanWitness {
  int column0 = 0;                // 0-based offending column
  std::vector<int> spanning0;     // 0-based columns whose span contains it
};

struct MaxSpanResult {
  bool ok = false;
  std::optional<SpanWitness> witness;
};

/// True iff none of the first prefix_width columns of m lies in the span of
/// any other dependency_width - 1 columns.
MaxSpanResult max_span_property(const Mat& m, int prefix_width, int dependency_width);

/// Variant for [I | H-hat] shaped matrices: the tested columns are the first
/// k columns of the right-hand block (columns identity_width+1 ..
/// identity_width+k, 1-based).
MaxSpanResult max_span_property_hat(const Mat& m, int identity_width, int k, int dependency_width);

struct MdpExtraction {
  Mat t_prime;    // (j+1)(n-k) x (j+1)k block lower triangular Toeplitz
  Mat assembled;  // [I | t_prime]
  std::vector<int> rows1, cols1;  // 1-based indices extracted from t
};

/// Extracts maximum-span parity data for an (n,k) code from a superregular
/// matrix of dimension >= (j+1)(n-1): rows b(n-1)+k .. b(n-1)+n-1 and
/// columns b(n-1)+1 .. b(n-1)+k for b = 0..j. The assembled matrix is
/// re-verified on every call.
MdpExtraction extract_mdp(const Toeplitz& t, const CodeParams& p, int j, bool unchecked = false);

struct ComplexityReport {
  int delta_hat = 0;              // max degree over k x k minors
  bool basic = false;             // gcd of the minors is a nonzero constant
  std::vector<int> minor_degrees;
  int degree_sum = 0;             // sum of column degrees
};

ComplexityReport complexity_from_minors(const PolyMatrix& g);

/// Parity data for a rate (n-1)/n generator: the signed maximal minors,
/// divided by their monic gcd, returned as an n x 1 matrix (the transposed
/// parity row). Requires full generic rank.
PolyMatrix derived_parity_transpose(const PolyMatrix& g);

struct CertifyReport {
  CodeParams params;
  int L = 0;
  std::vector<int> profile;  // d_0 .. d_L
  std::vector<int> bounds;
  std::vector<std::string> profile_method;  // "generator" or "dual" per entry
  bool is_mdp = false;
  bool monotone = false;
  bool within_bounds = false;
  ComplexityReport complexity;
  bool delta_matches = false;  // declared delta == delta_hat
};

/// Computes the column distance profile of g up to L and reports whether
/// d_L meets the bound, together with the complexity measured from the
/// matrix itself. Distances whose input space exceeds enum_budget fall back
/// to the dual method through the derived parity when n - k = 1 and the
/// leading coefficient data is nondegenerate; otherwise the budget error
/// propagates.
CertifyReport mdp_certify(const PolyMatrix& g, const CodeParams& p,
                          std::uint64_t enum_budget = std::uint64_t(1) << 24);

}  // namespace srkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace srkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_binom(unsigned n, unsigned k);
BigInt catalan(unsigned n);

/// Number of length-n walks with steps +-1 that never go below zero:
/// binom(n, floor(n/2)), cross-checked against a direct DP count.
BigInt walk_count(unsigned n);
BigInt walk_count_dp(unsigned n);

struct ProductIdentity {
  BigRat lhs, rhs;
  bool equal = false;
};

/// prod_{1<=i<=j<=gamma} (2+i+j)/(i+j) versus binom(2(gamma+1), gamma+1)/(gamma+2),
/// evaluated exactly.
ProductIdentity product_identity_check(unsigned gamma);

/// Integer sequences 0 = x_0 < x_1 < ... < x_{i+1} = gamma.
using StepSeq = std::vector<int>;

/// Membership: s_j + s_{i-j+1} <= gamma for j = 0..ceil(i/2).
bool in_S(const StepSeq& s, int i, int gamma);
/// Membership: alternating partial sums sum_{l=0}^m (-1)^l (t_{l+1}-t_l) >= 0
/// for m = 0..i.
bool in_T(const StepSeq& t, int i, int gamma);

std::vector<StepSeq> enumerate_S(int i, int gamma);
std::vector<StepSeq> enumerate_T(int i, int gamma);

StepSeq bijection_f(const StepSeq& s, int i, int gamma);  // S -> T
StepSeq bijection_g(const StepSeq& t, int i, int gamma);  // T -> S

/// All nonnegative walks of length n as +-1 step sequences, and the
/// vertex (turning point) x-coordinates of one walk.
std::vector<std::vector<int>> nonneg_walks(unsigned n);
StepSeq walk_vertices(const std::vector<int>& walk);

struct BoundReport {
  int gamma = 0;
  BigInt catalan_prev;   // C_{gamma-1}
  BigInt walks;          // binom(gamma-1, floor((gamma-1)/2))
  BigInt L_count;        // determinants linear in the corner entry
  BigInt Lprime_count;   // the antidiagonally symmetric ones among them
  BigInt N;              // (L_count + Lprime_count) / 2
  BigInt bound;          // N + 1: any field with q > N admits a witness
};

/// Field-size bound for dimension gamma. Counts are enumerated directly for
/// small gamma and must match the closed forms.
BoundReport field_size_bound(int gamma);

BigInt count_L(int gamma);
BigInt count_Lprime(int gamma);

}  // namespace srkit

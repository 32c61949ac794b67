#pragma once

#include <span>
#include <vector>

#include "glqec/bigint.hpp"

namespace glqec {

/// Logical error rate of a distance-3 repetition code: 3p^2(1-p) + p^3.
double p3(double p);

/// 1 - (1 - p3)^{4n}: one encoded qubit per lattice qubit.
double p_logical_uqec(int n, double p);

/// Number of weight-k minimum recoveries summed over syndromes,
/// 2^{3k-2n+1} sum_{m=k}^{n} C(2n,2m) C(m,k) - [n == k].
BigInt coeff_C(int n, int k);

/// coeff_C(n, 0..n); Throws SizeLimitError past kMaxExactSites.
std::vector<BigInt> gen_func_coefficients(int n);

inline constexpr int kMaxExactSites = 400;

/// Five-term run-configuration count of weight-2 syndromes.
long long c_n2_piecewise(int n);

/// W_n(u) = lambda_-^{2n} + lambda_+^{2n} - u^n, lambda_pm = (1 pm sqrt(1+8u))/2.
double log_gen_func_W(int n, double u);
double gen_func_W(int n, double u);
BigRational gen_func_W_exact(int n, const BigRational& u);

/// 1 - (1-p)^{4n} W_n(p/(1-p)), accurate for small p and large n.
double p_logical_glqec(int n, double p);
/// Same quantity in exact rational arithmetic from the binary value of p.
/// Limited to n <= 10.
double p_logical_glqec_exact(int n, double p);

/// p_uqec / p_glqec. At p = 0 returns the small-p limit.
double advantage_ratio(int n, double p);
/// 12n / (C(4n,2) - C_{n,2}): 6/5 for n >= 3, 8/7 for n = 2, 0 for n = 1.
double advantage_ratio_limit(int n);

struct SingleRoundPoint {
  double p = 0;
  double p_uqec = 0;
  double p_glqec = 0;
  double ratio = 0;
};

struct SingleRoundCurve {
  int n = 0;
  std::vector<SingleRoundPoint> points;
};

SingleRoundCurve single_round_curve(int n, std::span<const double> ps);

}  // namespace glqec

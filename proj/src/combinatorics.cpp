#include "glqec/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "glqec/errors.hpp"

namespace glqec {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability out of [0,1]: " +
                                std::to_string(p));
  }
}

void check_sites(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1 physical sites");
}

BigRational rational_pow(BigRational base, unsigned e) {
  BigRational acc = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1U) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

}  // namespace

double p3(double p) {
  check_probability(p, "p3");
  return 3.0 * p * p * (1.0 - p) + p * p * p;
}

double p_logical_uqec(int n, double p) {
  check_sites(n);
  return -std::expm1(4.0 * n * std::log1p(-p3(p)));
}

BigInt coeff_C(int n, int k) {
  check_sites(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("coeff_C needs 0 <= k <= n, got k=" + std::to_string(k));
  }
  BigInt sum = 0;
  for (int m = k; m <= n; ++m) sum += binomial(2 * n, 2 * m) * binomial(m, k);
  // 2^{3k-2n+1} may be fractional; the product is always an integer.
  const int shift = 3 * k - 2 * n + 1;
  BigInt value = shift >= 0 ? BigInt(sum << shift) : BigInt(sum >> -shift);
  if (shift < 0 && (value << -shift) != sum) {
    throw std::logic_error("coeff_C: non-integer intermediate");
  }
  if (k == n) value -= 1;
  return value;
}

std::vector<BigInt> gen_func_coefficients(int n) {
  check_sites(n);
  if (n > kMaxExactSites) {
    throw SizeLimitError("exact generating-function coefficients are limited to n <= " +
                         std::to_string(kMaxExactSites));
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(coeff_C(n, k));
  return out;
}

long long c_n2_piecewise(int n) {
  check_sites(n);
  const long long m = n;
  const long long not_one = n == 1 ? 0 : 1;
  const long long two = n == 2 ? 1 : 0;
  return 2 * m * not_one + not_one * (2 * m + (1 - 2 * m) * two) + std::max(m * (2 * m - 3), 0LL) +
         std::max(2 * m * (2 * m - 4), 0LL) + std::max(m * (2 * m - 5), 0LL);
}

double log_gen_func_W(int n, double u) {
  check_sites(n);
  if (!(u >= 0.0)) throw std::invalid_argument("gen_func_W needs u >= 0");
  if (u == 0.0) return 0.0;
  const double root = std::sqrt(1.0 + 8.0 * u);
  const double root_minus_one = 8.0 * u / (root + 1.0);
  const double log_plus = std::log1p(root_minus_one / 2.0);
  // |lambda_-| = (root - 1)/2; its even power is positive
  const double log_minus = std::log(root_minus_one / 2.0);
  const double two_n = 2.0 * n;
  const double minus_term = std::exp(two_n * (log_minus - log_plus));
  const double u_term = std::exp(n * std::log(u) - two_n * log_plus);
  return two_n * log_plus + std::log1p(minus_term - u_term);
}

double gen_func_W(int n, double u) { return std::exp(log_gen_func_W(n, u)); }

BigRational gen_func_W_exact(int n, const BigRational& u) {
  const auto coeffs = gen_func_coefficients(n);
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + BigRational(*it);
  return acc;
}

double p_logical_glqec(int n, double p) {
  check_sites(n);
  check_probability(p, "p_logical_glqec");
  if (p == 1.0) throw std::invalid_argument("p_logical_glqec is undefined at p = 1");
  if (p == 0.0) return 0.0;
  const double u = p / (1.0 - p);
  return -std::expm1(4.0 * n * std::log1p(-p) + log_gen_func_W(n, u));
}

double p_logical_glqec_exact(int n, double p) {
  check_sites(n);
  check_probability(p, "p_logical_glqec_exact");
  if (p == 1.0) throw std::invalid_argument("p_logical_glqec is undefined at p = 1");
  if (n > 10) throw SizeLimitError("exact rational backend is limited to n <= 10");
  // Exact binary value of the double.
  int exponent = 0;
  const double mantissa = std::frexp(p, &exponent);
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  BigRational q(scaled);
  const int shift = exponent - 53;
  if (shift >= 0) {
    q *= BigRational(BigInt(1) << shift);
  } else {
    q /= BigRational(BigInt(1) << -shift);
  }
  const BigRational one_minus = 1 - q;
  const auto coeffs = gen_func_coefficients(n);
  BigRational survive = 0;
  for (int k = 0; k <= n; ++k) {
    survive += BigRational(coeffs[static_cast<std::size_t>(k)]) *
               rational_pow(q, static_cast<unsigned>(k)) *
               rational_pow(one_minus, static_cast<unsigned>(4 * n - k));
  }
  return static_cast<double>(BigRational(1 - survive));
}

double advantage_ratio_limit(int n) {
  check_sites(n);
  // n = 1 corrects no weight-1 error, so the GLQEC rate is O(p), not O(p^2).
  if (n == 1) return 0.0;
  const BigInt weight_two = binomial(4 * n, 2) - coeff_C(n, 2);
  return 12.0 * n / static_cast<double>(weight_two);
}

double advantage_ratio(int n, double p) {
  check_sites(n);
  check_probability(p, "advantage_ratio");
  if (p == 0.0) return advantage_ratio_limit(n);
  return p_logical_uqec(n, p) / p_logical_glqec(n, p);
}

SingleRoundCurve single_round_curve(int n, std::span<const double> ps) {
  SingleRoundCurve curve{n, {}};
  curve.points.reserve(ps.size());
  for (double p : ps) {
    curve.points.push_back({p, p_logical_uqec(n, p), p_logical_glqec(n, p), advantage_ratio(n, p)});
  }
  return curve;
}

}  // namespace glqec

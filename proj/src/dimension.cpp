#include "glqec/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glqec {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Eigen::MatrixXi adjacency_matrix(int d) {
  if (d < 2) {
    throw std::invalid_argument("gauge-field dimension must be >= 2, got " + std::to_string(d));
  }
  Eigen::MatrixXi a(3, 3);
  // rows: configuration at s+2, cols: configuration at s; (-,-), (0,-), (0,0)
  a << 1, 1, 0,
       1, 1, 1,
       1, 1, 1;
  for (int k = 2; k < d; ++k) {
    const Eigen::Index old = a.rows();
    Eigen::MatrixXi next = Eigen::MatrixXi::Zero(old + 2, old + 2);
    next.topLeftCorner(old, old) = a;
    next(old - 2, old) = 1;
    next(old - 1, old) = 1;
    next(old, old - 1) = 1;
    next(old + 1, old - 1) = 1;
    next.bottomRightCorner(2, 2).setOnes();
    a = std::move(next);
  }
  return a;
}

Eigen::MatrixXi modular_adjacency_matrix(int d) {
  if (d < 2) {
    throw std::invalid_argument("gauge-field dimension must be >= 2, got " + std::to_string(d));
  }
  auto mod = [d](int v) { return ((v % d) + d) % d; };
  std::vector<std::pair<int, int>> nodes;
  for (int in = 0; in < d; ++in) {
    for (int out = 0; out < d; ++out) {
      const int charge = mod(out - in);
      if (charge == 0 || charge == mod(-1)) nodes.emplace_back(in, out);
    }
  }
  const auto size = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      const int positron_charge = mod(nodes[r].first - nodes[c].second);
      if (positron_charge == 0 || positron_charge == mod(1)) a(r, c) = 1;
    }
  }
  return a;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix multiply(const BigMatrix& x, const BigMatrix& y) {
  const std::size_t size = x.size();
  BigMatrix out(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < size; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

}  // namespace

BigInt trace_of_power(const Eigen::MatrixXi& a, int power) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_of_power needs a square matrix");
  if (power < 0) throw std::invalid_argument("negative matrix power");
  const auto size = static_cast<std::size_t>(a.rows());
  BigMatrix base(size, std::vector<BigInt>(size));
  BigMatrix acc(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t i = 0; i < size; ++i) {
    acc[i][i] = 1;
    for (std::size_t j = 0; j < size; ++j) {
      base[i][j] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  for (int e = power; e > 0; e >>= 1) {
    if (e & 1) acc = multiply(acc, base);
    if (e > 1) base = multiply(base, base);
  }
  BigInt trace = 0;
  for (std::size_t i = 0; i < size; ++i) trace += acc[i][i];
  return trace;
}

BigInt physical_dimension(int n, int d, DimensionLaw law) {
  if (n < 1) throw std::invalid_argument("need n >= 1 physical sites");
  const Eigen::MatrixXi a =
      law == DimensionLaw::NonPeriodicInteger ? adjacency_matrix(d) : modular_adjacency_matrix(d);
  return trace_of_power(a, n);
}

BigInt lucas(int k) {
  if (k < 0) throw std::invalid_argument("Lucas index must be non-negative");
  BigInt prev = 2;
  BigInt cur = 1;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double log_dimension_gap_ratio(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1 physical sites");
  // L(2n) = phi2^n + phi2^{-n} with phi2 = (3 + sqrt 5)/2
  const double log_phi2 = std::log((3.0 + std::sqrt(5.0)) / 2.0);
  const double log_lucas = n * log_phi2 + std::log1p(std::exp(-2.0 * n * log_phi2));
  return 2.0 * n * std::log(2.0) - log_lucas;
}

double dimension_gap_ratio(int n) { return std::exp(log_dimension_gap_ratio(n)); }

double dimension_gap_growth_per_site(int n) { return std::exp(log_dimension_gap_ratio(n) / n); }

namespace {

// floor(value^{1/k}) for value >= 0, k >= 2
BigInt integer_root(const BigInt& value, unsigned k) {
  if (value < 2) return value;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= value) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

bool is_perfect_power(const BigInt& value) {
  if (value < 0) throw std::invalid_argument("is_perfect_power expects a non-negative integer");
  if (value < 2) return true;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  for (unsigned k = 2; k <= bits; ++k) {
    const BigInt root = integer_root(value, k);
    if (root >= 2 && boost::multiprecision::pow(root, k) == value) return true;
  }
  return false;
}

}  // namespace glqec

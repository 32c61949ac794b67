#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace glqec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n choose k, exact. Zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace glqec

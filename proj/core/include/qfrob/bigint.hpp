#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qfrob {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt ipow(std::int64_t base, unsigned exponent);

/// Floor and ceiling of a / b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace qfrob

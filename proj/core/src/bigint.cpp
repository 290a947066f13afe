#include "qfrob/bigint.hpp"

namespace qfrob {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(std::int64_t base, unsigned exponent) {
  BigInt r = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1u) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace qfrob

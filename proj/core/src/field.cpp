#include "qfrob/field.hpp"

#include "qfrob/error.hpp"

#include <string>

namespace qfrob {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  if (p == 2) fail(ErrorKind::Unsupported, "characteristic 2 is not supported (need p >= 3)");
  if (p >= (1u << 16)) fail(ErrorKind::InvalidArgument, "modulus must be below 65536");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1 % p_;
  Coeff b = a % p_;
  while (e != 0) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) fail(ErrorKind::InvalidArgument, "division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace qfrob

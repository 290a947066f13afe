#pragma once

#include <cstdint>

namespace qfrob {

using Coeff = std::uint32_t;

bool is_prime(std::uint32_t n) noexcept;

/// The prime field F_p. Elements are plain residues in [0, p).
///
/// Construction rejects non-primes (InvalidArgument) and p = 2 (Unsupported);
/// moduli are capped below 2^16 so that products fit in 32 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    const auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept { return (a * b) % p_; }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  Coeff inv(Coeff a) const;

  /// Representative in (-p/2, p/2], used for printing signs.
  std::int64_t centered(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace qfrob

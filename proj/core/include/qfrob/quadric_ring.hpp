#pragma once

#include "qfrob/field.hpp"
#include "qfrob/poly.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace qfrob {

inline constexpr int kMaxQuadricIndex = static_cast<int>(kMaxVars / 2) - 1;

/// Torus weight: x_{2i+1} has weight +e_i and x_{2i+2} has weight -e_i.
/// Only the first m+1 slots are used. The quadric form has weight zero.
using Weight = std::array<std::int32_t, kMaxQuadricIndex + 1>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

Weight weight_add(const Weight& a, const Weight& b) noexcept;
Weight weight_sub(const Weight& a, const Weight& b) noexcept;
Weight weight_scale(const Weight& a, std::int32_t k) noexcept;

/// The ring F_p[x_1..x_{2m+2}] / (q_m) with q_m = x1 x2 + x3 x4 + ... + x_{2m+1} x_{2m+2}.
///
/// Normal form: the degrevlex leading monomial x1 x2 of q_m is eliminated, so
/// normal monomials are exactly those not divisible by x1 x2.
class QuadricRing {
 public:
  /// Accepts m >= 0; bundle-level computations additionally call require_bundle_range().
  QuadricRing(PrimeField field, int m);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  int m() const noexcept { return m_; }
  int n_vars() const noexcept { return 2 * m_ + 2; }

  /// Throws Unsupported unless m >= 2 (p >= 3 is already enforced by PrimeField).
  void require_bundle_range() const;

  MultiPoly zero() const { return MultiPoly(field_, n_vars()); }
  MultiPoly one() const { return MultiPoly::constant(field_, n_vars(), 1); }
  /// 1-based variable index.
  MultiPoly var(int index) const { return MultiPoly::variable(field_, n_vars(), index); }
  MultiPoly quadric() const;

  Weight weight(const Exponents& e) const noexcept;
  bool is_normal(const Exponents& e) const noexcept { return e[0] == 0 || e[1] == 0; }
  MultiPoly normal_form(const MultiPoly& f) const;

  friend bool operator==(const QuadricRing&, const QuadricRing&) = default;

 private:
  PrimeField field_;
  int m_;
};

/// q_m over F_p in 2m+2 variables.
MultiPoly quadric_form(const PrimeField& field, int m);

}  // namespace qfrob

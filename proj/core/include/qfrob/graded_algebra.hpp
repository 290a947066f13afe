#pragma once

#include "qfrob/poly.hpp"
#include "qfrob/quadric_ring.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qfrob {

/// Monomial basis of one graded piece, bucketed by torus weight. Buckets are
/// sorted by weight so iteration order is deterministic.
using WeightBuckets = std::map<Weight, std::vector<Exponents>>;

using TermList = std::vector<std::pair<Exponents, Coeff>>;

/// A quotient of the polynomial ring in 2m+2 variables by a weight-homogeneous
/// ideal with a monomial basis. Implementations cache basis tables, so one
/// instance must not be used from several threads at once.
class GradedAlgebra {
 public:
  explicit GradedAlgebra(QuadricRing ring) : ring_(std::move(ring)) {}
  virtual ~GradedAlgebra() = default;

  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  const QuadricRing& ring() const noexcept { return ring_; }

  const WeightBuckets& basis(int degree);
  const std::vector<Exponents>& basis(int degree, const Weight& w);

  /// Appends c * basis_monomial * term, rewritten in the algebra's basis.
  virtual void multiply(const Exponents& basis_monomial, const Exponents& term, Coeff c,
                        TermList& out) = 0;

 protected:
  virtual bool in_basis(const Exponents& e) const noexcept = 0;
  /// Upper bound on any single exponent of a basis monomial.
  virtual int max_exponent() const noexcept = 0;

 private:
  QuadricRing ring_;
  std::unordered_map<int, WeightBuckets> cache_;
};

/// F_p[x] / (q_m) in normal form.
class QuadricAlgebra final : public GradedAlgebra {
 public:
  explicit QuadricAlgebra(QuadricRing ring) : GradedAlgebra(std::move(ring)) {}
  void multiply(const Exponents& basis_monomial, const Exponents& term, Coeff c,
                TermList& out) override;

 protected:
  bool in_basis(const Exponents& e) const noexcept override { return ring().is_normal(e); }
  int max_exponent() const noexcept override;

 private:
  const TermList& tail_power(int k);  // (-(x3 x4 + ... + x_{2m+1} x_{2m+2}))^k
  std::unordered_map<int, TermList> tail_powers_;
};

/// F_p[x] / (x_1^Q, ..., x_n^Q): the base change along the Frobenius power ideal.
class TruncatedAlgebra final : public GradedAlgebra {
 public:
  TruncatedAlgebra(QuadricRing ring, std::uint32_t frobenius_power)
      : GradedAlgebra(std::move(ring)), power_(frobenius_power) {}
  void multiply(const Exponents& basis_monomial, const Exponents& term, Coeff c,
                TermList& out) override;

 protected:
  bool in_basis(const Exponents& e) const noexcept override;
  int max_exponent() const noexcept override;

 private:
  std::uint32_t power_;
};

}  // namespace qfrob

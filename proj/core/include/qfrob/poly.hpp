#pragma once

#include "qfrob/field.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qfrob {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; entries beyond the owning polynomial's variable count are zero.
using Exponents = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponents& e) noexcept;
Exponents exps_mul(const Exponents& a, const Exponents& b) noexcept;

/// Degree-reverse-lexicographic order with x1 > x2 > ... ; returns true if a > b.
struct DegRevLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

/// Sparse multivariate polynomial over F_p, terms kept in degrevlex-descending
/// order with no stored zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Coeff, DegRevLexGreater>;

  MultiPoly(PrimeField field, int n_vars);

  static MultiPoly constant(PrimeField field, int n_vars, std::int64_t c);
  /// The variable x_index with 1-based index, as printed ("x1", "x2", ...).
  static MultiPoly variable(PrimeField field, int n_vars, int index);
  static MultiPoly monomial(PrimeField field, int n_vars, const Exponents& e, Coeff c = 1);

  const PrimeField& field() const noexcept { return field_; }
  int n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const noexcept;
  /// True for zero and for polynomials whose terms all share one total degree.
  bool is_homogeneous() const noexcept;
  Coeff coefficient(const Exponents& e) const noexcept;

  void add_term(const Exponents& e, Coeff c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly scaled(Coeff c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Permutes variables: x_i -> x_{perm[i]} (0-based indices).
  MultiPoly permuted(const std::vector<int>& perm) const;
  /// Substitutes x_i -> x_i^power in every term.
  MultiPoly frobenius(std::uint32_t power) const;

  /// "x1*x3^2 - 2*x4", "0" for zero; signs use centered representatives.
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  PrimeField field_;
  int n_vars_;
  TermMap terms_;
};

}  // namespace qfrob

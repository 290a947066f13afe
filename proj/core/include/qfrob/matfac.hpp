#pragma once

#include "qfrob/linalg.hpp"
#include "qfrob/poly.hpp"
#include "qfrob/poly_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qfrob {

/// A graded matrix factorization (A, B) of a homogeneous form f.
///
/// A maps the free module with generator degrees `col_degrees` to the one with
/// generator degrees `row_degrees`, so coker(A) is the presented module and its
/// generators sit in degrees `row_degrees`. B goes back from the row module
/// twisted by deg f. The constructor checks shapes and grading; the product
/// identity is checked by verify_factorization.
class MatrixFactorization {
 public:
  MatrixFactorization(int m, MultiPoly f, PolyMatrix a, PolyMatrix b, std::vector<int> row_degrees,
                      std::vector<int> col_degrees);

  int m() const noexcept { return m_; }
  const MultiPoly& form() const noexcept { return f_; }
  const PolyMatrix& a() const noexcept { return a_; }
  const PolyMatrix& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return a_.rows(); }
  const std::vector<int>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<int>& col_degrees() const noexcept { return col_degrees_; }
  const PrimeField& field() const noexcept { return f_.field(); }
  int form_degree() const noexcept { return f_.degree(); }

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

 private:
  int m_;
  MultiPoly f_;
  PolyMatrix a_;
  PolyMatrix b_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
};

/// The swap x_{2i+1} <-> x_{2i+2}, 0 <= i <= m. Its determinant is (-1)^(m+1),
/// so it exchanges the two spinor modules only for even m; reflection() swaps
/// x1 <-> x2 alone and exchanges them for every m.
class Involution {
 public:
  explicit Involution(int m);
  static Involution reflection(int m);
  int m() const noexcept { return m_; }
  /// 0-based image of each variable.
  const std::vector<int>& permutation() const noexcept { return perm_; }
  MultiPoly apply(const MultiPoly& f) const;

 private:
  int m_;
  std::vector<int> perm_;
};

struct PhiPsi {
  MatrixFactorization phi;  ///< (phi_m, psi_m): presents the minus spinor module
  MatrixFactorization psi;  ///< (psi_m, phi_m): presents the plus spinor module
};

/// 2^m x 2^m linear factorizations of q_m built by the block recursion
///   phi_{k+1} = [[phi_k, x_{2k+3} I], [x_{2k+4} I, -psi_k]]
///   psi_{k+1} = [[psi_k, x_{2k+3} I], [x_{2k+4} I, -phi_k]]
/// starting from phi_0 = (x1), psi_0 = (x2). Generators in degree 1, relations in degree 2.
PhiPsi build_phi_psi(const PrimeField& field, int m);

bool verify_factorization(const MatrixFactorization& mf);

MatrixFactorization apply_involution(const MatrixFactorization& mf, const Involution& inv);

/// Presents the first cosyzygy of coker(A): the pair becomes (B, A); generator
/// degrees become the old relation degrees minus deg f. Applying it twice
/// twists by deg f.
MatrixFactorization cosyzygy(const MatrixFactorization& mf);

/// Presents Hom(coker A, R): transposes both matrices; generator degrees become
/// deg f minus the old relation degrees (and vice versa).
MatrixFactorization dual(const MatrixFactorization& mf);

MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y);

/// coker(A)(t): every degree label drops by t.
MatrixFactorization twist(const MatrixFactorization& mf, int t);

/// Constant base change (P, Q) with P * X.A = Y.A * Q, both invertible.
struct Witness {
  ModMatrix p;
  ModMatrix q;
};

inline constexpr std::uint64_t kDefaultWitnessBound = 1'000'000;

/// Solves the linear condition exactly, then enumerates coefficient tuples on
/// the nullspace basis in lexicographic order; the first invertible pair wins.
/// Returns nullopt when the search space is fully exhausted without an
/// invertible pair; throws SearchExhausted when the bound cuts the search short.
std::optional<Witness> find_base_change_witness(const MatrixFactorization& x,
                                                const MatrixFactorization& y,
                                                std::uint64_t bound = kDefaultWitnessBound);

}  // namespace qfrob

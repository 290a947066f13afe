#pragma once

#include "qfrob/bigint.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace qfrob {

/// Integer system matrix * x = rhs with arbitrary-precision entries.
class IntLinearSystem {
 public:
  IntLinearSystem(std::size_t rows, std::size_t cols);
  IntLinearSystem(std::vector<std::vector<BigInt>> matrix, std::vector<BigInt> rhs);

  std::size_t rows() const noexcept { return matrix_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return matrix_[r][c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return matrix_[r][c]; }
  BigInt& rhs(std::size_t r) { return rhs_[r]; }
  const BigInt& rhs(std::size_t r) const { return rhs_[r]; }

 private:
  std::size_t cols_;
  std::vector<std::vector<BigInt>> matrix_;
  std::vector<BigInt> rhs_;
};

struct UniqueSolution {
  std::vector<BigInt> values;
};
/// Inconsistent system, or a unique rational solution that is not integral.
struct NoSolution {
  bool rational_solution_exists = false;
};
struct Underdetermined {
  std::size_t rank = 0;
};

using SolveResult = std::variant<UniqueSolution, NoSolution, Underdetermined>;

/// Fraction-free (Bareiss) elimination followed by exact back substitution.
/// Rank deficiency wins over inconsistency: a rank-deficient system always
/// reports Underdetermined.
SolveResult solve_exact(const IntLinearSystem& system);

}  // namespace qfrob

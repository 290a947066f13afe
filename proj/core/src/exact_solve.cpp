#include "qfrob/exact_solve.hpp"

#include "qfrob/error.hpp"

#include <utility>

namespace qfrob {

IntLinearSystem::IntLinearSystem(std::size_t rows, std::size_t cols)
    : cols_(cols), matrix_(rows, std::vector<BigInt>(cols)), rhs_(rows) {}

IntLinearSystem::IntLinearSystem(std::vector<std::vector<BigInt>> matrix, std::vector<BigInt> rhs)
    : cols_(matrix.empty() ? 0 : matrix.front().size()),
      matrix_(std::move(matrix)),
      rhs_(std::move(rhs)) {
  if (matrix_.size() != rhs_.size()) fail(ErrorKind::InvalidArgument, "row count differs from rhs length");
  for (const auto& row : matrix_)
    if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged coefficient matrix");
}

SolveResult solve_exact(const IntLinearSystem& system) {
  const std::size_t n = system.rows();
  const std::size_t c = system.cols();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(c + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) a[i][j] = system.at(i, j);
    a[i][c] = system.rhs(i);
  }

  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < c && r < n; ++col) {
    std::size_t sel = r;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j <= c; ++j) {
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    pivot_cols.push_back(col);
    ++r;
  }

  if (pivot_cols.size() < c) return Underdetermined{pivot_cols.size()};
  for (std::size_t i = r; i < n; ++i)
    if (a[i][c] != 0) return NoSolution{false};

  std::vector<BigRational> x(c);
  for (std::size_t k = c; k-- > 0;) {
    BigRational acc = BigRational(a[k][c]);
    for (std::size_t j = k + 1; j < c; ++j) acc -= BigRational(a[k][j]) * x[j];
    x[k] = acc / BigRational(a[k][k]);
  }
  UniqueSolution out;
  out.values.reserve(c);
  for (const auto& v : x) {
    if (boost::multiprecision::denominator(v) != 1) return NoSolution{true};
    out.values.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

}  // namespace qfrob

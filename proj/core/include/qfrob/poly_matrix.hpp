#pragma once

#include "qfrob/poly.hpp"

#include <cstddef>
#include <vector>

namespace qfrob {

/// Dense matrix of polynomials sharing one field and variable count.
class PolyMatrix {
 public:
  PolyMatrix(PrimeField field, int n_vars, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(PrimeField field, int n_vars, std::size_t n);
  static PolyMatrix scalar(const MultiPoly& f, std::size_t n);
  /// [[tl, tr], [bl, br]]; block shapes must agree.
  static PolyMatrix blocks(const PolyMatrix& tl, const PolyMatrix& tr, const PolyMatrix& bl,
                           const PolyMatrix& br);
  static PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

  const PrimeField& field() const noexcept { return field_; }
  int n_vars() const noexcept { return n_vars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix transposed() const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  template <class Fn>
  PolyMatrix map(Fn&& fn) const {
    PolyMatrix r(field_, n_vars_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = fn(entries_[i]);
    return r;
  }

 private:
  PrimeField field_;
  int n_vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

}  // namespace qfrob

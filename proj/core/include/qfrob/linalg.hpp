#pragma once

#include "qfrob/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qfrob {

using ModVector = std::vector<Coeff>;

/// Dense row-major matrix over F_p.
class ModMatrix {
 public:
  ModMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static ModMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coeff& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Coeff* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const Coeff* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }

  /// In-place reduced row echelon form; returns pivot columns in order.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  bool invertible() const;
  /// Basis of {x : M x = 0}, one vector per free column, in increasing free-column order.
  std::vector<ModVector> nullspace() const;

  ModMatrix operator*(const ModMatrix& o) const;
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

/// Incrementally built echelon basis of a subspace of F_p^dim. Inserted rows
/// are reduced against earlier rows and normalised to pivot 1, so reducing a
/// vector by the rows in insertion order yields a canonical representative
/// that vanishes on every pivot column.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_pivot(std::size_t col) const noexcept { return pivot_mask_[col]; }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(ModVector v);
  void reduce(ModVector& v) const;
  bool contains(ModVector v) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<ModVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> pivot_mask_;
};

}  // namespace qfrob

#include "qfrob/linalg.hpp"

#include "qfrob/error.hpp"

#include <utility>

namespace qfrob {
namespace {

// row_dst -= f * row_src over columns [from, n)
void axpy(const PrimeField& F, Coeff* dst, const Coeff* src, Coeff f, std::size_t from,
          std::size_t n) {
  if (f == 0) return;
  const Coeff p = F.p();
  const Coeff g = p - f;
  for (std::size_t c = from; c < n; ++c) {
    if (src[c] != 0) dst[c] = (dst[c] + g * src[c]) % p;
  }
}

}  // namespace

ModMatrix::ModMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(PrimeField field, std::size_t n) {
  ModMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::size_t> ModMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(r, k));
    const Coeff inv = field_.inv(at(r, c));
    Coeff* pr = row(r);
    for (std::size_t k = c; k < cols_; ++k) pr[k] = field_.mul(pr[k], inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      axpy(field_, row(i), pr, at(i, c), c, cols_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  // forward elimination only
  ModMatrix w = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && w.at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t k = c; k < cols_; ++k) std::swap(w.at(sel, k), w.at(r, k));
    const Coeff inv = field_.inv(w.at(r, c));
    Coeff* pr = w.row(r);
    for (std::size_t k = c; k < cols_; ++k) pr[k] = field_.mul(pr[k], inv);
    for (std::size_t i = r + 1; i < rows_; ++i) axpy(field_, w.row(i), pr, w.at(i, c), c, cols_);
    ++r;
  }
  return r;
}

bool ModMatrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::vector<ModVector> ModMatrix::nullspace() const {
  ModMatrix w = *this;
  const auto pivots = w.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(w.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  ModMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coeff a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
    }
  return r;
}

EchelonBasis::EchelonBasis(PrimeField field, std::size_t dim)
    : field_(field), dim_(dim), pivot_mask_(dim, false) {}

void EchelonBasis::reduce(ModVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Coeff f = v[pivots_[i]];
    if (f != 0) axpy(field_, v.data(), rows_[i].data(), f, 0, dim_);
  }
}

bool EchelonBasis::insert(ModVector v) {
  if (v.size() != dim_) fail(ErrorKind::InvalidArgument, "vector dimension mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const Coeff inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  pivot_mask_[piv] = true;
  return true;
}

bool EchelonBasis::contains(ModVector v) const {
  reduce(v);
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace qfrob

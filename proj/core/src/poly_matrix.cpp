#include "qfrob/poly_matrix.hpp"

#include "qfrob/error.hpp"

namespace qfrob {

PolyMatrix::PolyMatrix(PrimeField field, int n_vars, std::size_t rows, std::size_t cols)
    : field_(field),
      n_vars_(n_vars),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, MultiPoly(field, n_vars)) {}

PolyMatrix PolyMatrix::identity(PrimeField field, int n_vars, std::size_t n) {
  PolyMatrix r(field, n_vars, n, n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = MultiPoly::constant(field, n_vars, 1);
  return r;
}

PolyMatrix PolyMatrix::scalar(const MultiPoly& f, std::size_t n) {
  PolyMatrix r(f.field(), f.n_vars(), n, n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = f;
  return r;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& tl, const PolyMatrix& tr, const PolyMatrix& bl,
                              const PolyMatrix& br) {
  if (tl.rows_ != tr.rows_ || bl.rows_ != br.rows_ || tl.cols_ != bl.cols_ || tr.cols_ != br.cols_)
    fail(ErrorKind::InvalidArgument, "block shapes do not agree");
  PolyMatrix r(tl.field_, tl.n_vars_, tl.rows_ + bl.rows_, tl.cols_ + tr.cols_);
  auto put = [&r](const PolyMatrix& b, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(r0 + i, c0 + j) = b.at(i, j);
  };
  put(tl, 0, 0);
  put(tr, 0, tl.cols_);
  put(bl, tl.rows_, 0);
  put(br, tl.rows_, tl.cols_);
  return r;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  return blocks(a, PolyMatrix(a.field_, a.n_vars_, a.rows_, b.cols_),
                PolyMatrix(a.field_, a.n_vars_, b.rows_, a.cols_), b);
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(field_, n_vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  return map([](const MultiPoly& e) { return -e; });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  PolyMatrix r(a.field_, a.n_vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

}  // namespace qfrob

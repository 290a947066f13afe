#include "qfrob/matfac.hpp"

#include "qfrob/error.hpp"
#include "qfrob/quadric_ring.hpp"

#include <map>
#include <tuple>
#include <string>

namespace qfrob {
namespace {

void check_entry(const MultiPoly& e, int expected, const char* which, std::size_t i, std::size_t j) {
  if (e.is_zero()) return;
  if (!e.is_homogeneous() || e.degree() != expected)
    fail(ErrorKind::InvalidArgument, std::string(which) + "(" + std::to_string(i) + "," + std::to_string(j) +
                                         ") is not homogeneous of degree " + std::to_string(expected));
}

}  // namespace

MatrixFactorization::MatrixFactorization(int m, MultiPoly f, PolyMatrix a, PolyMatrix b,
                                         std::vector<int> row_degrees, std::vector<int> col_degrees)
    : m_(m),
      f_(std::move(f)),
      a_(std::move(a)),
      b_(std::move(b)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)) {
  const std::size_t r = a_.rows();
  if (a_.cols() != r || b_.rows() != r || b_.cols() != r)
    fail(ErrorKind::InvalidArgument, "factorization matrices must be square of equal size");
  if (row_degrees_.size() != r || col_degrees_.size() != r)
    fail(ErrorKind::InvalidArgument, "degree labels do not match the matrix size");
  if (f_.is_zero() || !f_.is_homogeneous()) fail(ErrorKind::InvalidArgument, "factored form must be homogeneous");
  if (a_.n_vars() != f_.n_vars() || b_.n_vars() != f_.n_vars() || !(a_.field() == f_.field()) ||
      !(b_.field() == f_.field()))
    fail(ErrorKind::InvalidArgument, "matrices and form live in different rings");
  const int df = f_.degree();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      check_entry(a_.at(i, j), col_degrees_[j] - row_degrees_[i], "A", i, j);
      check_entry(b_.at(j, i), row_degrees_[i] + df - col_degrees_[j], "B", j, i);
    }
}

Involution::Involution(int m) : m_(m) {
  if (m < 0 || m > kMaxQuadricIndex) fail(ErrorKind::InvalidArgument, "quadric index out of range");
  perm_.resize(static_cast<std::size_t>(2 * m + 2));
  for (int i = 0; i <= m; ++i) {
    perm_[2 * i] = 2 * i + 1;
    perm_[2 * i + 1] = 2 * i;
  }
}

Involution Involution::reflection(int m) {
  Involution out(m);
  for (int i = 1; i <= m; ++i) {
    out.perm_[2 * i] = 2 * i;
    out.perm_[2 * i + 1] = 2 * i + 1;
  }
  return out;
}

MultiPoly Involution::apply(const MultiPoly& f) const {
  if (f.n_vars() != 2 * m_ + 2) fail(ErrorKind::InvalidArgument, "involution applied to the wrong ring");
  return f.permuted(perm_);
}

PhiPsi build_phi_psi(const PrimeField& field, int m) {
  if (m < 0 || m > kMaxQuadricIndex) fail(ErrorKind::InvalidArgument, "quadric index out of range");
  const QuadricRing ring(field, m);
  const int n = ring.n_vars();
  PolyMatrix phi(field, n, 1, 1);
  PolyMatrix psi(field, n, 1, 1);
  phi.at(0, 0) = ring.var(1);
  psi.at(0, 0) = ring.var(2);
  for (int k = 0; k < m; ++k) {
    const std::size_t r = phi.rows();
    const PolyMatrix u = PolyMatrix::scalar(ring.var(2 * k + 3), r);
    const PolyMatrix v = PolyMatrix::scalar(ring.var(2 * k + 4), r);
    PolyMatrix next_phi = PolyMatrix::blocks(phi, u, v, -psi);
    PolyMatrix next_psi = PolyMatrix::blocks(psi, u, v, -phi);
    phi = std::move(next_phi);
    psi = std::move(next_psi);
  }
  const std::size_t r = phi.rows();
  const std::vector<int> rows(r, 1);
  const std::vector<int> cols(r, 2);
  const MultiPoly q = ring.quadric();
  return PhiPsi{MatrixFactorization(m, q, phi, psi, rows, cols), MatrixFactorization(m, q, psi, phi, rows, cols)};
}

bool verify_factorization(const MatrixFactorization& mf) {
  const PolyMatrix fi = PolyMatrix::scalar(mf.form(), mf.size());
  return mf.a() * mf.b() == fi && mf.b() * mf.a() == fi;
}

MatrixFactorization apply_involution(const MatrixFactorization& mf, const Involution& inv) {
  auto sub = [&inv](const MultiPoly& e) { return inv.apply(e); };
  return MatrixFactorization(mf.m(), inv.apply(mf.form()), mf.a().map(sub), mf.b().map(sub), mf.row_degrees(),
                             mf.col_degrees());
}

MatrixFactorization cosyzygy(const MatrixFactorization& mf) {
  const int df = mf.form_degree();
  std::vector<int> rows;
  for (int c : mf.col_degrees()) rows.push_back(c - df);
  return MatrixFactorization(mf.m(), mf.form(), mf.b(), mf.a(), rows, mf.row_degrees());
}

MatrixFactorization dual(const MatrixFactorization& mf) {
  const int df = mf.form_degree();
  std::vector<int> rows;
  std::vector<int> cols;
  for (int c : mf.col_degrees()) rows.push_back(df - c);
  for (int r : mf.row_degrees()) cols.push_back(df - r);
  return MatrixFactorization(mf.m(), mf.form(), mf.a().transposed(), mf.b().transposed(), rows, cols);
}

MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (!(x.form() == y.form())) fail(ErrorKind::InvalidArgument, "direct sum needs a common factored form");
  std::vector<int> rows = x.row_degrees();
  std::vector<int> cols = x.col_degrees();
  rows.insert(rows.end(), y.row_degrees().begin(), y.row_degrees().end());
  cols.insert(cols.end(), y.col_degrees().begin(), y.col_degrees().end());
  return MatrixFactorization(x.m(), x.form(), PolyMatrix::block_diagonal(x.a(), y.a()),
                             PolyMatrix::block_diagonal(x.b(), y.b()), rows, cols);
}

MatrixFactorization twist(const MatrixFactorization& mf, int t) {
  std::vector<int> rows;
  std::vector<int> cols;
  for (int r : mf.row_degrees()) rows.push_back(r - t);
  for (int c : mf.col_degrees()) cols.push_back(c - t);
  return MatrixFactorization(mf.m(), mf.form(), mf.a(), mf.b(), rows, cols);
}

std::optional<Witness> find_base_change_witness(const MatrixFactorization& x, const MatrixFactorization& y,
                                                std::uint64_t bound) {
  if (x.size() != y.size() || !(x.form() == y.form()))
    fail(ErrorKind::InvalidArgument, "witness search needs factorizations of one form and one size");
  const PrimeField& field = x.field();
  const std::size_t r = x.size();
  const std::size_t n_unknowns = 2 * r * r;
  auto p_index = [r](std::size_t i, std::size_t k) { return i * r + k; };
  auto q_index = [r](std::size_t k, std::size_t j) { return r * r + k * r + j; };

  // Rows of the constraint matrix: one per (i, j, monomial) of P X.A - Y.A Q, plus
  // one per unknown forced to zero by the grading.
  std::vector<std::map<std::size_t, Coeff>> rows;
  std::map<std::tuple<std::size_t, std::size_t, Exponents>, std::size_t> row_of;
  auto add = [&](std::size_t i, std::size_t j, const Exponents& e, std::size_t unknown, Coeff c) {
    const auto key = std::make_tuple(i, j, e);
    auto it = row_of.find(key);
    if (it == row_of.end()) {
      it = row_of.emplace(key, rows.size()).first;
      rows.emplace_back();
    }
    auto& row = rows[it->second];
    row[unknown] = field.add(row[unknown], c);
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        for (const auto& [e, c] : x.a().at(k, j).terms()) add(i, j, e, p_index(i, k), c);
        for (const auto& [e, c] : y.a().at(i, k).terms()) add(i, j, e, q_index(k, j), field.neg(c));
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (y.row_degrees()[i] != x.row_degrees()[k]) rows.push_back({{p_index(i, k), 1}});
      if (y.col_degrees()[i] != x.col_degrees()[k]) rows.push_back({{q_index(i, k), 1}});
    }

  ModMatrix system(field, rows.size(), n_unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [col, c] : rows[i]) system.at(i, col) = c;
  const std::vector<ModVector> basis = system.nullspace();
  if (basis.empty()) return std::nullopt;

  const std::size_t k = basis.size();
  std::vector<Coeff> tuple(k, 0);
  std::uint64_t tried = 0;
  // Advances the tuple in lexicographic order; false once every tuple was visited.
  auto advance = [&]() {
    for (std::size_t pos = k; pos-- > 0;) {
      if (++tuple[pos] < field.p()) return true;
      tuple[pos] = 0;
    }
    return false;
  };
  while (advance()) {
    if (++tried > bound)
      fail(ErrorKind::SearchExhausted, "witness enumeration bound " + std::to_string(bound) + " reached");
    ModVector v(n_unknowns, 0);
    for (std::size_t b = 0; b < k; ++b) {
      if (tuple[b] == 0) continue;
      for (std::size_t u = 0; u < n_unknowns; ++u)
        if (basis[b][u] != 0) v[u] = field.add(v[u], field.mul(tuple[b], basis[b][u]));
    }
    Witness w{ModMatrix(field, r, r), ModMatrix(field, r, r)};
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        w.p.at(i, j) = v[p_index(i, j)];
        w.q.at(i, j) = v[q_index(i, j)];
      }
    if (w.p.invertible() && w.q.invertible()) return w;
  }
  return std::nullopt;
}

}  // namespace qfrob

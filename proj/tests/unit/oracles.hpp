#pragma once

// Independent reference implementations used only by the tests. They work in
// the polynomial ring S = F_p[x] with the quadric added as an explicit
// relation, use dense vectors over full monomial lists and never touch the
// library's normal forms, weight buckets or left approximations.

#include "qfrob/bigint.hpp"
#include "qfrob/field.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/poly.hpp"
#include "qfrob/poly_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using qfrob::Coeff;
using qfrob::Exponents;
using qfrob::MultiPoly;
using qfrob::PolyMatrix;
using qfrob::PrimeField;

/// All exponent vectors of total degree d in n variables.
inline std::vector<Exponents> monomials(int n, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (n == 0) return d == 0 ? std::vector<Exponents>{e} : out;
  rec(rec, 0, d);
  return out;
}

/// Plain Gaussian elimination rank over F_p on a copy, row by row.
inline std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = [&] {
      std::uint64_t a = rows[rank][c] % p, r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
      }
      return r;
    }();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::uint64_t f = rows[i][c] % p * inv % p;
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = static_cast<Coeff>((rows[i][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan over the rationals. Returns the unique solution, or nullopt
/// when the system is inconsistent or has a free variable.
inline std::optional<std::vector<qfrob::BigRational>> rational_solve(std::vector<std::vector<qfrob::BigInt>> a,
                                                                    std::vector<qfrob::BigInt> b) {
  using Q = qfrob::BigRational;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<Q>> m(a.size(), std::vector<Q>(n + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Q(a[i][j]);
    m[i][n] = Q(b[i]);
  }
  std::size_t r = 0;
  std::vector<std::size_t> piv_col;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        const Q f = m[i][c];
        for (std::size_t k = 0; k <= n; ++k) m[i][k] -= f * m[r][k];
      }
    piv_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][n] != 0) return std::nullopt;
  if (r < n) return std::nullopt;
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < r; ++i) x[piv_col[i]] = m[i][n];
  return x;
}

/// coker of `rel` over S / (q): generators in gen degrees, relation columns in
/// rel degrees, plus q times every generator.
struct DenseModule {
  PrimeField field;
  int n_vars;
  std::vector<int> gens;
  std::vector<int> rel_degrees;
  PolyMatrix rel;  // gens x rels
  MultiPoly q;

  struct Piece {
    std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
    qfrob::EchelonBasis image;
    std::size_t dim() const { return index.size(); }
    std::size_t quotient_dim() const { return index.size() - image.rank(); }
  };

  mutable std::map<int, Piece> cache;

  const Piece& piece(int d) const {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& mono : monomials(n_vars, d - gens[g])) index.emplace(std::make_pair(g, mono), 0);
    std::size_t k = 0;
    for (auto& [key, v] : index) v = k++;
    Piece pc{std::move(index), qfrob::EchelonBasis(field, k)};
    auto add_column = [&](const std::vector<MultiPoly>& column, int degree) {
      for (const auto& mono : monomials(n_vars, d - degree)) {
        qfrob::ModVector v(k, 0);
        const MultiPoly shift = MultiPoly::monomial(field, n_vars, mono);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const MultiPoly prod = column[g] * shift;
          for (const auto& [e, c] : prod.terms()) {
            auto at = pc.index.find({g, e});
            if (at == pc.index.end()) continue;  // only reached for zero entries
            v[at->second] = field.add(v[at->second], c);
          }
        }
        pc.image.insert(std::move(v));
      }
    };
    for (std::size_t j = 0; j < rel_degrees.size(); ++j) {
      std::vector<MultiPoly> column;
      for (std::size_t g = 0; g < gens.size(); ++g) column.push_back(rel.at(g, j));
      add_column(column, rel_degrees[j]);
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<MultiPoly> column(gens.size(), MultiPoly(field, n_vars));
      column[g] = q;
      add_column(column, gens[g] + 2);
    }
    return cache.emplace(d, std::move(pc)).first->second;
  }

  std::size_t dim(int d) const { return piece(d).quotient_dim(); }
};

/// dim Hom(X, Y)_0 and the dimension of the maps factoring through the free
/// cover of Y, by direct basis expansion. X is given by generator degrees and
/// relation columns; Frobenius semantics are obtained by passing pulled-back data.
struct DenseHom {
  std::size_t hom = 0;
  std::size_t through_free = 0;
};

inline DenseHom dense_hom(const std::vector<int>& x_gens, const std::vector<int>& x_rel_degrees,
                          const PolyMatrix& x_rel, const DenseModule& y, bool with_free) {
  const PrimeField& F = y.field;
  const int n = y.n_vars;
  // Unknown basis: generator i of X goes to (gen g of Y) * monomial of degree x_gens[i] - y.gens[g].
  struct Unknown {
    std::size_t i;
    std::size_t g;
    Exponents mono;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < x_gens.size(); ++i)
    for (std::size_t g = 0; g < y.gens.size(); ++g)
      for (const auto& mono : monomials(n, x_gens[i] - y.gens[g])) unknowns.push_back({i, g, mono});

  // Constraint part: image of each unknown in the quotients Y_{r_j}, reduced.
  std::vector<std::vector<Coeff>> constraint_rows;
  for (const auto& u : unknowns) {
    std::vector<Coeff> row;
    for (std::size_t j = 0; j < x_rel_degrees.size(); ++j) {
      const auto& pc = y.piece(x_rel_degrees[j]);
      qfrob::ModVector v(pc.dim(), 0);
      const MultiPoly prod = x_rel.at(u.i, j) * MultiPoly::monomial(F, n, u.mono);
      for (const auto& [e, c] : prod.terms()) {
        auto at = pc.index.find({u.g, e});
        if (at != pc.index.end()) v[at->second] = F.add(v[at->second], c);
      }
      pc.image.reduce(v);
      row.insert(row.end(), v.begin(), v.end());
    }
    constraint_rows.push_back(std::move(row));
  }
  // Tuple coordinates: reduce each unknown's value in Y_{x_gens[i]} modulo the image.
  auto tuple_coords = [&](const std::vector<std::pair<std::size_t, qfrob::ModVector>>& parts) {
    std::vector<Coeff> out;
    for (std::size_t i = 0; i < x_gens.size(); ++i) {
      const auto& pc = y.piece(x_gens[i]);
      qfrob::ModVector v(pc.dim(), 0);
      for (const auto& [idx, vec] : parts)
        if (idx == i)
          for (std::size_t k = 0; k < v.size(); ++k) v[k] = F.add(v[k], vec[k]);
      pc.image.reduce(v);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };

  // Kernel of the constraint map, as combinations of unknowns.
  qfrob::ModMatrix cm(F, constraint_rows.empty() ? 0 : constraint_rows[0].size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (std::size_t r = 0; r < cm.rows(); ++r) cm.at(r, u) = constraint_rows[u][r];
  const auto kernel = cm.nullspace();
  std::vector<std::vector<Coeff>> hom_vectors;
  for (const auto& kv : kernel) {
    std::vector<std::pair<std::size_t, qfrob::ModVector>> parts;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (!kv[u]) continue;
      const auto& pc = y.piece(x_gens[unknowns[u].i]);
      qfrob::ModVector v(pc.dim(), 0);
      v[pc.index.at({unknowns[u].g, unknowns[u].mono})] = kv[u];
      parts.emplace_back(unknowns[u].i, std::move(v));
    }
    hom_vectors.push_back(tuple_coords(parts));
  }
  DenseHom out;
  out.hom = hom_vectors.empty() ? 0 : rank_mod_p(hom_vectors, F.p());
  if (!with_free) return out;

  // Maps into the free cover of Y: same computation with no relations on Y
  // and no quadric reduction of the target beyond S / (q), then pushed to Y.
  DenseModule cover{F, n, y.gens, {}, PolyMatrix(F, n, y.gens.size(), 0), y.q};
  std::vector<std::vector<Coeff>> free_rows;
  for (const auto& u : unknowns) {
    std::vector<Coeff> row;
    for (std::size_t j = 0; j < x_rel_degrees.size(); ++j) {
      const auto& pc = cover.piece(x_rel_degrees[j]);
      qfrob::ModVector v(pc.dim(), 0);
      const MultiPoly prod = x_rel.at(u.i, j) * MultiPoly::monomial(F, n, u.mono);
      for (const auto& [e, c] : prod.terms()) {
        auto at = pc.index.find({u.g, e});
        if (at != pc.index.end()) v[at->second] = F.add(v[at->second], c);
      }
      pc.image.reduce(v);
      row.insert(row.end(), v.begin(), v.end());
    }
    free_rows.push_back(std::move(row));
  }
  qfrob::ModMatrix fm(F, free_rows.empty() ? 0 : free_rows[0].size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (std::size_t r = 0; r < fm.rows(); ++r) fm.at(r, u) = free_rows[u][r];
  std::vector<std::vector<Coeff>> through;
  for (const auto& kv : fm.nullspace()) {
    std::vector<std::pair<std::size_t, qfrob::ModVector>> parts;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (!kv[u]) continue;
      const auto& pc = y.piece(x_gens[unknowns[u].i]);
      qfrob::ModVector v(pc.dim(), 0);
      v[pc.index.at({unknowns[u].g, unknowns[u].mono})] = kv[u];
      parts.emplace_back(unknowns[u].i, std::move(v));
    }
    through.push_back(tuple_coords(parts));
  }
  out.through_free = through.empty() ? 0 : rank_mod_p(through, F.p());
  return out;
}

}  // namespace oracle

#include "qfrob/hom.hpp"

#include "module_view.hpp"
#include "qfrob/error.hpp"

#include <set>

namespace qfrob {

HomDims hom_dims(const ModulePresentation& x, const ModulePresentation& y, int d, bool with_stable) {
  if (!(x.ring() == y.ring())) fail(ErrorKind::InvalidArgument, "Hom between modules over different rings");
  if (with_stable && !x.approximation())
    fail(ErrorKind::PreconditionFailed, "stable Hom needs a left approximation of the source");
  const QuadricRing& ring = x.ring();
  const PrimeField& field = ring.field();

  auto xw = detail::infer_weights(ring, x.gen_degrees(), x.relations());
  auto yw = detail::infer_weights(ring, y.gen_degrees(), y.relations());
  bool weighted = xw && yw;

  // Weights of the approximation targets, read off from any nonzero entry.
  std::vector<Weight> approx_w;
  if (with_stable && weighted) {
    const auto& a = *x.approximation();
    approx_w.assign(a.target_degrees.size(), Weight{});
    for (std::size_t k = 0; k < a.map.rows() && weighted; ++k) {
      std::optional<Weight> wk;
      for (std::size_t i = 0; i < a.map.cols(); ++i) {
        if (a.map.at(k, i).is_zero()) continue;
        const auto we = detail::entry_weight(ring, a.map.at(k, i));
        if (!we) {
          weighted = false;
          break;
        }
        const Weight cand = weight_sub(xw->gens[i], *we);
        if (wk && *wk != cand) {
          weighted = false;
          break;
        }
        wk = cand;
      }
      if (wk) approx_w[k] = *wk;
    }
  }
  if (!weighted) {
    xw = detail::PresentationWeights{std::vector<Weight>(x.generator_count()),
                                     std::vector<Weight>(x.relation_count())};
    approx_w.assign(with_stable ? x.approximation()->target_degrees.size() : 0, Weight{});
    yw = detail::PresentationWeights{std::vector<Weight>(y.generator_count()),
                                     std::vector<Weight>(y.relation_count())};
  }

  QuadricAlgebra algebra(ring);
  detail::ModuleView yv(algebra, y.gen_degrees(), y.rel_degrees(), y.relations(), weighted, yw->gens, yw->rels);

  std::set<Weight> omegas;
  for (std::size_t i = 0; i < x.generator_count(); ++i)
    for (const auto& w : yv.weights_at(x.gen_degrees()[i] + d)) omegas.insert(weight_sub(w, xw->gens[i]));

  const std::size_t gx = x.generator_count();
  HomDims out;
  for (const auto& omega : omegas) {
    std::vector<const detail::Piece*> src(gx);
    std::vector<std::size_t> offset(gx + 1, 0);
    for (std::size_t i = 0; i < gx; ++i) {
      src[i] = &yv.piece(x.gen_degrees()[i] + d, weight_add(xw->gens[i], omega));
      offset[i + 1] = offset[i] + src[i]->dim();
    }
    const std::size_t n = offset[gx];
    if (n == 0) continue;

    std::vector<const detail::Piece*> tgt(x.relation_count(), nullptr);
    std::vector<std::size_t> row_offset(x.relation_count() + 1, 0);
    for (std::size_t j = 0; j < x.relation_count(); ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < gx && !nonzero; ++i) nonzero = !x.relations().at(i, j).is_zero();
      if (nonzero) tgt[j] = &yv.piece(x.rel_degrees()[j] + d, weight_add(xw->rels[j], omega));
      row_offset[j + 1] = row_offset[j] + (tgt[j] ? tgt[j]->dim() : 0);
    }

    ModMatrix constraints(field, row_offset.back(), n);
    for (std::size_t i = 0; i < gx; ++i) {
      for (std::size_t q = 0; q < src[i]->dim(); ++q) {
        const auto& [l, mono] = src[i]->coords[src[i]->free_coords[q]];
        for (std::size_t j = 0; j < x.relation_count(); ++j) {
          const MultiPoly& f = x.relations().at(i, j);
          if (f.is_zero() || !tgt[j] || tgt[j]->dim() == 0) continue;
          ModVector v(tgt[j]->ambient_dim(), 0);
          yv.accumulate(*tgt[j], l, mono, f, 1, v);
          const ModVector qv = yv.to_quotient(*tgt[j], std::move(v));
          for (std::size_t r = 0; r < qv.size(); ++r) constraints.at(row_offset[j] + r, offset[i] + q) = qv[r];
        }
      }
    }
    out.hom += n - constraints.rank();

    if (!with_stable) continue;
    const auto& a = *x.approximation();
    std::vector<ModVector> through;
    for (std::size_t k = 0; k < a.map.rows(); ++k) {
      const detail::Piece& pk = yv.piece(a.target_degrees[k] + d, weight_add(approx_w[k], omega));
      for (std::size_t q = 0; q < pk.dim(); ++q) {
        const auto& [l, mono] = pk.coords[pk.free_coords[q]];
        ModVector v(n, 0);
        for (std::size_t i = 0; i < gx; ++i) {
          const MultiPoly& f = a.map.at(k, i);
          if (f.is_zero() || src[i]->dim() == 0) continue;
          ModVector amb(src[i]->ambient_dim(), 0);
          yv.accumulate(*src[i], l, mono, f, 1, amb);
          const ModVector qv = yv.to_quotient(*src[i], std::move(amb));
          for (std::size_t r = 0; r < qv.size(); ++r) v[offset[i] + r] = qv[r];
        }
        through.push_back(std::move(v));
      }
    }
    if (through.empty()) continue;
    ModMatrix tm(field, through.size(), n);
    for (std::size_t r = 0; r < through.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) tm.at(r, c) = through[r][c];
    out.through_free += tm.rank();
  }
  return out;
}

std::size_t graded_hom_dim(const ModulePresentation& x, const ModulePresentation& y, int d) {
  return hom_dims(x, y, d, false).hom;
}

std::size_t stable_hom_dim(const ModulePresentation& x, const ModulePresentation& y, int d) {
  return hom_dims(x, y, d, true).stable();
}

std::size_t ext1_dim(const MatrixFactorization& x, const ModulePresentation& y, int d) {
  const QuadricRing& ring = y.ring();
  const MatrixFactorization omega = twist(cosyzygy(x), -x.form_degree());
  return stable_hom_dim(presentation_from_factorization(ring, omega), y, d);
}

std::size_t computed_hom_ext(const PrimeField& field, const SheafSymbol& src, const SheafSymbol& tgt, int i) {
  if (src.m != tgt.m) fail(ErrorKind::InvalidArgument, "symbols on different quadrics");
  const QuadricRing ring(field, src.m);
  ring.require_bundle_range();
  const ModulePresentation y = presentation_of(ring, tgt);
  if (i == 0) return graded_hom_dim(presentation_of(ring, src), y, 0);
  if (i != 1) fail(ErrorKind::InvalidArgument, "only Hom and Ext^1 are available");
  if (src.kind == SheafKind::Line) return 0;
  return ext1_dim(factorization_of(field, src), y, 0);
}

}  // namespace qfrob

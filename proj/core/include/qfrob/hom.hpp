#pragma once

#include "qfrob/catalog.hpp"
#include "qfrob/matfac.hpp"
#include "qfrob/presentation.hpp"

#include <cstddef>

namespace qfrob {

struct HomDims {
  std::size_t hom = 0;           ///< dim Hom(X, Y)_d
  std::size_t through_free = 0;  ///< dim of the maps factoring through a free module
  std::size_t stable() const noexcept { return hom - through_free; }
};

/// Degree-d homomorphisms X -> Y. When `with_stable` is set, X must carry a
/// left approximation; the maps through free modules are the composites
/// X -> P -> Y with P the approximation target.
HomDims hom_dims(const ModulePresentation& x, const ModulePresentation& y, int d, bool with_stable);

std::size_t graded_hom_dim(const ModulePresentation& x, const ModulePresentation& y, int d);
/// Throws PreconditionFailed unless X carries a left approximation.
std::size_t stable_hom_dim(const ModulePresentation& x, const ModulePresentation& y, int d);

/// Ext^1(X, Y)_d as the stable Hom from the first syzygy of X into Y.
std::size_t ext1_dim(const MatrixFactorization& x, const ModulePresentation& y, int d);

/// Hom (i = 0) or Ext^1 (i = 1) between bundles in degree 0 over F_p.
std::size_t computed_hom_ext(const PrimeField& field, const SheafSymbol& src, const SheafSymbol& tgt, int i);

}  // namespace qfrob

#pragma once

#include "qfrob/catalog.hpp"
#include "qfrob/matfac.hpp"
#include "qfrob/poly_matrix.hpp"
#include "qfrob/quadric_ring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qfrob {

/// A map x_i -> sum_k map(k, i) f_k from the presented module into the free
/// module with generators f_k in degrees target_degrees, through which every
/// map into a free module factors.
struct LeftApproximation {
  PolyMatrix map;
  std::vector<int> target_degrees;
};

/// Graded module over R = F_p[x]/(q_m): generators in gen_degrees modulo the
/// columns of `relations` (gens x rels), which are homogeneous of degree
/// rel_degree - gen_degree and stored in normal form.
class ModulePresentation {
 public:
  ModulePresentation(QuadricRing ring, std::vector<int> gen_degrees, std::vector<int> rel_degrees,
                     PolyMatrix relations, std::optional<LeftApproximation> approximation = std::nullopt);

  const QuadricRing& ring() const noexcept { return ring_; }
  std::size_t generator_count() const noexcept { return gen_degrees_.size(); }
  std::size_t relation_count() const noexcept { return rel_degrees_.size(); }
  const std::vector<int>& gen_degrees() const noexcept { return gen_degrees_; }
  const std::vector<int>& rel_degrees() const noexcept { return rel_degrees_; }
  const PolyMatrix& relations() const noexcept { return relations_; }
  const std::optional<LeftApproximation>& approximation() const noexcept { return approximation_; }

 private:
  QuadricRing ring_;
  std::vector<int> gen_degrees_;
  std::vector<int> rel_degrees_;
  PolyMatrix relations_;
  std::optional<LeftApproximation> approximation_;
};

using GradedPresentation = ModulePresentation;

/// Free module with generators in the given degrees; its left approximation is the identity.
ModulePresentation free_presentation(const QuadricRing& ring, const std::vector<int>& degrees);

/// coker(A) with the partner B as left approximation.
ModulePresentation presentation_from_factorization(const QuadricRing& ring, const MatrixFactorization& mf);

/// O(t), S+(t), S-(t), S(t). S- is the cokernel of phi_m, S+ of psi_m.
ModulePresentation presentation_of(const QuadricRing& ring, const SheafSymbol& sym);
MatrixFactorization factorization_of(const PrimeField& field, const SheafSymbol& sym);

ModulePresentation direct_sum(const ModulePresentation& x, const ModulePresentation& y);
ModulePresentation twisted(const ModulePresentation& x, int t);

/// Substitutes x_i -> x_i^(p^e) in relations and approximation and scales all degrees by p^e.
ModulePresentation frobenius_pullback_presentation(const ModulePresentation& x, int e, std::uint32_t p);

}  // namespace qfrob

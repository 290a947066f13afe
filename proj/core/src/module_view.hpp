#pragma once

#include "qfrob/graded_algebra.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/poly_matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qfrob::detail {

/// Torus weights of generators and relations of a presentation, or nullopt if
/// some entry is not weight-homogeneous or the constraints are contradictory.
struct PresentationWeights {
  std::vector<Weight> gens;
  std::vector<Weight> rels;  // only meaningful for nonzero columns
};

std::optional<Weight> entry_weight(const QuadricRing& ring, const MultiPoly& f);
std::optional<PresentationWeights> infer_weights(const QuadricRing& ring, const std::vector<int>& gen_degrees,
                                                 const PolyMatrix& relations);

/// One (degree, weight) piece of a presented module over a graded algebra: the
/// ambient free coordinates, the span of the relations, and the quotient
/// coordinates (non-pivot ambient positions).
struct Piece {
  Piece(PrimeField field, std::size_t dim) : image(field, dim) {}

  std::vector<std::pair<std::size_t, Exponents>> coords;
  std::vector<std::unordered_map<Exponents, std::size_t, ExponentsHash>> index;
  EchelonBasis image;
  std::vector<std::size_t> free_coords;

  std::size_t ambient_dim() const noexcept { return coords.size(); }
  std::size_t dim() const noexcept { return free_coords.size(); }
};

/// Lazily computed pieces of coker(relations) over `algebra`. When `weighted`
/// is false every query collapses to the zero weight and pieces span whole
/// degrees.
class ModuleView {
 public:
  ModuleView(GradedAlgebra& algebra, std::vector<int> gen_degrees, std::vector<int> rel_degrees,
             const PolyMatrix& relations, bool weighted, std::vector<Weight> gen_weights,
             std::vector<Weight> rel_weights);

  bool weighted() const noexcept { return weighted_; }
  GradedAlgebra& algebra() noexcept { return algebra_; }
  std::size_t generator_count() const noexcept { return gen_degrees_.size(); }
  int gen_degree(std::size_t l) const noexcept { return gen_degrees_[l]; }
  const Weight& gen_weight(std::size_t l) const noexcept { return gen_weights_[l]; }

  const Piece& piece(int degree, const Weight& w);

  /// Weights occurring in the ambient module at the given degree.
  std::vector<Weight> weights_at(int degree);

  /// ambient += c * mono * f placed on generator `gen` of `target`.
  void accumulate(const Piece& target, std::size_t gen, const Exponents& mono, const MultiPoly& f, Coeff c,
                  ModVector& ambient);
  /// Canonical quotient coordinates of an ambient vector.
  ModVector to_quotient(const Piece& target, ModVector ambient) const;

 private:
  GradedAlgebra& algebra_;
  std::vector<int> gen_degrees_;
  std::vector<int> rel_degrees_;
  // Column s as a list of (gen, polynomial) pairs with nonzero polynomial.
  std::vector<std::vector<std::pair<std::size_t, MultiPoly>>> columns_;
  bool weighted_;
  std::vector<Weight> gen_weights_;
  std::vector<Weight> rel_weights_;
  std::map<std::pair<int, Weight>, std::unique_ptr<Piece>> pieces_;
  TermList scratch_;
};

}  // namespace qfrob::detail

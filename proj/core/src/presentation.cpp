#include "qfrob/presentation.hpp"

#include "qfrob/error.hpp"

#include <string>

namespace qfrob {
namespace {

void check_graded(const PolyMatrix& m, const std::vector<int>& row_deg, const std::vector<int>& col_deg,
                  const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const MultiPoly& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != col_deg[j] - row_deg[i])
        fail(ErrorKind::InvalidArgument, std::string(what) + " entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") has the wrong degree");
    }
}

}  // namespace

ModulePresentation::ModulePresentation(QuadricRing ring, std::vector<int> gen_degrees, std::vector<int> rel_degrees,
                                       PolyMatrix relations, std::optional<LeftApproximation> approximation)
    : ring_(ring),
      gen_degrees_(std::move(gen_degrees)),
      rel_degrees_(std::move(rel_degrees)),
      relations_(std::move(relations)),
      approximation_(std::move(approximation)) {
  if (relations_.rows() != gen_degrees_.size() || relations_.cols() != rel_degrees_.size())
    fail(ErrorKind::InvalidArgument, "relation matrix shape does not match the degree lists");
  if (relations_.n_vars() != ring_.n_vars() || !(relations_.field() == ring_.field()))
    fail(ErrorKind::InvalidArgument, "relation matrix lives in a different ring");
  relations_ = relations_.map([this](const MultiPoly& e) { return ring_.normal_form(e); });
  check_graded(relations_, gen_degrees_, rel_degrees_, "relation");
  if (approximation_) {
    auto& a = *approximation_;
    if (a.map.cols() != gen_degrees_.size() || a.map.rows() != a.target_degrees.size())
      fail(ErrorKind::InvalidArgument, "approximation shape does not match the generators");
    a.map = a.map.map([this](const MultiPoly& e) { return ring_.normal_form(e); });
    check_graded(a.map, a.target_degrees, gen_degrees_, "approximation");
  }
}

ModulePresentation free_presentation(const QuadricRing& ring, const std::vector<int>& degrees) {
  PolyMatrix rel(ring.field(), ring.n_vars(), degrees.size(), 0);
  LeftApproximation approx{PolyMatrix::identity(ring.field(), ring.n_vars(), degrees.size()), degrees};
  return ModulePresentation(ring, degrees, {}, rel, approx);
}

ModulePresentation presentation_from_factorization(const QuadricRing& ring, const MatrixFactorization& mf) {
  std::vector<int> targets;
  for (int c : mf.col_degrees()) targets.push_back(c - mf.form_degree());
  return ModulePresentation(ring, mf.row_degrees(), mf.col_degrees(), mf.a(), LeftApproximation{mf.b(), targets});
}

MatrixFactorization factorization_of(const PrimeField& field, const SheafSymbol& sym) {
  const PhiPsi pp = build_phi_psi(field, sym.m);
  switch (sym.kind) {
    case SheafKind::SpinorMinus: return twist(pp.phi, sym.twist);
    case SheafKind::SpinorPlus: return twist(pp.psi, sym.twist);
    case SheafKind::SpinorSum: return twist(direct_sum(pp.psi, pp.phi), sym.twist);
    case SheafKind::Line: break;
  }
  fail(ErrorKind::InvalidArgument, "line bundles have no non-trivial factorization");
}

ModulePresentation presentation_of(const QuadricRing& ring, const SheafSymbol& sym) {
  if (sym.m != ring.m()) fail(ErrorKind::InvalidArgument, "symbol and ring disagree on m");
  if (sym.kind == SheafKind::Line) return free_presentation(ring, {-sym.twist});
  return presentation_from_factorization(ring, factorization_of(ring.field(), sym));
}

ModulePresentation direct_sum(const ModulePresentation& x, const ModulePresentation& y) {
  if (!(x.ring() == y.ring())) fail(ErrorKind::InvalidArgument, "direct sum over different rings");
  auto cat = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const auto& ring = x.ring();
  const PolyMatrix rel = PolyMatrix::blocks(
      x.relations(), PolyMatrix(ring.field(), ring.n_vars(), x.generator_count(), y.relation_count()),
      PolyMatrix(ring.field(), ring.n_vars(), y.generator_count(), x.relation_count()), y.relations());
  std::optional<LeftApproximation> approx;
  if (x.approximation() && y.approximation()) {
    const auto& ax = *x.approximation();
    const auto& ay = *y.approximation();
    approx = LeftApproximation{PolyMatrix::block_diagonal(ax.map, ay.map), cat(ax.target_degrees, ay.target_degrees)};
  }
  return ModulePresentation(ring, cat(x.gen_degrees(), y.gen_degrees()), cat(x.rel_degrees(), y.rel_degrees()), rel,
                            approx);
}

ModulePresentation twisted(const ModulePresentation& x, int t) {
  auto shift = [t](std::vector<int> v) {
    for (auto& d : v) d -= t;
    return v;
  };
  std::optional<LeftApproximation> approx;
  if (x.approximation()) approx = LeftApproximation{x.approximation()->map, shift(x.approximation()->target_degrees)};
  return ModulePresentation(x.ring(), shift(x.gen_degrees()), shift(x.rel_degrees()), x.relations(), approx);
}

ModulePresentation frobenius_pullback_presentation(const ModulePresentation& x, int e, std::uint32_t p) {
  if (e < 0) fail(ErrorKind::InvalidArgument, "Frobenius exponent must be nonnegative");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 4096) fail(ErrorKind::Unsupported, "Frobenius power too large");
  }
  const auto power = static_cast<std::uint32_t>(q);
  auto scale = [power](std::vector<int> v) {
    for (auto& d : v) d *= static_cast<int>(power);
    return v;
  };
  auto frob = [power](const MultiPoly& f) { return f.frobenius(power); };
  std::optional<LeftApproximation> approx;
  if (x.approximation())
    approx = LeftApproximation{x.approximation()->map.map(frob), scale(x.approximation()->target_degrees)};
  return ModulePresentation(x.ring(), scale(x.gen_degrees()), scale(x.rel_degrees()), x.relations().map(frob),
                            approx);
}

}  // namespace qfrob

#pragma once

#include "qfrob/bigint.hpp"
#include "qfrob/catalog.hpp"
#include "qfrob/support.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <cstdint>
#include <map>

namespace qfrob {

/// h0 of (F^e_* sym)(d) = h0 of sym twisted by p^e d.
BigInt pushforward_hilbert(const SheafSymbol& sym, int e, std::uint32_t p, std::int64_t d);

/// Number of minimal generators in degree d of the graded module of sections of
/// F_* sym (e = 1), computed as a graded piece of the source module modulo the
/// Frobenius power of the maximal ideal.
BigInt pushforward_generator_count(const SheafSymbol& sym, std::uint32_t p, std::int64_t d);

/// Multiplicities keyed by the twist of the summand: line[s] counts O(s).
struct SummandMultiset {
  SheafSymbol source;
  std::uint32_t p = 3;
  int e = 1;
  std::map<int, BigInt> line;
  std::map<int, BigInt> spinor_plus;
  std::map<int, BigInt> spinor_minus;
  std::map<int, BigInt> unresolved_spinor;  // single spinors whose sign is not split

  int m() const noexcept { return source.m; }
  BigInt rank_total() const;
  BigInt rank_expected() const;
  /// h0 of the multiset twisted by d.
  BigInt hilbert(std::int64_t d) const;
  /// Total count of single spinors (plus, minus and unresolved) at twist s.
  BigInt spinor_count(int s) const;
  bool has_spinors() const;
};

nlohmann::ordered_json to_json(const SummandMultiset& ms);

/// Decomposes F^e_* sym into line bundles and twisted spinor bundles.
///
/// For e = 1 the multiplicities are the unique exact solution of the Hilbert
/// function and minimal-generator-count equations over a candidate window
/// (predicted support widened by one twist on each side); e >= 2 composes the
/// e = 1 decompositions. O(j), S(j) sources get equal plus/minus spinor counts;
/// single spinor sources report unresolved spinor counts.
///
/// Errors: Unsupported (p = 2, m < 2), Degenerate (no unique nonnegative
/// integral solution), Inconsistent (rank or Hilbert check failed).
SummandMultiset decompose(const SheafSymbol& sym, int e, std::uint32_t p);

/// Whether the nonzero support of ms equals the predicted support exactly.
bool oracle_agrees(const SummandMultiset& ms);

/// u (level -m) or v (level -m+1): value[a][b] = multiplicity of Sigma_b(level)
/// in F_* Sigma_a(level); index 0 is plus, 1 is minus.
struct SpinorMultiplicityMatrix {
  int level = 0;
  std::array<std::array<std::uint64_t, 2>, 2> value{};

  bool symmetric() const noexcept { return value[0][1] == value[1][0]; }
  bool nonzero() const noexcept;
};

/// Row a of the u/v matrix via stable Hom on the Frobenius pullback side,
/// cross-checked against the unresolved total in `precomputed` (a decomposition
/// of F_* Sigma_a(level)); Inconsistent on mismatch.
std::array<std::uint64_t, 2> split_spinor_multiplicities(SheafKind a, int level, std::uint32_t p, int m,
                                                         const SummandMultiset& precomputed);

SpinorMultiplicityMatrix spinor_multiplicity_matrix(int level, std::uint32_t p, int m);

}  // namespace qfrob

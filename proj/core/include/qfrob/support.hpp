#pragma once

#include "qfrob/catalog.hpp"

#include <cstdint>
#include <set>

namespace qfrob {

// Summand-support predicates for Frobenius pushforwards on the quadric of
// dimension 2m. Each asks whether F^e_* E(j) contains O(-t), resp. S(-t), as a
// direct summand. Throw Unsupported for p = 2 or m < 2, InvalidArgument for e < 1.

bool line_in_pushforward_O(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t);
bool spinor_in_pushforward_O(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t);
bool line_in_pushforward_S(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t);
bool spinor_in_pushforward_S(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t);

/// Sets of t with O(-t), resp. S(-t), predicted in F^e_* of the source.
/// Single spinor sources use the S(j) predicates.
struct SupportPrediction {
  SheafSymbol source;
  std::uint32_t p = 3;
  int e = 1;
  std::set<std::int64_t> line_twists;
  std::set<std::int64_t> spinor_twists;
};

SupportPrediction predict_support(const SheafSymbol& source, std::uint32_t p, int e);

/// Least e >= 1 with p^(e-1) (m-1) >= 2m.
int lemma42_threshold(std::uint32_t p, int m);

}  // namespace qfrob

#pragma once

#include "qfrob/catalog.hpp"
#include "qfrob/pushforward.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qfrob {

/// 0 -> S(-m)^alpha -> E -> S(-m+1)^beta -> 0 with E written as
/// Sigma+(-m)^a+ + Sigma-(-m)^a- + Sigma+(-m+1)^b+ + Sigma-(-m+1)^b- + O(-m)^rho.
struct ExtensionShape {
  int m = 2;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t alpha_plus = 0;
  std::uint64_t alpha_minus = 0;
  std::uint64_t beta_plus = 0;
  std::uint64_t beta_minus = 0;
  std::uint64_t rho = 0;
};

struct ShapeVerdict {
  std::uint64_t rho = 0;
  bool splits = true;
};

/// Malformed unless 2^m (alpha + beta) = 2^(m-1) (a+ + a- + b+ + b-) + rho.
ShapeVerdict analyze_extension_shape(const ExtensionShape& shape);

/// Whether every rational vector in the kernel of u has coordinate sum zero.
/// PreconditionFailed unless u is symmetric and nonzero.
bool kernel_forces_sum_zero(const SpinorMultiplicityMatrix& u);

/// True iff u (alpha - a+, alpha - a-) = 0 and a+ + a- = 2 alpha.
/// PreconditionFailed unless u is symmetric and nonzero.
bool key_lemma2_force(const SpinorMultiplicityMatrix& u, std::uint64_t alpha, std::uint64_t alpha_plus,
                      std::uint64_t alpha_minus);

/// One row of the Hom/Ext reference table: expected value in degree 0.
struct TableEntry {
  SheafSymbol src;
  SheafSymbol tgt;
  int i = 0;
  int expected = 0;
};

/// The eight single-spinor Hom/Ext entries on the quadric of dimension 2m.
std::vector<TableEntry> spinor_table(int m);

struct Premise {
  std::string name;
  std::string paper_ref;
  bool passed = false;
  nlohmann::ordered_json data;
};

struct Certificate {
  std::uint32_t p = 3;
  int m = 2;
  int e0 = 1;
  int e_max = 1;
  std::vector<Premise> premises;
  SpinorMultiplicityMatrix u;
  SpinorMultiplicityMatrix v;

  bool certified() const;
  /// "CERTIFIED" or "FAILED(<first failing premise>)".
  std::string verdict() const;
};

nlohmann::ordered_json to_json(const Certificate& cert);

/// Runs the premise chain for e in [e0, e_max]. Premises after a failure are
/// still evaluated where possible; computation errors inside a premise mark it
/// failed and record the message. Unsupported for p = 2, m < 2 or
/// e_max below the threshold.
Certificate certify_non_d_affine(std::uint32_t p, int m, int e_max);

}  // namespace qfrob

#pragma once

#include "qfrob/bigint.hpp"
#include "qfrob/matfac.hpp"

#include <nlohmann/json.hpp>

namespace qfrob {

/// Integer JSON value when it fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json big_to_json(const BigInt& v);

/// {"size", "p", "m", "A", "B", "row_degrees", "col_degrees"}; entries are term
/// lists [{"exps": [...], "coeff": c}, ...].
nlohmann::ordered_json to_json(const MatrixFactorization& mf);
/// Entries rendered as strings, e.g. [["x1"]].
nlohmann::ordered_json matrix_strings(const PolyMatrix& m);

nlohmann::ordered_json to_json(const ModMatrix& m);

}  // namespace qfrob

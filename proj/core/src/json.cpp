#include "qfrob/json.hpp"

#include <limits>

namespace qfrob {
namespace {

nlohmann::ordered_json term_list(const MultiPoly& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::array();
    for (int i = 0; i < f.n_vars(); ++i) exps.push_back(e[i]);
    terms.push_back({{"exps", exps}, {"coeff", c}});
  }
  return terms;
}

nlohmann::ordered_json term_matrix(const PolyMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(term_list(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::ordered_json to_json(const MatrixFactorization& mf) {
  nlohmann::ordered_json j;
  j["size"] = mf.size();
  j["p"] = mf.field().p();
  j["m"] = mf.m();
  j["A"] = term_matrix(mf.a());
  j["B"] = term_matrix(mf.b());
  j["row_degrees"] = mf.row_degrees();
  j["col_degrees"] = mf.col_degrees();
  return j;
}

nlohmann::ordered_json matrix_strings(const PolyMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json to_json(const ModMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qfrob

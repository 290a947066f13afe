#include "qfrob/certificate.hpp"

#include "qfrob/error.hpp"
#include "qfrob/field.hpp"
#include "qfrob/hom.hpp"
#include "qfrob/json.hpp"
#include "qfrob/support.hpp"

#include <functional>
#include <set>

namespace qfrob {
namespace {

void require_symmetric_nonzero(const SpinorMultiplicityMatrix& u) {
  if (!u.symmetric() || !u.nonzero())
    fail(ErrorKind::PreconditionFailed, "multiplicity matrix must be symmetric and nonzero");
}

nlohmann::ordered_json matrix_json(const SpinorMultiplicityMatrix& u) {
  return nlohmann::ordered_json::array({{u.value[0][0], u.value[0][1]}, {u.value[1][0], u.value[1][1]}});
}

nlohmann::ordered_json twist_set(const std::set<std::int64_t>& s) {
  auto out = nlohmann::ordered_json::array();
  for (auto t : s) out.push_back(t);
  return out;
}

std::set<std::int64_t> spinor_keys(const SummandMultiset& ms) {
  std::set<std::int64_t> out;
  for (const auto* part : {&ms.spinor_plus, &ms.spinor_minus, &ms.unresolved_spinor})
    for (const auto& [t, n] : *part)
      if (n != 0) out.insert(t);
  return out;
}

// Runs body; an Error inside marks the premise failed with the message.
Premise run_premise(std::string name, std::string ref, const std::function<bool(nlohmann::ordered_json&)>& body) {
  Premise pr{std::move(name), std::move(ref), false, nlohmann::ordered_json::object()};
  try {
    pr.passed = body(pr.data);
  } catch (const Error& err) {
    pr.passed = false;
    pr.data["error"] = err.what();
  }
  return pr;
}

}  // namespace

ShapeVerdict analyze_extension_shape(const ExtensionShape& s) {
  if (s.m < 1 || s.m > 20) fail(ErrorKind::InvalidArgument, "quadric index out of range");
  const BigInt full = BigInt(1) << s.m;
  const BigInt half = BigInt(1) << (s.m - 1);
  const BigInt lhs = full * (BigInt(s.alpha) + s.beta);
  const BigInt rhs = half * (BigInt(s.alpha_plus) + s.alpha_minus + s.beta_plus + s.beta_minus) + s.rho;
  if (lhs != rhs)
    fail(ErrorKind::Malformed, "rank balance fails: " + lhs.str() + " != " + rhs.str());
  return ShapeVerdict{s.rho, s.rho == 0};
}

bool kernel_forces_sum_zero(const SpinorMultiplicityMatrix& u) {
  require_symmetric_nonzero(u);
  const BigInt a = u.value[0][0];
  const BigInt b = u.value[0][1];
  const BigInt d = u.value[1][1];
  if (a * d != b * b) return true;  // invertible: kernel is zero
  // Rank one: the kernel is spanned by (b, -a) or, when a = b = 0, by (1, 0).
  if (a == 0 && b == 0) return false;
  return a == b;
}

bool key_lemma2_force(const SpinorMultiplicityMatrix& u, std::uint64_t alpha, std::uint64_t alpha_plus,
                      std::uint64_t alpha_minus) {
  require_symmetric_nonzero(u);
  const BigInt x = BigInt(alpha) - alpha_plus;
  const BigInt y = BigInt(alpha) - alpha_minus;
  const bool in_kernel = u.value[0][0] * x + u.value[0][1] * y == 0 && u.value[1][0] * x + u.value[1][1] * y == 0;
  return in_kernel && x + y == 0;
}

std::vector<TableEntry> spinor_table(int m) {
  const SheafSymbol plus = spinor_plus(m, 0);
  const SheafSymbol minus = spinor_minus(m, 0);
  return {
      {plus, plus, 0, 1},
      {minus, minus, 0, 1},
      {plus, minus, 0, 0},
      {minus, plus, 0, 0},
      {plus, spinor_plus(m, -1), 1, 0},
      {minus, spinor_minus(m, -1), 1, 0},
      {plus, spinor_minus(m, -1), 1, 1},
      {minus, spinor_plus(m, -1), 1, 1},
  };
}

bool Certificate::certified() const {
  if (premises.empty()) return false;
  for (const auto& pr : premises)
    if (!pr.passed) return false;
  return true;
}

std::string Certificate::verdict() const {
  for (const auto& pr : premises)
    if (!pr.passed) return "FAILED(" + pr.name + ")";
  return premises.empty() ? "FAILED(empty)" : "CERTIFIED";
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["p"] = cert.p;
  j["m"] = cert.m;
  j["e0"] = cert.e0;
  j["e_max"] = cert.e_max;
  auto premises = nlohmann::ordered_json::array();
  for (const auto& pr : cert.premises) {
    nlohmann::ordered_json row;
    row["name"] = pr.name;
    row["paper_ref"] = pr.paper_ref;
    row["status"] = pr.passed ? "passed" : "failed";
    row["data"] = pr.data;
    premises.push_back(std::move(row));
  }
  premises.push_back({{"name", "colimit"},
                      {"paper_ref", "passage from finite Frobenius levels to all levels"},
                      {"status", "paper-supplied"},
                      {"data", {{"computed", false}}}});
  j["premises"] = std::move(premises);
  j["u"] = matrix_json(cert.u);
  j["v"] = matrix_json(cert.v);
  j["verdict"] = cert.verdict();
  return j;
}

Certificate certify_non_d_affine(std::uint32_t p, int m, int e_max) {
  if (p == 2) fail(ErrorKind::Unsupported, "characteristic 2 is outside the supported range");
  if (m <= 1) fail(ErrorKind::Unsupported, "needs m >= 2");
  const PrimeField field(p);
  Certificate cert;
  cert.p = p;
  cert.m = m;
  cert.e0 = lemma42_threshold(p, m);
  cert.e_max = e_max;
  if (e_max < cert.e0)
    fail(ErrorKind::Unsupported,
         "e_max " + std::to_string(e_max) + " is below the threshold " + std::to_string(cert.e0));

  // 1. S(-m) and S(-m+1) occur in F^e_* O for every e in range.
  cert.premises.push_back(run_premise(
      "threshold_spinor_presence", "spinor summands S(-m), S(-m+1) of F^e_* O from e0 on",
      [&](nlohmann::ordered_json& data) {
        bool ok = true;
        auto rows = nlohmann::ordered_json::array();
        for (int e = cert.e0; e <= e_max; ++e) {
          const bool b0 = spinor_in_pushforward_O(p, m, e, 0, m);
          const bool b1 = spinor_in_pushforward_O(p, m, e, 0, m - 1);
          ok = ok && b0 && b1;
          rows.push_back({{"e", e}, {"b_-m", b0}, {"b_-m+1", b1}});
        }
        data["oracle"] = std::move(rows);
        // The solver confirms the threshold level itself.
        const SummandMultiset ms = decompose(line(m, 0), cert.e0, p);
        const BigInt c0 = ms.spinor_count(-m);
        const BigInt c1 = ms.spinor_count(-m + 1);
        data["solver_e0"] = {{"S(-m)", big_to_json(c0 / 2)}, {"S(-m+1)", big_to_json(c1 / 2)}};
        return ok && c0 > 0 && c1 > 0;
      }));

  // 2. F_* S(-m), F_* S(-m+1) have a spinor summand only at their own twist.
  cert.premises.push_back(run_premise(
      "spinor_exclusivity", "F_* S(j) contains S(j) and no other spinor twist, j = -m, -m+1",
      [&](nlohmann::ordered_json& data) {
        bool ok = true;
        for (int j : {-m, -m + 1}) {
          const SupportPrediction pred = predict_support(spinor_sum(m, j), p, 1);
          const SummandMultiset ms = decompose(spinor_sum(m, j), 1, p);
          const std::set<std::int64_t> keys = spinor_keys(ms);
          const bool oracle_ok = pred.spinor_twists == std::set<std::int64_t>{-j};
          const bool solver_ok = keys == std::set<std::int64_t>{j} && oracle_agrees(ms);
          ok = ok && oracle_ok && solver_ok;
          data[to_string(spinor_sum(m, j))] = {{"predicted_t", twist_set(pred.spinor_twists)},
                                               {"solver_twists", twist_set(keys)},
                                               {"multiplicity", big_to_json(ms.spinor_count(j) / 2)},
                                               {"oracle_agrees", oracle_ok && solver_ok}};
        }
        return ok;
      }));

  // 3. F_* O(-m) is a sum of line bundles.
  cert.premises.push_back(run_premise(
      "line_pushforward_spinor_free", "F_* O(-m) is a direct sum of line bundles", [&](nlohmann::ordered_json& data) {
        const SummandMultiset ms = decompose(line(m, -m), 1, p);
        const bool free_of_spinors = !ms.has_spinors();
        data["spinor_free"] = free_of_spinors;
        data["oracle_agrees"] = oracle_agrees(ms);
        data["rank_total"] = big_to_json(ms.rank_total());
        return free_of_spinors && oracle_agrees(ms) && ms.rank_total() == ms.rank_expected();
      }));

  // 4. u and v.
  cert.premises.push_back(run_premise(
      "multiplicity_matrices", "u and v are symmetric and nonzero", [&](nlohmann::ordered_json& data) {
        cert.u = spinor_multiplicity_matrix(-m, p, m);
        cert.v = spinor_multiplicity_matrix(-m + 1, p, m);
        data["u_symmetric"] = cert.u.symmetric();
        data["u_nonzero"] = cert.u.nonzero();
        data["v_symmetric"] = cert.v.symmetric();
        data["v_nonzero"] = cert.v.nonzero();
        return cert.u.symmetric() && cert.u.nonzero() && cert.v.symmetric() && cert.v.nonzero();
      }));

  // 5. Hom/Ext table, plus the vanishing used to separate the extension.
  cert.premises.push_back(run_premise(
      "hom_ext_table", "Hom and Ext^1 between twisted spinor bundles", [&](nlohmann::ordered_json& data) {
        bool ok = true;
        auto rows = nlohmann::ordered_json::array();
        auto record = [&](const SheafSymbol& src, const SheafSymbol& tgt, int i, int expected) {
          const std::size_t got = computed_hom_ext(field, src, tgt, i);
          ok = ok && got == static_cast<std::size_t>(expected);
          rows.push_back({{"i", i},
                          {"src", to_string(src)},
                          {"tgt", to_string(tgt)},
                          {"expected", expected},
                          {"computed", got}});
        };
        for (const auto& entry : spinor_table(m)) record(entry.src, entry.tgt, entry.i, entry.expected);
        record(spinor_sum(m, -m), spinor_sum(m, -m + 1), 1, 0);
        record(spinor_sum(m, -m + 1), spinor_sum(m, -m), 1, 2);
        for (int t = -1; t <= 1; ++t) record(spinor_sum(m, 0), line(m, t), 1, 0);
        data["entries"] = std::move(rows);
        return ok;
      }));

  // 6. The multiplicity count forces alpha+ + alpha- = 2 alpha.
  cert.premises.push_back(run_premise(
      "multiplicity_forcing", "u (alpha - a+, alpha - a-) = 0 forces a+ + a- = 2 alpha",
      [&](nlohmann::ordered_json& data) {
        const bool fu = kernel_forces_sum_zero(cert.u);
        const bool fv = kernel_forces_sum_zero(cert.v);
        data["u_forces"] = fu;
        data["v_forces"] = fv;
        // Any split middle term with S(-m)^alpha on the left must balance.
        const ExtensionShape split{m, 1, 1, 1, 1, 1, 1, 0};
        data["split_shape_rho"] = analyze_extension_shape(split).rho;
        return fu && fv;
      }));

  return cert;
}

}  // namespace qfrob

#include "qfrob/catalog.hpp"
#include "qfrob/certificate.hpp"
#include "qfrob/error.hpp"
#include "qfrob/hilbert.hpp"
#include "qfrob/hom.hpp"
#include "qfrob/json.hpp"
#include "qfrob/matfac.hpp"
#include "qfrob/pushforward.hpp"
#include "qfrob/support.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using qfrob::ErrorKind;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

struct RunConfig {
  std::uint32_t p = 3;
  int m = 2;
  int e = 1;
  int e_max = 0;
  int twist = 0;
  int degree = 0;
  int from = -2;
  int to = 4;
  std::string sheaf = "O";
  std::string src;
  std::string tgt;
  std::string format = "json";
  std::string output;
  bool check_involution = false;
};

// Writes via a sibling temporary file and rename, so readers never see a partial file.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(cfg.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) qfrob::fail(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) qfrob::fail(ErrorKind::InvalidArgument, "write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

void require_odd_prime(std::uint32_t p) {
  if (p == 2) qfrob::fail(ErrorKind::Unsupported, "characteristic 2 is not supported");
  qfrob::PrimeField check(p);
}

std::string matrix_table(const qfrob::PolyMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << a.at(i, j).to_string();
    out << "]\n";
  }
  return out.str();
}

int cmd_mf(const RunConfig& cfg) {
  require_odd_prime(cfg.p);
  const qfrob::PrimeField field(cfg.p);
  const qfrob::PhiPsi pair = qfrob::build_phi_psi(field, cfg.m);
  const bool verified = qfrob::verify_factorization(pair.phi) && qfrob::verify_factorization(pair.psi);
  json j;
  j["p"] = cfg.p;
  j["m"] = cfg.m;
  j["n"] = 2 * cfg.m;
  j["size"] = pair.phi.size();
  j["phi"] = qfrob::to_json(pair.phi);
  j["A"] = qfrob::matrix_strings(pair.phi.a());
  j["B"] = qfrob::matrix_strings(pair.phi.b());
  j["verified"] = verified;
  bool distinct = true;
  if (cfg.check_involution) {
    const auto swapped =
        qfrob::find_base_change_witness(qfrob::apply_involution(pair.phi, qfrob::Involution(cfg.m)), pair.psi);
    const auto reflected = qfrob::find_base_change_witness(
        qfrob::apply_involution(pair.phi, qfrob::Involution::reflection(cfg.m)), pair.psi);
    const auto direct = qfrob::find_base_change_witness(pair.phi, pair.psi);
    j["involution_witness"] = swapped.has_value();
    if (swapped) j["witness"] = {{"P", qfrob::to_json(swapped->p)}, {"Q", qfrob::to_json(swapped->q)}};
    j["reflection_witness"] = reflected.has_value();
    j["phi_psi_witness"] = direct.has_value();
    distinct = !direct.has_value();
  }
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "m = " << cfg.m << " (n = " << 2 * cfg.m << "), p = " << cfg.p << ", size " << pair.phi.size() << "\n";
    out << "phi_" << cfg.m << ":\n" << matrix_table(pair.phi.a());
    out << "psi_" << cfg.m << ":\n" << matrix_table(pair.phi.b());
    out << "verified: " << (verified ? "true" : "false") << "\n";
    if (cfg.check_involution) {
      out << "involution witness: " << (j["involution_witness"].get<bool>() ? "found" : "none") << "\n";
      out << "reflection witness: " << (j["reflection_witness"].get<bool>() ? "found" : "none") << "\n";
      out << "phi/psi witness: " << (j["phi_psi_witness"].get<bool>() ? "found" : "none") << "\n";
    }
    emit(cfg, out.str());
  } else {
    emit_json(cfg, j);
  }
  return verified && distinct ? kExitOk : kExitFailure;
}

std::string multiset_table(const qfrob::SummandMultiset& ms) {
  std::ostringstream out;
  auto part = [&](const char* kind, const std::map<int, qfrob::BigInt>& xs) {
    for (const auto& [t, n] : xs) out << "  " << kind << "(" << t << ")  x " << n.str() << "\n";
  };
  part("O", ms.line);
  part("S+", ms.spinor_plus);
  part("S-", ms.spinor_minus);
  part("Sigma", ms.unresolved_spinor);
  out << "  rank " << ms.rank_total().str() << " (expected " << ms.rank_expected().str() << ")\n";
  return out.str();
}

int cmd_decompose(const RunConfig& cfg) {
  const qfrob::SheafSymbol sym{qfrob::parse_kind(cfg.sheaf), cfg.twist, cfg.m};
  const qfrob::SummandMultiset ms = qfrob::decompose(sym, cfg.e, cfg.p);
  const bool agrees = cfg.e >= 1 ? qfrob::oracle_agrees(ms) : true;
  json j = qfrob::to_json(ms);
  j["n"] = 2 * cfg.m;
  j["oracle_agrees"] = agrees;
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "F^" << cfg.e << "_* " << qfrob::to_string(sym) << " on Q_" << 2 * cfg.m << ", p = " << cfg.p << "\n"
        << multiset_table(ms) << "oracle_agrees: " << (agrees ? "true" : "false") << "\n";
    emit(cfg, out.str());
  } else {
    emit_json(cfg, j);
  }
  return kExitOk;
}

int cmd_hom_ext(const RunConfig& cfg, int i) {
  require_odd_prime(cfg.p);
  const qfrob::PrimeField field(cfg.p);
  const qfrob::SheafSymbol src = qfrob::parse_symbol(cfg.src, cfg.m);
  const qfrob::SheafSymbol tgt = qfrob::parse_symbol(cfg.tgt, cfg.m);
  const std::size_t dim = qfrob::computed_hom_ext(field, src, tgt, i);
  const auto ref = qfrob::reference_hom_ext(src, tgt, i);
  json j;
  j["p"] = cfg.p;
  j["m"] = cfg.m;
  j["n"] = 2 * cfg.m;
  j["i"] = i;
  j["src"] = qfrob::to_string(src);
  j["tgt"] = qfrob::to_string(tgt);
  j["dim"] = dim;
  j["reference"] = ref ? json(*ref) : json(nullptr);
  if (cfg.format == "table") {
    std::ostringstream out;
    out << (i == 0 ? "Hom" : "Ext^1") << "(" << j["src"].get<std::string>() << ", " << j["tgt"].get<std::string>()
        << ") = " << dim;
    if (ref) out << "  (reference " << *ref << ")";
    out << "\n";
    emit(cfg, out.str());
  } else {
    emit_json(cfg, j);
  }
  return ref && static_cast<std::size_t>(*ref) != dim ? kExitFailure : kExitOk;
}

int cmd_hilbert(const RunConfig& cfg) {
  const qfrob::SheafSymbol sym{qfrob::parse_kind(cfg.sheaf), cfg.twist, cfg.m};
  if (cfg.from > cfg.to) qfrob::fail(ErrorKind::InvalidArgument, "--from exceeds --to");
  json values = json::array();
  std::ostringstream table;
  table << "d  h0(F^" << cfg.e << "_* " << qfrob::to_string(sym) << "(d))\n";
  for (int d = cfg.from; d <= cfg.to; ++d) {
    const qfrob::BigInt v = cfg.e == 0 ? qfrob::h0(sym, d) : qfrob::pushforward_hilbert(sym, cfg.e, cfg.p, d);
    values.push_back({{"d", d}, {"h0", qfrob::big_to_json(v)}});
    table << d << "  " << v.str() << "\n";
  }
  json j;
  j["source"] = qfrob::to_json(sym);
  j["p"] = cfg.p;
  j["m"] = cfg.m;
  j["n"] = 2 * cfg.m;
  j["e"] = cfg.e;
  j["values"] = std::move(values);
  if (cfg.format == "table")
    emit(cfg, table.str());
  else
    emit_json(cfg, j);
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg) {
  const qfrob::Certificate cert = qfrob::certify_non_d_affine(cfg.p, cfg.m, cfg.e_max);
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "p = " << cert.p << ", m = " << cert.m << " (n = " << 2 * cert.m << "), e in [" << cert.e0 << ", "
        << cert.e_max << "]\n";
    for (const auto& pr : cert.premises)
      out << "  " << (pr.passed ? "passed " : "failed ") << pr.name << "  " << pr.data.dump() << "\n";
    out << "  paper-supplied colimit\n";
    out << "u = " << to_json(cert)["u"].dump() << "\nv = " << to_json(cert)["v"].dump() << "\n";
    out << "verdict: " << cert.verdict() << "\n";
    emit(cfg, out.str());
  } else {
    emit_json(cfg, to_json(cert));
  }
  return cert.certified() ? kExitOk : kExitFailure;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Unsupported: return kExitUsage;
    default: return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with spinor bundles and Frobenius pushforwards on even-dimensional quadrics"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  };

  auto* mf = app.add_subcommand("mf", "build phi_m, psi_m and verify the factorization");
  mf->add_option("--m", cfg.m, "quadric index (dimension n = 2m)")->required()->check(CLI::Range(0, 7));
  mf->add_option("--p", cfg.p, "characteristic")->required();
  mf->add_flag("--check-involution", cfg.check_involution, "search the coordinate-swap witness");
  common(mf);

  auto* dec = app.add_subcommand("decompose", "decompose F^e_* of a bundle");
  dec->add_option("--p", cfg.p)->required();
  dec->add_option("--m", cfg.m)->required();
  dec->add_option("--e", cfg.e)->required()->check(CLI::NonNegativeNumber);
  dec->add_option("--sheaf", cfg.sheaf, "O, S, S+ or S-")->required();
  dec->add_option("--twist", cfg.twist)->required();
  common(dec);

  auto* hom = app.add_subcommand("hom", "dim Hom(src, tgt) in degree 0");
  auto* ext = app.add_subcommand("ext", "dim Ext^1(src, tgt) in degree 0");
  for (auto* sub : {hom, ext}) {
    sub->add_option("--p", cfg.p)->required();
    sub->add_option("--m", cfg.m)->required();
    sub->add_option("--src", cfg.src, "e.g. S+(0)")->required();
    sub->add_option("--tgt", cfg.tgt, "e.g. S-(-1)")->required();
    common(sub);
  }

  auto* cert = app.add_subcommand("certify", "run the certification pipeline");
  cert->add_option("--p", cfg.p)->required();
  cert->add_option("--m", cfg.m)->required();
  cert->add_option("--e-max", cfg.e_max)->required();
  common(cert);

  auto* hilb = app.add_subcommand("hilbert", "h0 of F^e_* of a bundle in a degree range");
  hilb->add_option("--p", cfg.p);
  hilb->add_option("--m", cfg.m)->required();
  hilb->add_option("--e", cfg.e, "0 for the bundle itself")->check(CLI::NonNegativeNumber);
  hilb->add_option("--sheaf", cfg.sheaf)->required();
  hilb->add_option("--twist", cfg.twist)->required();
  hilb->add_option("--from", cfg.from);
  hilb->add_option("--to", cfg.to);
  common(hilb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mf) return cmd_mf(cfg);
    if (*dec) return cmd_decompose(cfg);
    if (*hom) return cmd_hom_ext(cfg, 0);
    if (*ext) return cmd_hom_ext(cfg, 1);
    if (*cert) return cmd_certify(cfg);
    if (*hilb) return cmd_hilbert(cfg);
  } catch (const qfrob::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

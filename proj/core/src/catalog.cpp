#include "qfrob/catalog.hpp"

#include "qfrob/error.hpp"
#include "qfrob/hilbert.hpp"

#include <nlohmann/json.hpp>

#include <charconv>

namespace qfrob {

SheafSymbol line(int m, int t) { return {SheafKind::Line, t, m}; }
SheafSymbol spinor_plus(int m, int t) { return {SheafKind::SpinorPlus, t, m}; }
SheafSymbol spinor_minus(int m, int t) { return {SheafKind::SpinorMinus, t, m}; }
SheafSymbol spinor_sum(int m, int t) { return {SheafKind::SpinorSum, t, m}; }

bool is_single_spinor(SheafKind kind) noexcept {
  return kind == SheafKind::SpinorPlus || kind == SheafKind::SpinorMinus;
}

std::uint64_t rank(const SheafSymbol& sym) {
  if (sym.m < 0 || sym.m > 62) fail(ErrorKind::InvalidArgument, "quadric index out of range");
  switch (sym.kind) {
    case SheafKind::Line: return 1;
    case SheafKind::SpinorPlus:
    case SheafKind::SpinorMinus: return sym.m == 0 ? 1 : std::uint64_t{1} << (sym.m - 1);
    case SheafKind::SpinorSum: return std::uint64_t{1} << sym.m;
  }
  return 0;
}

BigInt h0(const SheafSymbol& sym, std::int64_t d) {
  const std::int64_t k = sym.twist + d;
  switch (sym.kind) {
    case SheafKind::Line: return h0_line(sym.m, k);
    case SheafKind::SpinorPlus:
    case SheafKind::SpinorMinus: return h0_spinor(sym.m, k);
    case SheafKind::SpinorSum: return 2 * h0_spinor(sym.m, k);
  }
  return 0;
}

std::optional<int> reference_hom_ext(const SheafSymbol& src, const SheafSymbol& tgt, int i) {
  if (src.m != tgt.m) return std::nullopt;
  const int t = tgt.twist - src.twist;
  if (src.kind == SheafKind::SpinorSum && tgt.kind == SheafKind::SpinorSum) {
    if (i == 1) return t == -1 ? 2 : 0;
    return std::nullopt;
  }
  if (!is_single_spinor(src.kind) || !is_single_spinor(tgt.kind)) return std::nullopt;
  const bool same = src.kind == tgt.kind;
  if (i == 0) {
    if (t < 0) return 0;
    if (t == 0) return same ? 1 : 0;
    return std::nullopt;
  }
  if (i == 1 && t == -1) return same ? 0 : 1;
  return std::nullopt;
}

SheafSymbol dual_symbol(const SheafSymbol& sym) {
  SheafSymbol out = sym;
  if (sym.kind == SheafKind::Line) {
    out.twist = -sym.twist;
    return out;
  }
  out.twist = 1 - sym.twist;
  if (sym.m % 2 == 1) {
    if (sym.kind == SheafKind::SpinorPlus) out.kind = SheafKind::SpinorMinus;
    else if (sym.kind == SheafKind::SpinorMinus) out.kind = SheafKind::SpinorPlus;
  }
  return out;
}

std::string_view kind_name(SheafKind kind) noexcept {
  switch (kind) {
    case SheafKind::Line: return "O";
    case SheafKind::SpinorPlus: return "S+";
    case SheafKind::SpinorMinus: return "S-";
    case SheafKind::SpinorSum: return "S";
  }
  return "?";
}

SheafKind parse_kind(std::string_view name) {
  if (name == "O") return SheafKind::Line;
  if (name == "S+") return SheafKind::SpinorPlus;
  if (name == "S-") return SheafKind::SpinorMinus;
  if (name == "S") return SheafKind::SpinorSum;
  fail(ErrorKind::InvalidArgument, "unknown sheaf kind '" + std::string(name) + "'");
}

std::string to_string(const SheafSymbol& sym) {
  return std::string(kind_name(sym.kind)) + "(" + std::to_string(sym.twist) + ")";
}

SheafSymbol parse_symbol(std::string_view text, int m) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    fail(ErrorKind::InvalidArgument, "expected KIND(twist), got '" + std::string(text) + "'");
  const auto inner = text.substr(open + 1, text.size() - open - 2);
  int t = 0;
  const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), t);
  if (ec != std::errc() || ptr != inner.data() + inner.size())
    fail(ErrorKind::InvalidArgument, "bad twist in '" + std::string(text) + "'");
  return {parse_kind(text.substr(0, open)), t, m};
}

nlohmann::ordered_json to_json(const SheafSymbol& sym) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(sym.kind);
  j["twist"] = sym.twist;
  return j;
}

SheafSymbol symbol_from_json(const nlohmann::ordered_json& j, int m) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("twist"))
    fail(ErrorKind::InvalidArgument, "sheaf symbol needs kind and twist");
  return {parse_kind(j.at("kind").get<std::string>()), j.at("twist").get<int>(), m};
}

}  // namespace qfrob

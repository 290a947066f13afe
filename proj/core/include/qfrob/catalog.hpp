#pragma once

#include "qfrob/bigint.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qfrob {

enum class SheafKind { Line, SpinorPlus, SpinorMinus, SpinorSum };

/// O(t), S+(t), S-(t) or S(t) = S+(t) + S-(t) on the quadric of dimension 2m.
struct SheafSymbol {
  SheafKind kind = SheafKind::Line;
  int twist = 0;
  int m = 2;

  friend bool operator==(const SheafSymbol&, const SheafSymbol&) = default;
};

SheafSymbol line(int m, int t);
SheafSymbol spinor_plus(int m, int t);
SheafSymbol spinor_minus(int m, int t);
SheafSymbol spinor_sum(int m, int t);

bool is_single_spinor(SheafKind kind) noexcept;

std::uint64_t rank(const SheafSymbol& sym);

/// h0 of sym twisted further by d.
BigInt h0(const SheafSymbol& sym, std::int64_t d);

/// Tabulated Hom (i = 0) and Ext^1 (i = 1) dimensions between spinor bundles;
/// nullopt outside the table.
std::optional<int> reference_hom_ext(const SheafSymbol& src, const SheafSymbol& tgt, int i);

SheafSymbol dual_symbol(const SheafSymbol& sym);

/// "O", "S+", "S-" or "S".
std::string_view kind_name(SheafKind kind) noexcept;
SheafKind parse_kind(std::string_view name);

/// "O(-2)", "S+(0)", ...
std::string to_string(const SheafSymbol& sym);
/// Parses the to_string form for a given m; throws InvalidArgument on bad input.
SheafSymbol parse_symbol(std::string_view text, int m);

/// {"kind": "O"|"S+"|"S-"|"S", "twist": t}
nlohmann::ordered_json to_json(const SheafSymbol& sym);
SheafSymbol symbol_from_json(const nlohmann::ordered_json& j, int m);

}  // namespace qfrob

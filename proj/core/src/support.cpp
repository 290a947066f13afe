#include "qfrob/support.hpp"

#include "qfrob/bigint.hpp"
#include "qfrob/error.hpp"
#include "qfrob/field.hpp"

#include <string>

namespace qfrob {
namespace {

struct Powers {
  BigInt pe;   // p^e
  BigInt pe1;  // p^(e-1)
};

Powers check(std::uint32_t p, int m, int e) {
  if (p == 2) fail(ErrorKind::Unsupported, "characteristic 2 is not supported");
  if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "p=" + std::to_string(p) + " is not an odd prime");
  if (m < 2) fail(ErrorKind::Unsupported, "m=" + std::to_string(m) + " is not supported (need m >= 2)");
  if (e < 1) fail(ErrorKind::InvalidArgument, "Frobenius exponent must be at least 1");
  return {ipow(p, static_cast<unsigned>(e)), ipow(p, static_cast<unsigned>(e - 1))};
}

}  // namespace

bool line_in_pushforward_O(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t) {
  const auto [pe, pe1] = check(p, m, e);
  const BigInt v = j + pe * t;
  return 0 <= v && v <= 2 * m * (pe - 1);
}

bool spinor_in_pushforward_O(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t) {
  const auto [pe, pe1] = check(p, m, e);
  const BigInt v = j + t * pe;
  return BigInt(m - 1) * (p - 1) * pe1 <= v && v <= m * pe + (m - 1) * pe1 - 2 * m;
}

bool line_in_pushforward_S(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t) {
  const auto [pe, pe1] = check(p, m, e);
  const BigInt v = j + pe * t;
  return 1 <= v && v <= 2 * m * (pe - 1);
}

bool spinor_in_pushforward_S(std::uint32_t p, int m, int e, std::int64_t j, std::int64_t t) {
  const auto [pe, pe1] = check(p, m, e);
  const int delta = e == 1 ? 1 : 0;
  const BigInt v = j + t * pe;
  return BigInt(m - 1) * (p - 1) * pe1 + 1 - delta <= v && v <= m * pe + (m - 1) * pe1 - 2 * m + delta;
}

SupportPrediction predict_support(const SheafSymbol& source, std::uint32_t p, int e) {
  const auto [pe, pe1] = check(p, source.m, e);
  SupportPrediction out{source, p, e, {}, {}};
  const bool from_line = source.kind == SheafKind::Line;
  const std::int64_t j = source.twist;
  // Every predicate forces 0 <= j + t p^e <= 2m p^e, so t lies in a short range.
  const std::int64_t pe_small = static_cast<std::int64_t>(pe);
  const std::int64_t lo = floor_div(-j, pe_small) - 1;
  const std::int64_t hi = floor_div(2 * source.m * pe_small - j, pe_small) + 1;
  for (std::int64_t t = lo; t <= hi; ++t) {
    const bool l = from_line ? line_in_pushforward_O(p, source.m, e, j, t) : line_in_pushforward_S(p, source.m, e, j, t);
    const bool s =
        from_line ? spinor_in_pushforward_O(p, source.m, e, j, t) : spinor_in_pushforward_S(p, source.m, e, j, t);
    if (l) out.line_twists.insert(t);
    if (s) out.spinor_twists.insert(t);
  }
  return out;
}

int lemma42_threshold(std::uint32_t p, int m) {
  check(p, m, 1);
  for (int e = 1;; ++e)
    if (ipow(p, static_cast<unsigned>(e - 1)) * (m - 1) >= 2 * m) return e;
}

}  // namespace qfrob

#include "qfrob/graded_algebra.hpp"

#include <algorithm>

namespace qfrob {
namespace {

void enumerate(int var, int n_vars, int remaining, int cap, Exponents& cur,
               std::vector<Exponents>& out) {
  if (var == n_vars - 1) {
    if (remaining <= cap) {
      cur[var] = static_cast<std::uint16_t>(remaining);
      out.push_back(cur);
      cur[var] = 0;
    }
    return;
  }
  for (int a = std::min(remaining, cap); a >= 0; --a) {
    cur[var] = static_cast<std::uint16_t>(a);
    enumerate(var + 1, n_vars, remaining - a, cap, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

const WeightBuckets& GradedAlgebra::basis(int degree) {
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  WeightBuckets buckets;
  if (degree >= 0) {
    std::vector<Exponents> all;
    Exponents cur{};
    const int cap = std::min(degree, max_exponent());
    enumerate(0, ring_.n_vars(), degree, cap, cur, all);
    for (const auto& e : all)
      if (in_basis(e)) buckets[ring_.weight(e)].push_back(e);
  }
  return cache_.emplace(degree, std::move(buckets)).first->second;
}

const std::vector<Exponents>& GradedAlgebra::basis(int degree, const Weight& w) {
  static const std::vector<Exponents> empty;
  const auto& b = basis(degree);
  const auto it = b.find(w);
  return it == b.end() ? empty : it->second;
}

const TermList& QuadricAlgebra::tail_power(int k) {
  auto it = tail_powers_.find(k);
  if (it != tail_powers_.end()) return it->second;
  const auto& r = ring();
  MultiPoly tail = r.zero();
  for (int i = 1; i <= r.m(); ++i) tail -= r.var(2 * i + 1) * r.var(2 * i + 2);
  MultiPoly power = r.one();
  for (int i = 0; i < k; ++i) power = power * tail;
  TermList terms(power.terms().begin(), power.terms().end());
  return tail_powers_.emplace(k, std::move(terms)).first->second;
}

void QuadricAlgebra::multiply(const Exponents& basis_monomial, const Exponents& term, Coeff c,
                              TermList& out) {
  if (c == 0) return;
  Exponents e = exps_mul(basis_monomial, term);
  if (ring().is_normal(e)) {
    out.emplace_back(e, c);
    return;
  }
  const std::uint16_t k = std::min(e[0], e[1]);
  e[0] = static_cast<std::uint16_t>(e[0] - k);
  e[1] = static_cast<std::uint16_t>(e[1] - k);
  const auto& field = ring().field();
  for (const auto& [t, tc] : tail_power(k)) out.emplace_back(exps_mul(e, t), field.mul(tc, c));
}

int QuadricAlgebra::max_exponent() const noexcept { return 1 << 15; }

bool TruncatedAlgebra::in_basis(const Exponents& e) const noexcept {
  for (int i = 0; i < ring().n_vars(); ++i)
    if (e[i] >= power_) return false;
  return true;
}

int TruncatedAlgebra::max_exponent() const noexcept { return static_cast<int>(power_) - 1; }

void TruncatedAlgebra::multiply(const Exponents& basis_monomial, const Exponents& term, Coeff c,
                                TermList& out) {
  if (c == 0) return;
  const Exponents e = exps_mul(basis_monomial, term);
  if (in_basis(e)) out.emplace_back(e, c);
}

}  // namespace qfrob

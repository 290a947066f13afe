#include "qfrob/quadric_ring.hpp"

#include "qfrob/error.hpp"

#include <string>

namespace qfrob {

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 14695981039346656037ull;
  for (auto v : w) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

Weight weight_add(const Weight& a, const Weight& b) noexcept {
  Weight r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) noexcept {
  Weight r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight weight_scale(const Weight& a, std::int32_t k) noexcept {
  Weight r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] * k;
  return r;
}

QuadricRing::QuadricRing(PrimeField field, int m) : field_(field), m_(m) {
  if (m < 0 || m > kMaxQuadricIndex)
    fail(ErrorKind::InvalidArgument,
         "quadric index m=" + std::to_string(m) + " outside [0, " + std::to_string(kMaxQuadricIndex) + "]");
}

void QuadricRing::require_bundle_range() const {
  if (m_ < 2) fail(ErrorKind::Unsupported, "m=" + std::to_string(m_) + " is not supported (need m >= 2)");
}

MultiPoly QuadricRing::quadric() const { return quadric_form(field_, m_); }

Weight QuadricRing::weight(const Exponents& e) const noexcept {
  Weight w{};
  for (int i = 0; i <= m_; ++i) w[i] = static_cast<std::int32_t>(e[2 * i]) - e[2 * i + 1];
  return w;
}

MultiPoly QuadricRing::normal_form(const MultiPoly& f) const {
  if (f.n_vars() != n_vars()) fail(ErrorKind::InvalidArgument, "polynomial has the wrong variable count");
  // x1 x2 == -(x3 x4 + ... + x_{2m+1} x_{2m+2})
  MultiPoly tail = zero();
  for (int i = 1; i <= m_; ++i) tail -= var(2 * i + 1) * var(2 * i + 2);

  MultiPoly out = zero();
  MultiPoly pending = f;
  while (!pending.is_zero()) {
    MultiPoly next = zero();
    for (const auto& [e, c] : pending.terms()) {
      if (is_normal(e)) {
        out.add_term(e, c);
        continue;
      }
      const std::uint16_t k = std::min(e[0], e[1]);
      Exponents rest = e;
      rest[0] = static_cast<std::uint16_t>(rest[0] - k);
      rest[1] = static_cast<std::uint16_t>(rest[1] - k);
      MultiPoly power = one();
      for (int i = 0; i < k; ++i) power = power * tail;
      next += power * MultiPoly::monomial(field_, n_vars(), rest, c);
    }
    pending = std::move(next);
  }
  return out;
}

MultiPoly quadric_form(const PrimeField& field, int m) {
  if (m < 0 || m > kMaxQuadricIndex) fail(ErrorKind::InvalidArgument, "quadric index out of range");
  const int n = 2 * m + 2;
  MultiPoly q(field, n);
  for (int i = 0; i <= m; ++i) {
    Exponents e{};
    e[2 * i] = 1;
    e[2 * i + 1] = 1;
    q.add_term(e, 1);
  }
  return q;
}

}  // namespace qfrob

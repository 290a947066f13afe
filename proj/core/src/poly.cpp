#include "qfrob/poly.hpp"

#include "qfrob/error.hpp"

#include <sstream>

namespace qfrob {

int total_degree(const Exponents& e) noexcept {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

Exponents exps_mul(const Exponents& a, const Exponents& b) noexcept {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool DegRevLexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

MultiPoly::MultiPoly(PrimeField field, int n_vars) : field_(field), n_vars_(n_vars) {
  if (n_vars < 0 || n_vars > static_cast<int>(kMaxVars))
    fail(ErrorKind::InvalidArgument, "variable count out of range: " + std::to_string(n_vars));
}

MultiPoly MultiPoly::constant(PrimeField field, int n_vars, std::int64_t c) {
  MultiPoly r(field, n_vars);
  r.add_term(Exponents{}, field.reduce(c));
  return r;
}

MultiPoly MultiPoly::variable(PrimeField field, int n_vars, int index) {
  if (index < 1 || index > n_vars)
    fail(ErrorKind::InvalidArgument, "variable index out of range: " + std::to_string(index));
  Exponents e{};
  e[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(field, n_vars, e);
}

MultiPoly MultiPoly::monomial(PrimeField field, int n_vars, const Exponents& e, Coeff c) {
  MultiPoly r(field, n_vars);
  r.add_term(e, c);
  return r;
}

int MultiPoly::degree() const noexcept {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Coeff MultiPoly::coefficient(const Exponents& e) const noexcept {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponents& e, Coeff c) {
  for (std::size_t i = static_cast<std::size_t>(n_vars_); i < kMaxVars; ++i)
    if (e[i] != 0) fail(ErrorKind::InvalidArgument, "exponent outside the variable range");
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (n_vars_ != o.n_vars_) fail(ErrorKind::InvalidArgument, "mismatched variable counts");
  if (!(field_ == o.field_)) fail(ErrorKind::InvalidArgument, "mismatched coefficient fields");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, n_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
  return *this;
}

MultiPoly MultiPoly::scaled(Coeff c) const {
  MultiPoly r(field_, n_vars_);
  for (const auto& [e, v] : terms_) r.add_term(e, field_.mul(v, c % field_.p()));
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(exps_mul(ea, eb), a.field_.mul(ca, cb));
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.n_vars_ == b.n_vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_vars_))
    fail(ErrorKind::InvalidArgument, "permutation size does not match variable count");
  MultiPoly r(field_, n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f{};
    for (int i = 0; i < n_vars_; ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::frobenius(std::uint32_t power) const {
  MultiPoly r(field_, n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f{};
    for (int i = 0; i < n_vars_; ++i) f[i] = static_cast<std::uint16_t>(e[i] * power);
    r.add_term(f, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t v = field_.centered(c);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t mag = v < 0 ? -v : v;
    bool any_var = false;
    std::ostringstream vars;
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << '*';
      vars << 'x' << (i + 1);
      if (e[i] > 1) vars << '^' << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << vars.str();
    }
  }
  return os.str();
}

}  // namespace qfrob

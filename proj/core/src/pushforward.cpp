#include "qfrob/pushforward.hpp"

#include "module_view.hpp"
#include "qfrob/error.hpp"
#include "qfrob/exact_solve.hpp"
#include "qfrob/hilbert.hpp"
#include "qfrob/hom.hpp"
#include "qfrob/json.hpp"
#include "qfrob/parallel.hpp"
#include "qfrob/presentation.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <variant>

namespace qfrob {
namespace {

void check_range(const SheafSymbol& sym, std::uint32_t p) {
  if (p == 2) fail(ErrorKind::Unsupported, "characteristic 2 is not supported");
  const PrimeField field(p);
  QuadricRing(field, sym.m).require_bundle_range();
}

std::int64_t frobenius_power(std::uint32_t p, int e) {
  const BigInt q = ipow(p, static_cast<unsigned>(e));
  if (q > BigInt(1) << 40) fail(ErrorKind::Unsupported, "Frobenius power p^e is too large");
  return static_cast<std::int64_t>(q);
}

void add_to(std::map<int, BigInt>& target, int twist, const BigInt& n) {
  if (n == 0) return;
  target[twist] += n;
}

/// One column of the e = 1 solve: a line O(-t) or a single spinor Sigma(-t).
struct Candidate {
  bool spinor;
  std::int64_t t;
};

std::pair<std::int64_t, std::int64_t> hull(const std::set<std::int64_t>& s) { return {*s.begin(), *s.rbegin()}; }

SummandMultiset decompose_once(const SheafSymbol& sym, std::uint32_t p) {
  const int m = sym.m;
  const SupportPrediction pred = predict_support(sym, p, 1);
  if (pred.line_twists.empty() && pred.spinor_twists.empty())
    fail(ErrorKind::Degenerate, "empty predicted support for " + to_string(sym));
  const auto line_hull = pred.line_twists.empty() ? hull(pred.spinor_twists) : hull(pred.line_twists);
  const auto spinor_hull = pred.spinor_twists.empty() ? line_hull : hull(pred.spinor_twists);

  std::vector<Candidate> cols;
  for (std::int64_t t = line_hull.first - 1; t <= line_hull.second + 1; ++t) cols.push_back({false, t});
  for (std::int64_t t = spinor_hull.first - 1; t <= spinor_hull.second + 1; ++t) cols.push_back({true, t});

  const std::int64_t t_min = std::min(line_hull.first, spinor_hull.first) - 1;
  const std::int64_t t_max = std::max(line_hull.second, spinor_hull.second) + 1;
  const std::int64_t d_lo = t_min - 1;
  const std::int64_t span = t_max + 2 - d_lo;
  const std::int64_t depth = std::max<std::int64_t>(static_cast<std::int64_t>(cols.size()) + 4, span);

  const BigInt spinor_gens = ipow(2, static_cast<unsigned>(m));
  std::vector<std::vector<BigInt>> matrix;
  std::vector<BigInt> rhs;
  for (std::int64_t d = d_lo; d <= d_lo + depth; ++d) {
    std::vector<BigInt> hrow;
    std::vector<BigInt> grow;
    for (const auto& c : cols) {
      hrow.push_back(c.spinor ? h0_spinor(m, d - c.t) : h0_line(m, d - c.t));
      grow.push_back(c.spinor ? (d == c.t + 1 ? spinor_gens : BigInt(0)) : BigInt(d == c.t ? 1 : 0));
    }
    matrix.push_back(std::move(hrow));
    rhs.push_back(pushforward_hilbert(sym, 1, p, d));
    matrix.push_back(std::move(grow));
    rhs.push_back(pushforward_generator_count(sym, p, d));
  }

  const SolveResult res = solve_exact(IntLinearSystem(std::move(matrix), std::move(rhs)));
  if (const auto* u = std::get_if<Underdetermined>(&res))
    fail(ErrorKind::Degenerate, "candidate columns for F_*" + to_string(sym) + " have rank " +
                                    std::to_string(u->rank) + " < " + std::to_string(cols.size()));
  if (std::holds_alternative<NoSolution>(res))
    fail(ErrorKind::Degenerate, "no integral multiplicities reproduce the data of F_*" + to_string(sym));
  const auto& x = std::get<UniqueSolution>(res).values;

  SummandMultiset out;
  out.source = sym;
  out.p = p;
  out.e = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (x[i] < 0) fail(ErrorKind::Degenerate, "negative multiplicity in F_*" + to_string(sym));
    if (x[i] == 0) continue;
    const int twist = static_cast<int>(-cols[i].t);
    if (!cols[i].spinor) {
      add_to(out.line, twist, x[i]);
    } else if (is_single_spinor(sym.kind)) {
      add_to(out.unresolved_spinor, twist, x[i]);
    } else {
      if (x[i] % 2 != 0) fail(ErrorKind::Inconsistent, "odd spinor count in F_*" + to_string(sym));
      add_to(out.spinor_plus, twist, x[i] / 2);
      add_to(out.spinor_minus, twist, x[i] / 2);
    }
  }
  return out;
}

/// F_* of E(j) from the cached F_* E(r), r = j mod p, shifted by (j - r) / p.
class OnceCache {
 public:
  OnceCache(int m, std::uint32_t p) : m_(m), p_(p) {}

  SummandMultiset get(SheafKind kind, int j) {
    const std::int64_t r = j - static_cast<std::int64_t>(p_) * floor_div(j, p_);
    const int shift = static_cast<int>(floor_div(j - r, p_));
    const auto key = std::make_pair(kind, static_cast<int>(r));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, decompose_once({kind, static_cast<int>(r), m_}, p_)).first;
    SummandMultiset out = it->second;
    out.source.twist = j;
    auto shifted = [shift](const std::map<int, BigInt>& in) {
      std::map<int, BigInt> o;
      for (const auto& [t, n] : in) o[t + shift] = n;
      return o;
    };
    out.line = shifted(out.line);
    out.spinor_plus = shifted(out.spinor_plus);
    out.spinor_minus = shifted(out.spinor_minus);
    out.unresolved_spinor = shifted(out.unresolved_spinor);
    return out;
  }

 private:
  int m_;
  std::uint32_t p_;
  std::map<std::pair<SheafKind, int>, SummandMultiset> cache_;
};

void accumulate(SummandMultiset& into, const SummandMultiset& part, const BigInt& times) {
  for (const auto& [t, n] : part.line) add_to(into.line, t, n * times);
  for (const auto& [t, n] : part.spinor_plus) add_to(into.spinor_plus, t, n * times);
  for (const auto& [t, n] : part.spinor_minus) add_to(into.spinor_minus, t, n * times);
  for (const auto& [t, n] : part.unresolved_spinor) add_to(into.unresolved_spinor, t, n * times);
}

void validate(const SummandMultiset& ms) {
  if (ms.rank_total() != ms.rank_expected())
    fail(ErrorKind::Inconsistent, "rank " + ms.rank_total().str() + " of F^e_*" + to_string(ms.source) +
                                      " differs from " + ms.rank_expected().str());
  int deepest = 0;
  for (const auto* part : {&ms.line, &ms.spinor_plus, &ms.spinor_minus, &ms.unresolved_spinor})
    for (const auto& [t, n] : *part) deepest = std::max(deepest, -t);
  for (std::int64_t d = -1; d <= deepest + 2 * ms.m() + 2; ++d)
    if (ms.hilbert(d) != pushforward_hilbert(ms.source, ms.e, ms.p, d))
      fail(ErrorKind::Inconsistent, "Hilbert function of the decomposition of F^e_*" + to_string(ms.source) +
                                        " differs at d=" + std::to_string(d));
}

nlohmann::ordered_json mult_list(const std::map<int, BigInt>& part) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [t, n] : part) arr.push_back({{"twist", t}, {"mult", big_to_json(n)}});
  return arr;
}

}  // namespace

BigInt pushforward_hilbert(const SheafSymbol& sym, int e, std::uint32_t p, std::int64_t d) {
  if (e < 0) fail(ErrorKind::InvalidArgument, "Frobenius exponent must be nonnegative");
  return h0(sym, frobenius_power(p, e) * d);
}

BigInt pushforward_generator_count(const SheafSymbol& sym, std::uint32_t p, std::int64_t d) {
  check_range(sym, p);
  if (sym.kind == SheafKind::SpinorSum)
    return pushforward_generator_count({SheafKind::SpinorPlus, sym.twist, sym.m}, p, d) +
           pushforward_generator_count({SheafKind::SpinorMinus, sym.twist, sym.m}, p, d);
  const PrimeField field(p);
  const QuadricRing ring(field, sym.m);
  std::vector<int> gens;
  std::vector<int> rels;
  PolyMatrix rel(field, ring.n_vars(), 0, 0);
  if (sym.kind == SheafKind::Line) {
    // Over the polynomial ring the quadric itself is the relation.
    gens = {-sym.twist};
    rels = {2 - sym.twist};
    rel = PolyMatrix::scalar(ring.quadric(), 1);
  } else {
    // The quadric already kills coker(A) since A B = q I.
    const MatrixFactorization mf = factorization_of(field, sym);
    gens = mf.row_degrees();
    rels = mf.col_degrees();
    rel = mf.a();
  }
  const std::int64_t k = static_cast<std::int64_t>(p) * d;
  // The truncated algebra vanishes above degree n (p - 1).
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  if (k < *lo || k > *hi + static_cast<std::int64_t>(ring.n_vars()) * (p - 1)) return 0;
  const auto weights = detail::infer_weights(ring, gens, rel);
  TruncatedAlgebra algebra(ring, p);
  detail::ModuleView view(algebra, gens, rels, rel, weights.has_value(),
                          weights ? weights->gens : std::vector<Weight>(gens.size()),
                          weights ? weights->rels : std::vector<Weight>(rels.size()));
  std::size_t total = 0;
  for (const auto& w : view.weights_at(static_cast<int>(k))) total += view.piece(static_cast<int>(k), w).dim();
  return total;
}

BigInt SummandMultiset::rank_total() const {
  BigInt r = 0;
  const BigInt single = rank(qfrob::spinor_plus(m(), 0));
  for (const auto& [t, n] : line) r += n;
  for (const auto* part : {&spinor_plus, &spinor_minus, &unresolved_spinor})
    for (const auto& [t, n] : *part) r += n * single;
  return r;
}

BigInt SummandMultiset::rank_expected() const {
  return ipow(p, static_cast<unsigned>(2 * m() * e)) * rank(source);
}

BigInt SummandMultiset::hilbert(std::int64_t d) const {
  BigInt h = 0;
  for (const auto& [t, n] : line) h += n * h0_line(m(), t + d);
  for (const auto* part : {&spinor_plus, &spinor_minus, &unresolved_spinor})
    for (const auto& [t, n] : *part) h += n * h0_spinor(m(), t + d);
  return h;
}

BigInt SummandMultiset::spinor_count(int s) const {
  BigInt n = 0;
  for (const auto* part : {&spinor_plus, &spinor_minus, &unresolved_spinor})
    if (auto it = part->find(s); it != part->end()) n += it->second;
  return n;
}

bool SummandMultiset::has_spinors() const {
  return !spinor_plus.empty() || !spinor_minus.empty() || !unresolved_spinor.empty();
}

nlohmann::ordered_json to_json(const SummandMultiset& ms) {
  nlohmann::ordered_json j;
  j["line"] = mult_list(ms.line);
  j["spinor_plus"] = mult_list(ms.spinor_plus);
  j["spinor_minus"] = mult_list(ms.spinor_minus);
  j["unresolved_spinor"] = mult_list(ms.unresolved_spinor);
  j["rank_total"] = big_to_json(ms.rank_total());
  j["rank_expected"] = big_to_json(ms.rank_expected());
  j["source"] = to_json(ms.source);
  j["p"] = ms.p;
  j["m"] = ms.m();
  j["e"] = ms.e;
  return j;
}

SummandMultiset decompose(const SheafSymbol& sym, int e, std::uint32_t p) {
  check_range(sym, p);
  if (e < 0) fail(ErrorKind::InvalidArgument, "Frobenius exponent must be nonnegative");
  frobenius_power(p, e);
  SummandMultiset out;
  out.source = sym;
  out.p = p;
  out.e = 0;
  switch (sym.kind) {
    case SheafKind::Line: out.line[sym.twist] = 1; break;
    case SheafKind::SpinorPlus: out.spinor_plus[sym.twist] = 1; break;
    case SheafKind::SpinorMinus: out.spinor_minus[sym.twist] = 1; break;
    case SheafKind::SpinorSum:
      out.spinor_plus[sym.twist] = 1;
      out.spinor_minus[sym.twist] = 1;
      break;
  }
  if (e == 0) return out;

  OnceCache once(sym.m, p);
  out = once.get(sym.kind, sym.twist);
  for (int level = 2; level <= e; ++level) {
    SummandMultiset next;
    next.source = sym;
    next.p = p;
    next.e = level;
    for (const auto& [t, n] : out.line) accumulate(next, once.get(SheafKind::Line, t), n);
    // Equal plus/minus counts pair up into copies of S(t).
    for (const auto& [t, n] : out.spinor_plus) {
      const auto it = out.spinor_minus.find(t);
      if (it == out.spinor_minus.end() || it->second != n)
        fail(ErrorKind::Inconsistent, "unpaired spinor summands at twist " + std::to_string(t));
      accumulate(next, once.get(SheafKind::SpinorSum, t), n);
    }
    // By the involution symmetry F_* S+(t) and F_* S-(t) have the same totals.
    for (const auto& [t, n] : out.unresolved_spinor) accumulate(next, once.get(SheafKind::SpinorPlus, t), n);
    out = std::move(next);
  }
  out.source = sym;
  out.e = e;
  validate(out);
  return out;
}

bool oracle_agrees(const SummandMultiset& ms) {
  if (ms.e < 1) return true;
  const SupportPrediction pred = predict_support(ms.source, ms.p, ms.e);
  std::set<std::int64_t> lines;
  std::set<std::int64_t> spinors;
  for (const auto& [t, n] : ms.line) lines.insert(-t);
  for (const auto* part : {&ms.spinor_plus, &ms.spinor_minus, &ms.unresolved_spinor})
    for (const auto& [t, n] : *part) spinors.insert(-t);
  return lines == pred.line_twists && spinors == pred.spinor_twists;
}

bool SpinorMultiplicityMatrix::nonzero() const noexcept {
  for (const auto& row : value)
    for (auto v : row)
      if (v != 0) return true;
  return false;
}

std::array<std::uint64_t, 2> split_spinor_multiplicities(SheafKind a, int level, std::uint32_t p, int m,
                                                         const SummandMultiset& precomputed) {
  if (!is_single_spinor(a)) fail(ErrorKind::InvalidArgument, "source must be a single spinor bundle");
  const PrimeField field(p);
  const QuadricRing ring(field, m);
  ring.require_bundle_range();
  if (precomputed.e != 1 || precomputed.source != SheafSymbol{a, level, m} || precomputed.p != p)
    fail(ErrorKind::InvalidArgument, "precomputed decomposition is not F_*" + to_string(SheafSymbol{a, level, m}));
  for (const auto* part : {&precomputed.spinor_plus, &precomputed.spinor_minus, &precomputed.unresolved_spinor})
    for (const auto& [t, n] : *part)
      if (t != level)
        fail(ErrorKind::Inconsistent, "spinor summand at twist " + std::to_string(t) + " besides the level " +
                                          std::to_string(level) + "; stable Hom would not count multiplicities");

  const ModulePresentation y = presentation_of(ring, {a, level, m});
  std::array<std::uint64_t, 2> row{};
  const SheafKind signs[2] = {SheafKind::SpinorPlus, SheafKind::SpinorMinus};
  for (int b = 0; b < 2; ++b) {
    const ModulePresentation x = frobenius_pullback_presentation(presentation_of(ring, {signs[b], level, m}), 1, p);
    row[b] = stable_hom_dim(x, y, 0);
  }
  if (BigInt(row[0] + row[1]) != precomputed.spinor_count(level))
    fail(ErrorKind::Inconsistent, "stable Hom counts " + std::to_string(row[0]) + "+" + std::to_string(row[1]) +
                                      " disagree with the solver total " + precomputed.spinor_count(level).str());
  return row;
}

SpinorMultiplicityMatrix spinor_multiplicity_matrix(int level, std::uint32_t p, int m) {
  SpinorMultiplicityMatrix out;
  out.level = level;
  const SheafKind signs[2] = {SheafKind::SpinorPlus, SheafKind::SpinorMinus};
  parallel_for(2, [&](std::size_t a) {
    const SummandMultiset ms = decompose({signs[a], level, m}, 1, p);
    out.value[a] = split_spinor_multiplicities(signs[a], level, p, m, ms);
  });
  return out;
}

}  // namespace qfrob

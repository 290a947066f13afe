#include "module_view.hpp"

#include "qfrob/error.hpp"

#include <deque>
#include <set>

namespace qfrob::detail {

std::optional<Weight> entry_weight(const QuadricRing& ring, const MultiPoly& f) {
  std::optional<Weight> w;
  for (const auto& [e, c] : f.terms()) {
    const Weight we = ring.weight(e);
    if (w && *w != we) return std::nullopt;
    w = we;
  }
  return w;
}

std::optional<PresentationWeights> infer_weights(const QuadricRing& ring, const std::vector<int>& gen_degrees,
                                                 const PolyMatrix& relations) {
  const std::size_t g = gen_degrees.size();
  const std::size_t r = relations.cols();
  std::vector<std::vector<std::optional<Weight>>> ew(g, std::vector<std::optional<Weight>>(r));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& f = relations.at(i, j);
      if (f.is_zero()) continue;
      ew[i][j] = entry_weight(ring, f);
      if (!ew[i][j]) return std::nullopt;
    }

  PresentationWeights out{std::vector<Weight>(g), std::vector<Weight>(r)};
  std::vector<bool> gen_done(g, false);
  std::vector<bool> rel_done(r, false);
  for (std::size_t root = 0; root < g; ++root) {
    if (gen_done[root]) continue;
    gen_done[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r; ++j) {
        if (!ew[i][j]) continue;
        const Weight wr = weight_add(out.gens[i], *ew[i][j]);
        if (rel_done[j]) {
          if (out.rels[j] != wr) return std::nullopt;
          continue;
        }
        rel_done[j] = true;
        out.rels[j] = wr;
        for (std::size_t k = 0; k < g; ++k) {
          if (!ew[k][j]) continue;
          const Weight wk = weight_sub(wr, *ew[k][j]);
          if (gen_done[k]) {
            if (out.gens[k] != wk) return std::nullopt;
            continue;
          }
          gen_done[k] = true;
          out.gens[k] = wk;
          queue.push_back(k);
        }
      }
    }
  }
  return out;
}

ModuleView::ModuleView(GradedAlgebra& algebra, std::vector<int> gen_degrees, std::vector<int> rel_degrees,
                       const PolyMatrix& relations, bool weighted, std::vector<Weight> gen_weights,
                       std::vector<Weight> rel_weights)
    : algebra_(algebra),
      gen_degrees_(std::move(gen_degrees)),
      rel_degrees_(std::move(rel_degrees)),
      columns_(relations.cols()),
      weighted_(weighted),
      gen_weights_(std::move(gen_weights)),
      rel_weights_(std::move(rel_weights)) {
  for (std::size_t j = 0; j < relations.cols(); ++j)
    for (std::size_t i = 0; i < relations.rows(); ++i)
      if (!relations.at(i, j).is_zero()) columns_[j].emplace_back(i, relations.at(i, j));
  if (!weighted_) {
    gen_weights_.assign(gen_degrees_.size(), Weight{});
    rel_weights_.assign(rel_degrees_.size(), Weight{});
  }
}

std::vector<Weight> ModuleView::weights_at(int degree) {
  std::set<Weight> ws;
  for (std::size_t l = 0; l < gen_degrees_.size(); ++l) {
    const auto& b = algebra_.basis(degree - gen_degrees_[l]);
    if (!weighted_) {
      if (!b.empty()) ws.insert(Weight{});
      continue;
    }
    for (const auto& [w, monos] : b)
      if (!monos.empty()) ws.insert(weight_add(w, gen_weights_[l]));
  }
  return {ws.begin(), ws.end()};
}

const Piece& ModuleView::piece(int degree, const Weight& w) {
  const auto key = std::make_pair(degree, weighted_ ? w : Weight{});
  if (auto it = pieces_.find(key); it != pieces_.end()) return *it->second;

  std::vector<std::pair<std::size_t, Exponents>> coords;
  std::vector<std::unordered_map<Exponents, std::size_t, ExponentsHash>> index(gen_degrees_.size());
  for (std::size_t l = 0; l < gen_degrees_.size(); ++l) {
    auto add_all = [&](const std::vector<Exponents>& monos) {
      for (const auto& e : monos) {
        index[l].emplace(e, coords.size());
        coords.emplace_back(l, e);
      }
    };
    const int k = degree - gen_degrees_[l];
    if (weighted_) {
      add_all(algebra_.basis(k, weight_sub(w, gen_weights_[l])));
    } else {
      for (const auto& [wb, monos] : algebra_.basis(k)) add_all(monos);
    }
  }

  auto p = std::make_unique<Piece>(algebra_.ring().field(), coords.size());
  p->coords = std::move(coords);
  p->index = std::move(index);

  for (std::size_t s = 0; s < columns_.size(); ++s) {
    if (columns_[s].empty()) continue;
    const int k = degree - rel_degrees_[s];
    auto insert_all = [&](const std::vector<Exponents>& monos) {
      for (const auto& nu : monos) {
        ModVector v(p->ambient_dim(), 0);
        for (const auto& [gen, f] : columns_[s]) accumulate(*p, gen, nu, f, 1, v);
        p->image.insert(std::move(v));
      }
    };
    if (weighted_) {
      insert_all(algebra_.basis(k, weight_sub(w, rel_weights_[s])));
    } else {
      for (const auto& [wb, monos] : algebra_.basis(k)) insert_all(monos);
    }
  }
  for (std::size_t c = 0; c < p->ambient_dim(); ++c)
    if (!p->image.is_pivot(c)) p->free_coords.push_back(c);
  return *pieces_.emplace(key, std::move(p)).first->second;
}

void ModuleView::accumulate(const Piece& target, std::size_t gen, const Exponents& mono, const MultiPoly& f, Coeff c,
                            ModVector& ambient) {
  const PrimeField& field = algebra_.ring().field();
  scratch_.clear();
  for (const auto& [e, fc] : f.terms()) algebra_.multiply(mono, e, field.mul(fc, c), scratch_);
  const auto& idx = target.index[gen];
  for (const auto& [e, cc] : scratch_) {
    const auto it = idx.find(e);
    if (it == idx.end()) fail(ErrorKind::Inconsistent, "product left the expected graded piece");
    ambient[it->second] = field.add(ambient[it->second], cc);
  }
}

ModVector ModuleView::to_quotient(const Piece& target, ModVector ambient) const {
  target.image.reduce(ambient);
  ModVector out(target.dim());
  for (std::size_t i = 0; i < target.free_coords.size(); ++i) out[i] = ambient[target.free_coords[i]];
  return out;
}

}  // namespace qfrob::detail

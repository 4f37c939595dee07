#include "gcat/swiatkowski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "gcat/planarity.hpp"
#include "gcat/smith.hpp"

namespace gcat {

namespace {

void append_u32(std::string& key, std::size_t x) {
  for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
}

std::string element_key(const SwBasisElement& x) {
  std::string key;
  key.reserve(4 * (1 + x.monomial.size() + 2 * x.distinguished.size()));
  append_u32(key, x.monomial.size());
  for (auto e : x.monomial) append_u32(key, e);
  for (const auto& [w, h] : x.distinguished) {
    append_u32(key, w);
    append_u32(key, h);
  }
  return key;
}

/// Multisets of size d over {0..m-1}, lexicographic.
std::vector<std::vector<std::size_t>> monomials(std::size_t m, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (cur.size() == d) {
      out.push_back(cur);
      return;
    }
    for (std::size_t e = lo; e < m; ++e) {
      cur.push_back(e);
      rec(e);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void require_edges(const MultiGraph& g, const char* who) {
  if (g.num_edges() == 0) {
    throw std::invalid_argument(std::string(who) +
                                ": the reduced complex needs at least one edge (for the point graph it misses "
                                "the H_0 class of the one-point configuration space)");
  }
}

/// Sign of the permutation sorting `keys`, which are distinct.
int sort_sign(std::vector<std::size_t> keys) {
  int sign = 1;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      if (keys[a] > keys[b]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

SwSlice::SwSlice(std::shared_ptr<const MultiGraph> g, std::size_t i, std::size_t n)
    : graph_(std::move(g)), i_(i), n_(n) {
  require_edges(*graph_, "sw_basis");
  if (i > n) return;
  const auto& gr = *graph_;
  auto monos = monomials(gr.num_edges(), n - i);
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < gr.num_vertices(); ++v) {
    if (gr.valence(v) >= 2) candidates.push_back(v);
  }
  std::vector<std::pair<std::size_t, HalfEdge>> dist;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (dist.size() == i) {
      for (const auto& m : monos) basis_.push_back({m, dist});
      return;
    }
    for (std::size_t k = from; k < candidates.size(); ++k) {
      if (candidates.size() - k < i - dist.size()) break;
      std::size_t w = candidates[k];
      HalfEdge base = gr.base_half_edge(w);
      for (HalfEdge h : gr.half_edges_at(w)) {
        if (h == base) continue;
        dist.emplace_back(w, h);
        rec(k + 1);
        dist.pop_back();
      }
    }
  };
  rec(0);
  index_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(element_key(basis_[k]), k);
}

std::optional<std::size_t> SwSlice::index_of(const SwBasisElement& x) const {
  auto it = index_.find(element_key(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SwSlice sw_basis(const MultiGraph& g, std::size_t i, std::size_t n) {
  return SwSlice(std::make_shared<const MultiGraph>(g), i, n);
}

SparseIntMatrix sw_differential(const SwSlice& from, const SwSlice& to) {
  if (from.graph_ptr() != to.graph_ptr() && !(from.graph() == to.graph())) {
    throw std::invalid_argument("sw_differential: slices of different graphs");
  }
  if (from.n() != to.n() || to.i() + 1 != from.i()) {
    throw std::invalid_argument("sw_differential: bidegrees must be (i, n) -> (i-1, n)");
  }
  const auto& g = from.graph();
  SparseIntMatrix d(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto& x = from[c];
    for (std::size_t j = 0; j < x.distinguished.size(); ++j) {
      auto [w, h] = x.distinguished[j];
      Integer sign(j % 2 ? -1 : 1);
      SwBasisElement y;
      y.distinguished = x.distinguished;
      y.distinguished.erase(y.distinguished.begin() + static_cast<std::ptrdiff_t>(j));
      for (auto [e, s] : {std::pair{edge_of(h), 1}, std::pair{edge_of(g.base_half_edge(w)), -1}}) {
        y.monomial = x.monomial;
        y.monomial.insert(std::upper_bound(y.monomial.begin(), y.monomial.end(), e), e);
        auto r = to.index_of(y);
        if (!r) throw std::logic_error("sw_differential: boundary term outside the target slice");
        d.add(*r, c, s > 0 ? sign : -sign);
      }
    }
  }
  return d;
}

SparseIntMatrix sw_differential(const MultiGraph& g, std::size_t i, std::size_t n) {
  auto p = std::make_shared<const MultiGraph>(g);
  SwSlice from(p, i, n);
  if (i == 0) return SparseIntMatrix(0, from.size());
  return sw_differential(from, SwSlice(p, i - 1, n));
}

HomologyContext uconf_homology_context(const MultiGraph& g, std::size_t i, std::size_t n) {
  require_edges(g, "uconf_homology");
  return HomologyContext(sw_differential(g, i, n), sw_differential(g, i + 1, n));
}

HomologySummary uconf_homology(const MultiGraph& g, std::size_t i, std::size_t n) {
  require_edges(g, "uconf_homology");
  return homology(sw_differential(g, i, n), sw_differential(g, i + 1, n));
}

SparseIntMatrix sw_elementary_chain_map(const Contraction& phi, const SwSlice& source, const SwSlice& target) {
  const auto& gs = phi.source();
  const auto& gt = phi.target();
  if (!(source.graph() == gs) || !(target.graph() == gt) || source.i() != target.i() || source.n() != target.n()) {
    throw std::invalid_argument("sw_chain_map: slices do not match the contraction");
  }
  auto contracted = phi.contracted_edges();
  if (contracted.size() > 1) throw std::invalid_argument("sw_chain_map: elementary maps contract at most one edge");

  struct Term {
    int coef;
    std::size_t vertex;
    HalfEdge h;
  };
  // h - base(v) in the source basis, for a source half-edge h at v.
  auto lift = [&](HalfEdge h, int coef, std::vector<Term>& out) {
    std::size_t v = gs.vertex_of(h);
    if (h != gs.base_half_edge(v)) out.push_back({coef, v, h});
  };
  // Image of a single target half-edge, as a combination of source differences.
  auto image_single = [&](HalfEdge ht, int coef, std::vector<Term>& out) {
    std::size_t e = phi.edge_preimage(edge_of(ht));
    bool flip = phi.edge(e).flip;
    HalfEdge h = 2 * e + static_cast<HalfEdge>(side_of(ht) ^ static_cast<int>(flip));
    lift(h, coef, out);
    std::size_t v = gs.vertex_of(h);
    if (!contracted.empty()) {
      std::size_t c = contracted[0];
      if (v == gs.ends(c).u) {
        lift(2 * c, -coef, out);
      } else if (v == gs.ends(c).v) {
        lift(2 * c + 1, -coef, out);
      }
    }
  };

  SparseIntMatrix m(source.size(), target.size());
  std::vector<Term> factor;
  for (std::size_t col = 0; col < target.size(); ++col) {
    const auto& x = target[col];
    SwBasisElement y;
    for (auto e : x.monomial) y.monomial.push_back(phi.edge_preimage(e));
    std::sort(y.monomial.begin(), y.monomial.end());
    // Expand the tensor product of the per-vertex images.
    std::vector<std::pair<int, std::vector<std::pair<std::size_t, HalfEdge>>>> terms{{1, {}}};
    for (const auto& [w, h] : x.distinguished) {
      factor.clear();
      image_single(h, 1, factor);
      image_single(gt.base_half_edge(w), -1, factor);
      std::vector<std::pair<int, std::vector<std::pair<std::size_t, HalfEdge>>>> next;
      for (const auto& [c, d] : terms) {
        for (const auto& t : factor) {
          auto d2 = d;
          d2.emplace_back(t.vertex, t.h);
          next.emplace_back(c * t.coef, std::move(d2));
        }
      }
      terms = std::move(next);
    }
    for (auto& [c, d] : terms) {
      std::vector<std::size_t> order;
      for (const auto& p : d) order.push_back(p.first);
      int sign = sort_sign(order);
      std::sort(d.begin(), d.end());
      y.distinguished = d;
      auto r = source.index_of(y);
      if (!r) throw std::logic_error("sw_chain_map: image outside the source slice");
      m.add(*r, col, Integer(c * sign));
    }
  }
  return m;
}

namespace {

/// φ = φ' ∘ π, where π contracts source edge e and φ' : G/e -> target.
std::pair<ContractionResult, Contraction> peel(const Contraction& phi, std::size_t e) {
  auto step = contract_edges(phi.source_ptr(), {e});
  auto rest = factor_through(phi, step.map);
  if (!rest) throw std::logic_error("sw_chain_map: contraction does not factor through its own edge");
  return {std::move(step), std::move(*rest)};
}

}  // namespace

SparseIntMatrix sw_chain_map(const Contraction& phi, std::size_t i, std::size_t n,
                             const std::vector<std::size_t>& edge_order) {
  auto contracted = phi.contracted_edges();
  auto sorted = edge_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != contracted) throw std::invalid_argument("sw_chain_map: order must list the contracted edges");
  if (contracted.size() <= 1) {
    return sw_elementary_chain_map(phi, SwSlice(phi.source_ptr(), i, n), SwSlice(phi.target_ptr(), i, n));
  }
  auto [step, rest] = peel(phi, edge_order[0]);
  std::vector<std::size_t> remaining;
  for (std::size_t k = 1; k < edge_order.size(); ++k) {
    // Edge ids shift down past the contracted one.
    std::size_t e = edge_order[k];
    remaining.push_back(step.map.edge(e).edge);
  }
  auto first = sw_elementary_chain_map(step.map, SwSlice(phi.source_ptr(), i, n), SwSlice(step.graph, i, n));
  return first * sw_chain_map(rest, i, n, remaining);
}

SparseIntMatrix sw_chain_map(const Contraction& phi, std::size_t i, std::size_t n) {
  return sw_chain_map(phi, i, n, phi.contracted_edges());
}

PullbackReport pullback_report(const MultiGraph& g, std::size_t i, std::size_t n) {
  require_edges(g, "pullback_spans");
  auto gp = std::make_shared<const MultiGraph>(g);
  PullbackReport report;
  SwSlice top(gp, i, n);
  HomologyContext target(sw_differential(g, i, n), sw_differential(g, i + 1, n));
  report.betti = target.betti();
  SparseIntMatrix joint(report.betti, 0);
  SparseIntMatrix chain_joint(top.size(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e) || g.num_edges() == 1) continue;
    auto c = contract_edges(gp, {e});
    ++report.simple_contractions;
    auto map = sw_elementary_chain_map(c.map, top, SwSlice(c.graph, i, n));
    chain_joint = hconcat(chain_joint, map);
    HomologyContext source(sw_differential(*c.graph, i, n), sw_differential(*c.graph, i + 1, n));
    joint = hconcat(joint, induced_map_on_homology(map, source, target));
  }
  report.image_rank = invariant_factors(joint).size();
  report.spans = spans_lattice(joint);
  report.chain_level_spans = spans_lattice(chain_joint);
  return report;
}

bool pullback_spans(const MultiGraph& g, std::size_t i, std::size_t n) { return pullback_report(g, i, n).spans; }

TorsionScan torsion_scan(const std::vector<NamedGraph>& corpus, std::size_t i, std::size_t n) {
  TorsionScan scan;
  scan.i = i;
  scan.n = n;
  std::map<long, Integer> exponent;
  for (const auto& [id, g] : corpus) {
    TorsionRow row;
    row.id = id;
    row.genus = genus(g);
    row.planar = is_planar(g);
    auto h = uconf_homology(g, i, n);
    row.betti = h.betti;
    row.torsion = h.torsion;
    auto [it, fresh] = exponent.emplace(row.genus, Integer(1));
    for (const auto& t : h.torsion) {
      if (it->second < t) it->second = t;
    }
    scan.rows.push_back(std::move(row));
  }
  scan.max_exponent.assign(exponent.begin(), exponent.end());
  return scan;
}

}  // namespace gcat

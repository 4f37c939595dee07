#include "gcat/trees.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gcat {

namespace {

constexpr std::size_t npos = PlanarRootedTree::npos;

void require_maps(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (phi.size() != t.size()) throw std::invalid_argument("tree map: wrong length");
  for (auto x : phi) {
    if (x >= t2.size()) throw std::invalid_argument("tree map: vertex out of range");
  }
}

bool is_top(const PlanarRootedTree& t, const TreeMap& phi, std::size_t w) {
  return w == t.root() || phi[t.parent(w)] != phi[w];
}

void require_same_labeling(const PlanarRootedTree& a, const PlanarRootedTree& b) {
  if (a.labeled() != b.labeled()) throw std::invalid_argument("trees: one is labeled and the other is not");
}

/// Embeddings t2 -> t in depth-first order of t2, images strictly increasing
/// in depth-first order of t. Stops at the first hit if `first_only`.
std::vector<TreeMap> search_embeddings(const PlanarRootedTree& t2, const PlanarRootedTree& t, bool match_labels,
                                       bool first_only) {
  std::vector<TreeMap> out;
  if (t2.size() > t.size()) return out;
  const auto& order2 = t2.order();
  TreeMap iota(t2.size(), npos);
  auto fits = [&](std::size_t x, std::size_t img) {
    if (match_labels && t.label(img) != t2.label(x)) return false;
    for (std::size_t k = 0; k < t2.position(x); ++k) {
      auto y = order2[k];
      if (t2.leq(x, y) != t.leq(img, iota[y])) return false;
      if (t2.leq(y, x) != t.leq(iota[y], img)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order2.size()) {
      out.push_back(iota);
      return first_only;
    }
    auto x = order2[k];
    auto p = t2.parent(x);
    // Strictly after the previous image, inside the subtree of the parent's image.
    std::size_t lo = t.position(iota[order2[k - 1]]) + 1;
    std::size_t hi = t.position(iota[p]) + t.subtree_size(iota[p]);
    for (std::size_t pos = lo; pos < hi; ++pos) {
      auto img = t.order()[pos];
      if (!fits(x, img)) continue;
      iota[x] = img;
      if (go(k + 1)) return true;
    }
    iota[x] = npos;
    return false;
  };
  if (match_labels && t.label(t.root()) != t2.label(t2.root())) return out;
  iota[t2.root()] = t.root();
  go(1);
  return out;
}

}  // namespace

PlanarRootedTree::PlanarRootedTree() : PlanarRootedTree(0, {{}}) {}

PlanarRootedTree::PlanarRootedTree(std::size_t root, std::vector<std::vector<std::size_t>> children)
    : root_(root), children_(std::move(children)) {
  std::size_t n = children_.size();
  if (n == 0 || root_ >= n) throw std::invalid_argument("PlanarRootedTree: root out of range");
  parent_.assign(n, npos);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto c : children_[v]) {
      if (c >= n) throw std::invalid_argument("PlanarRootedTree: child out of range");
      if (c == root_ || parent_[c] != npos) {
        throw std::invalid_argument("PlanarRootedTree: vertex " + std::to_string(c) + " has two parents");
      }
      parent_[c] = v;
    }
  }
  position_.assign(n, npos);
  subtree_.assign(n, 1);
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    position_[v] = order_.size();
    order_.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
  if (order_.size() != n) throw std::invalid_argument("PlanarRootedTree: not connected to the root");
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    if (*it != root_) subtree_[parent_[*it]] += subtree_[*it];
  }
}

void PlanarRootedTree::set_labels(std::vector<TreeLabel> labels) {
  if (!labels.empty() && labels.size() != size()) throw std::invalid_argument("PlanarRootedTree: wrong label count");
  labels_ = std::move(labels);
}

PlanarRootedTree PlanarRootedTree::with_labels(std::vector<TreeLabel> labels) const {
  auto t = *this;
  t.set_labels(std::move(labels));
  return t;
}

PlanarRootedTree PlanarRootedTree::unlabeled() const { return with_labels({}); }

PlanarRootedTree PlanarRootedTree::normalized() const {
  std::vector<std::vector<std::size_t>> ch(size());
  for (std::size_t v = 0; v < size(); ++v) {
    for (auto c : children_[v]) ch[position_[v]].push_back(position_[c]);
  }
  PlanarRootedTree t(0, std::move(ch));
  if (labeled()) {
    std::vector<TreeLabel> l(size());
    for (std::size_t v = 0; v < size(); ++v) l[position_[v]] = labels_[v];
    t.set_labels(std::move(l));
  }
  return t;
}

std::string PlanarRootedTree::str() const {
  std::ostringstream out;
  std::function<void(std::size_t)> emit = [&](std::size_t v) {
    out << '(' << v;
    if (labeled()) {
      out << ':';
      for (std::size_t k = 0; k < labels_[v].size(); ++k) out << (k ? "," : "") << labels_[v][k];
    }
    for (auto c : children_[v]) {
      out << ' ';
      emit(c);
    }
    out << ')';
  };
  emit(root_);
  return out.str();
}

PlanarRootedTree PlanarRootedTree::parse(const std::string& text) {
  std::size_t at = 0;
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(at) + ": " + what);
  };
  auto skip = [&] {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::optional<TreeLabel>> labels;
  std::function<std::size_t()> node = [&]() -> std::size_t {
    skip();
    if (at >= text.size() || text[at] != '(') fail("expected '('");
    ++at;
    std::size_t start = at;
    while (at < text.size() && (std::isalnum(static_cast<unsigned char>(text[at])) || text[at] == '_' || text[at] == '.')) ++at;
    if (at == start) fail("expected a vertex name");
    std::size_t id = names.size();
    names.push_back(text.substr(start, at - start));
    children.emplace_back();
    labels.emplace_back();
    if (at < text.size() && text[at] == ':') {
      ++at;
      TreeLabel l;
      while (at < text.size() && (text[at] == '-' || std::isdigit(static_cast<unsigned char>(text[at])))) {
        std::size_t s = at;
        if (text[at] == '-') ++at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
        if (at == s || text[at - 1] == '-') fail("malformed label entry");
        l.push_back(std::stol(text.substr(s, at - s)));
        if (at < text.size() && text[at] == ',') ++at;
        else break;
      }
      if (at < text.size() && !std::isspace(static_cast<unsigned char>(text[at])) && text[at] != ')') {
        fail("malformed label");
      }
      labels[id] = std::move(l);
    }
    while (true) {
      skip();
      if (at >= text.size()) fail("unbalanced parentheses");
      if (text[at] == ')') {
        ++at;
        break;
      }
      auto c = node();
      children[id].push_back(c);
    }
    return id;
  };
  node();
  skip();
  if (at != text.size()) fail("trailing characters");

  std::size_t n = names.size();
  bool any = false, all = true;
  for (const auto& l : labels) {
    any = any || l.has_value();
    all = all && l.has_value();
  }
  if (any && !all) throw std::invalid_argument("tree parse error: some vertices are labeled and some are not");

  // Keep numeric names when they are a permutation of 0..n-1.
  std::vector<std::size_t> id(n);
  bool numeric = true;
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n && numeric; ++k) {
    const auto& s = names[k];
    if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      numeric = false;
      break;
    }
    auto v = std::stoul(s);
    if (v >= n || seen[v]) numeric = false;
    else seen[v] = true, id[k] = v;
  }
  if (!numeric) {
    for (std::size_t k = 0; k < n; ++k) id[k] = k;
  }
  std::vector<std::vector<std::size_t>> ch(n);
  std::vector<TreeLabel> lab(any ? n : 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto c : children[k]) ch[id[k]].push_back(id[c]);
    if (any) lab[id[k]] = *labels[k];
  }
  PlanarRootedTree t(id[0], std::move(ch));
  t.set_labels(std::move(lab));
  return t;
}

std::vector<PlanarRootedTree> planar_rooted_trees(std::size_t edges) {
  std::vector<PlanarRootedTree> out;
  std::vector<std::vector<std::size_t>> ch{{}};
  std::vector<std::size_t> path{0};
  // Dyck words with '(' before ')': open a child of the current vertex or close it.
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t opened, std::size_t depth) {
    if (opened == edges && depth == 0) {
      out.emplace_back(0, ch);
      return;
    }
    if (opened < edges) {
      std::size_t v = ch.size();
      ch.emplace_back();
      ch[path.back()].push_back(v);
      path.push_back(v);
      go(opened + 1, depth + 1);
      path.pop_back();
      ch[path.back()].pop_back();
      ch.pop_back();
    }
    if (depth > 0) {
      auto v = path.back();
      path.pop_back();
      go(opened, depth - 1);
      path.push_back(v);
    }
  };
  go(0, 0);
  return out;
}

bool is_tree_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (phi.size() != t.size()) return false;
  for (auto x : phi) {
    if (x >= t2.size()) return false;
  }
  if (phi[t.root()] != t2.root()) return false;
  std::vector<std::size_t> tops(t2.size(), 0);
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (is_top(t, phi, v)) ++tops[phi[v]];
    if (v == t.root()) continue;
    auto a = phi[v], b = phi[t.parent(v)];
    if (a != b && t2.parent(a) != b) return false;
  }
  // One top per fiber: nonempty and connected.
  return std::all_of(tops.begin(), tops.end(), [](std::size_t k) { return k == 1; });
}

bool is_planar_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (!is_tree_contraction(t, t2, phi)) return false;
  // The first vertex of a connected fiber in root-first order is its top.
  auto iota = dual_embedding(t, t2, phi);
  for (std::size_t k = 1; k < t2.size(); ++k) {
    if (t.position(iota[t2.order()[k - 1]]) >= t.position(iota[t2.order()[k]])) return false;
  }
  return true;
}

bool is_phi_maximal(const PlanarRootedTree& t, const TreeMap& phi, std::size_t w) { return is_top(t, phi, w); }

bool is_labeled_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  require_same_labeling(t, t2);
  if (!is_planar_contraction(t, t2, phi)) return false;
  if (!t.labeled()) return true;
  for (std::size_t w = 0; w < t.size(); ++w) {
    if (is_top(t, phi, w) && t2.label(phi[w]) != t.label(w)) return false;
  }
  return true;
}

std::vector<TreeMap> planar_contractions(const PlanarRootedTree& t, const PlanarRootedTree& t2) {
  std::vector<TreeMap> out;
  if (t2.size() > t.size()) return out;
  auto target = t2.normalized().unlabeled().child_lists();
  // Edges are named by their lower vertex; choose which to contract.
  std::vector<std::size_t> lower;
  for (auto v : t.order()) {
    if (v != t.root()) lower.push_back(v);
  }
  std::size_t k = t.size() - t2.size();
  std::vector<bool> pick(lower.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::vector<bool> contracted(t.size());
  std::vector<std::size_t> id(t.size());
  do {
    for (std::size_t j = 0; j < lower.size(); ++j) contracted[lower[j]] = pick[j];
    // Fiber ids in order of their tops, which is the quotient's depth-first order.
    std::size_t next = 0;
    std::vector<std::vector<std::size_t>> ch(t2.size());
    for (auto v : t.order()) {
      if (v != t.root() && contracted[v]) {
        id[v] = id[t.parent(v)];
      } else {
        id[v] = next++;
        if (v != t.root()) ch[id[t.parent(v)]].push_back(id[v]);
      }
    }
    if (ch == target) {
      TreeMap phi(t.size());
      for (std::size_t v = 0; v < t.size(); ++v) phi[v] = t2.order()[id[v]];
      out.push_back(std::move(phi));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

TreeMap dual_embedding(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  require_maps(t, t2, phi);
  TreeMap iota(t2.size(), npos);
  for (auto w : t.order()) {
    if (iota[phi[w]] == npos) iota[phi[w]] = w;
  }
  return iota;
}

TreeMap contraction_from_embedding(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& iota) {
  require_maps(t2, t, iota);
  if (iota[t2.root()] != t.root()) throw std::invalid_argument("contraction_from_embedding: root not preserved");
  TreeMap image(t.size(), npos);
  for (std::size_t x = 0; x < t2.size(); ++x) image[iota[x]] = x;
  TreeMap phi(t.size());
  for (auto v : t.order()) phi[v] = image[v] != npos ? image[v] : phi[t.parent(v)];
  return phi;
}

bool is_order_embedding(const PlanarRootedTree& t2, const PlanarRootedTree& t, const TreeMap& iota) {
  if (iota.size() != t2.size()) return false;
  for (auto x : iota) {
    if (x >= t.size()) return false;
  }
  if (iota[t2.root()] != t.root()) return false;
  for (std::size_t v = 0; v < t2.size(); ++v) {
    for (std::size_t w = 0; w < t2.size(); ++w) {
      if (v != w && iota[v] == iota[w]) return false;
      if (t2.leq(v, w) != t.leq(iota[v], iota[w])) return false;
      if ((t2.position(v) < t2.position(w)) != (t.position(iota[v]) < t.position(iota[w]))) return false;
    }
  }
  return true;
}

std::vector<TreeMap> order_embeddings(const PlanarRootedTree& t2, const PlanarRootedTree& t) {
  auto out = search_embeddings(t2, t, false, false);
  std::sort(out.begin(), out.end());
  return out;
}

TreeMap compose(const TreeMap& psi, const TreeMap& phi) {
  TreeMap out(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) out[v] = psi.at(phi[v]);
  return out;
}

std::optional<TreeMap> labeled_contraction(const PlanarRootedTree& b, const PlanarRootedTree& a) {
  require_same_labeling(a, b);
  auto found = search_embeddings(a, b, a.labeled(), true);
  if (found.empty()) return std::nullopt;
  return contraction_from_embedding(b, a, found.front());
}

bool tree_quasi_leq(const PlanarRootedTree& a, const PlanarRootedTree& b) {
  return labeled_contraction(b, a).has_value();
}

PlanarRootedTree relative_labeling(const PlanarRootedTree& t_prime, const PlanarRootedTree& t, const TreeMap& phi_prime) {
  require_maps(t_prime, t, phi_prime);
  std::vector<TreeLabel> labels(t_prime.size());
  for (std::size_t w = 0; w < t_prime.size(); ++w) {
    if (t_prime.labeled()) labels[w] = t_prime.label(w);
    labels[w].push_back(is_top(t_prime, phi_prime, w) ? static_cast<long>(phi_prime[w]) + 1 : 0);
  }
  return t_prime.with_labels(std::move(labels));
}

PlanarRootedTree quotient(const PlanarRootedTree& t, const TreeMap& phi, std::size_t k) {
  if (phi.size() != t.size()) throw std::invalid_argument("quotient: wrong map length");
  std::vector<std::size_t> top(k, npos);
  for (auto v : t.order()) {
    if (phi[v] >= k) throw std::invalid_argument("quotient: vertex out of range");
    if (!is_top(t, phi, v)) continue;
    if (top[phi[v]] != npos) throw std::invalid_argument("quotient: disconnected fiber");
    top[phi[v]] = v;
  }
  std::vector<std::vector<std::size_t>> ch(k);
  // Tops arrive in depth-first order, so child lists come out sorted.
  for (auto v : t.order()) {
    if (v != t.root() && is_top(t, phi, v)) ch[phi[t.parent(v)]].push_back(phi[v]);
  }
  if (std::find(top.begin(), top.end(), npos) != top.end()) throw std::invalid_argument("quotient: map not surjective");
  return PlanarRootedTree(phi[t.root()], std::move(ch));
}

DualityReport duality_check(std::size_t max_edges) {
  DualityReport r;
  r.max_edges = max_edges;
  std::vector<PlanarRootedTree> all;
  for (std::size_t e = 0; e <= max_edges; ++e) {
    for (auto& t : planar_rooted_trees(e)) all.push_back(std::move(t));
  }
  r.trees = all.size();
  for (const auto& t : all) {
    for (const auto& t2 : all) {
      if (t2.size() > t.size()) continue;
      ++r.pairs;
      auto cs = planar_contractions(t, t2);
      auto es = order_embeddings(t2, t);
      r.contractions += cs.size();
      r.embeddings += es.size();
      r.related_pairs += !cs.empty();
      std::vector<TreeMap> duals;
      bool ok = true;
      for (const auto& phi : cs) {
        auto iota = dual_embedding(t, t2, phi);
        ok = ok && is_order_embedding(t2, t, iota) && contraction_from_embedding(t, t2, iota) == phi;
        duals.push_back(std::move(iota));
      }
      std::sort(duals.begin(), duals.end());
      ok = ok && duals == es;
      r.mismatches += !ok;
    }
  }
  return r;
}

RelativeLabelingReport relative_labeling_check(std::size_t max_edges, std::size_t label_bits) {
  RelativeLabelingReport r;
  r.max_edges = max_edges;
  r.label_bits = label_bits;
  std::vector<PlanarRootedTree> pool;
  for (std::size_t e = 0; e <= max_edges; ++e) {
    for (const auto& t : planar_rooted_trees(e)) {
      std::size_t bits = label_bits * t.size();
      if (bits >= 63) throw std::invalid_argument("relative_labeling_check: too many labelings");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<TreeLabel> l(t.size());
        for (std::size_t v = 0; v < t.size(); ++v) {
          for (std::size_t b = 0; b < label_bits; ++b) l[v].push_back(static_cast<long>((mask >> (v * label_bits + b)) & 1));
        }
        pool.push_back(t.with_labels(std::move(l)));
      }
    }
  }
  for (const auto& base : pool) {
    std::vector<std::pair<const PlanarRootedTree*, TreeMap>> over;
    for (const auto& x : pool) {
      for (auto& phi : planar_contractions(x, base)) {
        if (is_labeled_contraction(x, base, phi)) over.emplace_back(&x, std::move(phi));
      }
    }
    std::vector<PlanarRootedTree> relabeled;
    for (const auto& [t, phi] : over) relabeled.push_back(relative_labeling(*t, base, phi));
    for (std::size_t a = 0; a < over.size(); ++a) {
      for (std::size_t b = 0; b < over.size(); ++b) {
        const auto& [t1, phi1] = over[a];
        const auto& [t2, phi2] = over[b];
        if (t2->size() < t1->size()) continue;
        for (const auto& psi : planar_contractions(*t2, *t1)) {
          if (!is_labeled_contraction(*t2, *t1, psi)) continue;
          bool u_labeled = is_labeled_contraction(relabeled[b], relabeled[a], psi);
          bool factors = compose(phi1, psi) == phi2;
          ++r.checked;
          r.mismatches += u_labeled != factors;
        }
      }
    }
  }
  return r;
}

RigidifiedGraph::RigidifiedGraph(std::shared_ptr<const MultiGraph> g, PlanarRootedTree t, std::vector<std::size_t> te,
                                 std::vector<std::size_t> ex)
    : graph(std::move(g)), tree(std::move(t)), tree_edge(std::move(te)), extra(std::move(ex)) {
  if (!graph) throw std::invalid_argument("RigidifiedGraph: null graph");
  std::size_t nv = graph->num_vertices(), ne = graph->num_edges();
  if (tree.size() != nv) throw std::invalid_argument("RigidifiedGraph: tree does not span the vertices");
  if (tree_edge.size() != nv) throw std::invalid_argument("RigidifiedGraph: need one tree-edge entry per vertex");
  std::vector<int> role(ne, 0);  // 1 tree, 2 extra
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == tree.root()) {
      if (tree_edge[v] != npos) throw std::invalid_argument("RigidifiedGraph: the root has no tree edge");
      continue;
    }
    auto e = tree_edge[v];
    if (e >= ne) throw std::invalid_argument("RigidifiedGraph: tree edge out of range");
    const auto& ends = graph->ends(e);
    auto p = tree.parent(v);
    if (!((ends.u == v && ends.v == p) || (ends.u == p && ends.v == v))) {
      throw std::invalid_argument("RigidifiedGraph: edge " + std::to_string(e) + " does not join vertex " +
                                  std::to_string(v) + " to its parent");
    }
    if (role[e]) throw std::invalid_argument("RigidifiedGraph: repeated tree edge");
    role[e] = 1;
  }
  for (auto e : extra) {
    if (e >= ne || role[e]) throw std::invalid_argument("RigidifiedGraph: bad extra edge " + std::to_string(e));
    role[e] = 2;
  }
  if (std::find(role.begin(), role.end(), 0) != role.end()) {
    throw std::invalid_argument("RigidifiedGraph: some edge is neither a tree edge nor an extra edge");
  }
}

RigidifiedGraph RigidifiedGraph::from_tree(const PlanarRootedTree& tree,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& extra) {
  auto g = std::make_shared<MultiGraph>(tree.size());
  std::vector<std::size_t> te(tree.size(), npos), ex;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) te[v] = g->add_edge(tree.parent(v), v);
  }
  for (auto [a, b] : extra) {
    if (a >= tree.size() || b >= tree.size()) throw std::invalid_argument("RigidifiedGraph: extra edge endpoint out of range");
    ex.push_back(g->add_edge(a, b));
  }
  return RigidifiedGraph(std::move(g), tree.unlabeled(), std::move(te), std::move(ex));
}

bool RigidifiedGraph::is_tree_edge(std::size_t e) const {
  return std::find(tree_edge.begin(), tree_edge.end(), e) != tree_edge.end();
}

std::vector<std::size_t> RigidifiedGraph::attachments() const {
  std::vector<std::size_t> w;
  for (auto e : extra) {
    w.push_back(graph->ends(e).u);
    w.push_back(graph->ends(e).v);
  }
  return w;
}

PlanarRootedTree rigidification_labels(const RigidifiedGraph& r) {
  auto w = r.attachments();
  std::vector<TreeLabel> labels(r.tree.size());
  for (std::size_t v = 0; v < r.tree.size(); ++v) {
    for (auto wj : w) labels[v].push_back(r.tree.leq(wj, v) ? 1 : 0);
  }
  return r.tree.with_labels(std::move(labels));
}

std::optional<Contraction> induced_rigid_contraction(const RigidifiedGraph& a, const RigidifiedGraph& b,
                                                      const TreeMap& phi) {
  if (a.genus() != b.genus() || !is_planar_contraction(a.tree, b.tree, phi)) return std::nullopt;
  std::vector<EdgeImage> em(a.graph->num_edges());
  for (std::size_t i = 0; i < a.extra.size(); ++i) {
    const auto& s = a.graph->ends(a.extra[i]);
    const auto& t = b.graph->ends(b.extra[i]);
    if (phi[s.u] != t.u || phi[s.v] != t.v) return std::nullopt;
    em[a.extra[i]] = EdgeImage::to(b.extra[i], false);
  }
  for (std::size_t v = 0; v < a.tree.size(); ++v) {
    if (v == a.tree.root()) continue;
    auto e = a.tree_edge[v];
    if (phi[v] == phi[a.tree.parent(v)]) {
      em[e] = EdgeImage::collapse();
    } else {
      auto f = b.tree_edge[phi[v]];
      em[e] = EdgeImage::to(f, b.graph->ends(f).u != phi[a.graph->ends(e).u]);
    }
  }
  return Contraction(a.graph, b.graph, phi, std::move(em));
}

bool is_rigidified_contraction(const RigidifiedGraph& a, const RigidifiedGraph& b, const Contraction& phi) {
  if (!(phi.source() == *a.graph) || !(phi.target() == *b.graph)) return false;
  if (a.genus() != b.genus() || !is_planar_contraction(a.tree, b.tree, phi.vertex_map())) return false;
  for (std::size_t i = 0; i < a.extra.size(); ++i) {
    const auto& img = phi.edge(a.extra[i]);
    if (img.contracted || img.edge != b.extra[i] || img.flip) return false;
  }
  for (std::size_t v = 0; v < a.tree.size(); ++v) {
    if (v == a.tree.root()) continue;
    const auto& img = phi.edge(a.tree_edge[v]);
    if (!img.contracted && !b.is_tree_edge(img.edge)) return false;
  }
  return true;
}

ExtraLabelsCheck extra_labels_check(const RigidifiedGraph& a, const RigidifiedGraph& b, const TreeMap& phi) {
  ExtraLabelsCheck c;
  c.induces = induced_rigid_contraction(a, b, phi).has_value();
  c.labels_compatible = a.genus() == b.genus() &&
                        is_labeled_contraction(rigidification_labels(a), rigidification_labels(b), phi);
  return c;
}

TreeQuotientFactorization lemma_F_factor(const RigidifiedGraph& r, const Contraction& phi) {
  if (!(phi.source_ptr() == r.graph || phi.source() == *r.graph)) {
    throw std::invalid_argument("lemma_F_factor: the contraction does not start at the rigidified graph");
  }
  std::vector<std::size_t> in_tree;
  for (auto e : phi.contracted_edges()) {
    if (r.is_tree_edge(e)) in_tree.push_back(e);
  }
  auto c = contract_edges(r.graph, in_tree);
  const auto& psi = c.map;
  auto mid_tree = quotient(r.tree, psi.vertex_map(), c.graph->num_vertices());
  std::vector<std::size_t> te(mid_tree.size(), npos), ex;
  for (std::size_t v = 0; v < r.tree.size(); ++v) {
    if (v != r.tree.root() && is_top(r.tree, psi.vertex_map(), v)) te[psi.vertex(v)] = psi.edge(r.tree_edge[v]).edge;
  }
  for (auto e : r.extra) ex.push_back(psi.edge(e).edge);
  RigidifiedGraph middle(c.graph, std::move(mid_tree), std::move(te), std::move(ex));
  auto rest = factor_through(phi, psi);
  if (!rest) throw std::logic_error("lemma_F_factor: φ does not factor through the tree quotient");
  return {std::move(middle), psi, std::move(*rest), in_tree.size()};
}

}  // namespace gcat

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

using TreeLabel = std::vector<long>;

/// Rooted tree with an ordered child list at every vertex and optional labels.
/// The partial order has the root on top: v <= w iff w lies on the path from
/// v to the root. Depth-first order is root-first: a vertex precedes its
/// descendants, which are visited in child order.
class PlanarRootedTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// The one-vertex tree.
  PlanarRootedTree();
  /// Throws std::invalid_argument unless the child lists form a tree on
  /// 0..children.size()-1 rooted at `root`.
  PlanarRootedTree(std::size_t root, std::vector<std::vector<std::size_t>> children);

  std::size_t size() const { return children_.size(); }
  std::size_t num_edges() const { return children_.size() - 1; }
  std::size_t root() const { return root_; }
  std::size_t parent(std::size_t v) const { return parent_[v]; }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
  const std::vector<std::vector<std::size_t>>& child_lists() const { return children_; }

  /// Vertices in depth-first order.
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t position(std::size_t v) const { return position_[v]; }
  std::size_t subtree_size(std::size_t v) const { return subtree_[v]; }
  /// v <= w in the rooted partial order.
  bool leq(std::size_t v, std::size_t w) const {
    return position_[w] <= position_[v] && position_[v] < position_[w] + subtree_[w];
  }

  bool labeled() const { return !labels_.empty(); }
  const TreeLabel& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<TreeLabel>& labels() const { return labels_; }
  /// Throws std::invalid_argument if the size is wrong.
  void set_labels(std::vector<TreeLabel> labels);
  PlanarRootedTree with_labels(std::vector<TreeLabel> labels) const;
  PlanarRootedTree unlabeled() const;

  /// Renumbered so that vertex ids are depth-first positions.
  PlanarRootedTree normalized() const;

  /// "(v:l (a:l ...) (b:l ...))" with vertex ids as names and labels as
  /// comma-separated integers; the ":l" part is absent for unlabeled trees.
  std::string str() const;
  /// Inverse of str(). Names that are a permutation of 0..N-1 are kept as
  /// ids; otherwise vertices are numbered in order of appearance.
  static PlanarRootedTree parse(const std::string& text);

  friend bool operator==(const PlanarRootedTree& a, const PlanarRootedTree& b) {
    return a.root_ == b.root_ && a.children_ == b.children_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t root_ = 0;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> parent_, order_, position_, subtree_;
  std::vector<TreeLabel> labels_;
};

/// Every planar rooted tree with `edges` edges, normalized, in the order of
/// their Dyck words.
std::vector<PlanarRootedTree> planar_rooted_trees(std::size_t edges);

/// A map of trees is given by its vertex map T -> T2.
using TreeMap = std::vector<std::size_t>;

/// Root-preserving surjection with connected fibers sending adjacent vertices
/// to equal or adjacent vertices.
bool is_tree_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi);
/// Additionally: first(φ⁻¹(v)) precedes first(φ⁻¹(w)) iff v precedes w.
bool is_planar_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi);
/// w is φ-maximal iff it is the top of its fiber.
bool is_phi_maximal(const PlanarRootedTree& t, const TreeMap& phi, std::size_t w);
/// Planar, and ℓ2(φ(w)) = ℓ(w) at every φ-maximal w.
bool is_labeled_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi);

/// Every planar contraction T -> T2 (labels ignored), from quotients by edge sets.
std::vector<TreeMap> planar_contractions(const PlanarRootedTree& t, const PlanarRootedTree& t2);

/// φ* : T2 -> T, w' -> max φ⁻¹(w').
TreeMap dual_embedding(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi);
/// The contraction sending each vertex of T to the nearest embedded
/// ancestor-or-self. Inverse of dual_embedding.
TreeMap contraction_from_embedding(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& iota);
/// Pointed, injective, v <= w iff ι(v) <= ι(w), and depth-first order preserved.
bool is_order_embedding(const PlanarRootedTree& t2, const PlanarRootedTree& t, const TreeMap& iota);
/// Every depth-first-preserving pointed order embedding T2 -> T, by backtracking.
std::vector<TreeMap> order_embeddings(const PlanarRootedTree& t2, const PlanarRootedTree& t);

TreeMap compose(const TreeMap& psi, const TreeMap& phi);

/// a <= b iff there is a labeled planar contraction b -> a. Both trees must
/// be labeled or both unlabeled. Backtracks over label-matching embeddings
/// a -> b, which correspond to labeled contractions under duality.
bool tree_quasi_leq(const PlanarRootedTree& a, const PlanarRootedTree& b);
/// A labeled planar contraction b -> a, if one exists.
std::optional<TreeMap> labeled_contraction(const PlanarRootedTree& b, const PlanarRootedTree& a);

/// T' relabeled over S x (Vert(T) ⊔ {0}): ℓ'(w') with φ'(w') + 1 appended at
/// φ'-maximal vertices and 0 appended elsewhere.
PlanarRootedTree relative_labeling(const PlanarRootedTree& t_prime, const PlanarRootedTree& t, const TreeMap& phi_prime);

/// T/φ on vertex ids 0..k-1 for a map with connected fibers; children are
/// ordered by the depth-first position of their fiber tops.
PlanarRootedTree quotient(const PlanarRootedTree& t, const TreeMap& phi, std::size_t k);

struct DualityReport {
  std::size_t max_edges = 0;
  std::size_t trees = 0;
  std::size_t pairs = 0;
  /// Pairs with at least one contraction.
  std::size_t related_pairs = 0;
  std::size_t contractions = 0;
  std::size_t embeddings = 0;
  /// Pairs where the dual embeddings of the contractions differ from the
  /// enumerated embeddings, or a round trip fails.
  std::size_t mismatches = 0;
  bool holds() const { return mismatches == 0; }
};

/// Over all pairs of plane trees with at most `max_edges` edges: contractions
/// T -> T2 and embeddings T2 -> T correspond under dual_embedding.
DualityReport duality_check(std::size_t max_edges);

struct RelativeLabelingReport {
  std::size_t max_edges = 0;
  std::size_t label_bits = 0;
  /// Triples (φ', φ'', ψ) with ψ an S-labeled contraction.
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  bool holds() const { return mismatches == 0; }
};

/// For S-labeled contractions φ' : T' -> T, φ'' : T'' -> T and ψ : T'' -> T',
/// ψ is U-labeled iff φ'' = φ' ∘ ψ. Trees have at most `max_edges` edges and
/// range over every labeling by {0,1}^label_bits.
RelativeLabelingReport relative_labeling_check(std::size_t max_edges, std::size_t label_bits = 0);

/// A graph with a planar rooted spanning tree and ordered, oriented extra
/// edges. Extra edge i runs from ends(extra[i]).u to ends(extra[i]).v.
struct RigidifiedGraph {
  std::shared_ptr<const MultiGraph> graph;
  PlanarRootedTree tree;
  /// Edge from each non-root vertex to its parent; npos at the root.
  std::vector<std::size_t> tree_edge;
  std::vector<std::size_t> extra;

  /// Throws std::invalid_argument if the tree edges do not match the tree or
  /// the extra edges are not exactly the remaining edges.
  RigidifiedGraph(std::shared_ptr<const MultiGraph> graph, PlanarRootedTree tree, std::vector<std::size_t> tree_edge,
                  std::vector<std::size_t> extra);
  /// Tree edges first (one per non-root vertex, increasing), then the extras.
  static RigidifiedGraph from_tree(const PlanarRootedTree& tree,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& extra);

  std::size_t genus() const { return extra.size(); }
  bool is_tree_edge(std::size_t e) const;
  /// w_1..w_{2g}: origin and terminus of each extra edge.
  std::vector<std::size_t> attachments() const;
};

/// The spanning tree labeled over {0,1}^{2g}: bit j is 1 iff w >= w_j.
PlanarRootedTree rigidification_labels(const RigidifiedGraph& r);

/// The graph contraction extending a planar tree contraction, sending extra
/// edge i onto extra edge i with its orientation; nullopt if the endpoints
/// do not line up.
std::optional<Contraction> induced_rigid_contraction(const RigidifiedGraph& a, const RigidifiedGraph& b,
                                                      const TreeMap& phi);
/// Only tree edges contracted, planar on the trees, extras carried in order
/// and orientation.
bool is_rigidified_contraction(const RigidifiedGraph& a, const RigidifiedGraph& b, const Contraction& phi);

struct ExtraLabelsCheck {
  bool induces = false;
  bool labels_compatible = false;
  bool agree() const { return induces == labels_compatible; }
};
/// Both sides of the equivalence for one planar tree contraction.
ExtraLabelsCheck extra_labels_check(const RigidifiedGraph& a, const RigidifiedGraph& b, const TreeMap& phi);

struct TreeQuotientFactorization {
  RigidifiedGraph middle;
  /// G' -> G'/(E ∩ T'), a contraction of rigidified graphs.
  Contraction psi;
  /// G'/(E ∩ T') -> G, with rest ∘ psi = φ.
  Contraction rest;
  std::size_t tree_edges_contracted = 0;
};

/// Factors φ : G' -> G through the quotient by the contracted spanning-tree
/// edges. Throws std::invalid_argument if φ does not start at r.graph.
TreeQuotientFactorization lemma_F_factor(const RigidifiedGraph& r, const Contraction& phi);

}  // namespace gcat

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

/// Where a source edge goes: contracted to a vertex, or onto a target edge,
/// possibly reversing it. Loops carry the flip too, so a loop reversal is a
/// separate automorphism.
struct EdgeImage {
  bool contracted = false;
  std::size_t edge = 0;
  bool flip = false;

  static EdgeImage collapse() { return {true, 0, false}; }
  static EdgeImage to(std::size_t e, bool flip = false) { return {false, e, flip}; }
  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

/// Surjective graph morphism with connected fibers. Contractions are the
/// smooshings whose fibers are trees.
class Smooshing {
 public:
  /// Validates the data and throws std::invalid_argument naming the broken
  /// condition.
  Smooshing(std::shared_ptr<const MultiGraph> source, std::shared_ptr<const MultiGraph> target,
            std::vector<std::size_t> vertex_map, std::vector<EdgeImage> edge_map);

  const MultiGraph& source() const { return *source_; }
  const MultiGraph& target() const { return *target_; }
  const std::shared_ptr<const MultiGraph>& source_ptr() const { return source_; }
  const std::shared_ptr<const MultiGraph>& target_ptr() const { return target_; }

  std::size_t vertex(std::size_t v) const { return vertex_map_[v]; }
  const EdgeImage& edge(std::size_t e) const { return edge_map_[e]; }
  const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

  std::vector<std::size_t> contracted_edges() const;
  /// Source vertices over target vertex w, increasing.
  std::vector<std::size_t> fiber(std::size_t w) const;
  /// Image of a half-edge whose edge is not contracted.
  HalfEdge half_edge(HalfEdge h) const;
  /// The unique source edge over target edge e.
  std::size_t edge_preimage(std::size_t e) const;
  bool fibers_are_trees() const;
  bool is_identity() const;

  friend bool operator==(const Smooshing& a, const Smooshing& b);

 protected:
  std::shared_ptr<const MultiGraph> source_, target_;
  std::vector<std::size_t> vertex_map_;
  std::vector<EdgeImage> edge_map_;
  std::vector<std::size_t> edge_preimage_;
};

class Contraction : public Smooshing {
 public:
  /// As Smooshing, and additionally every fiber must be a tree.
  Contraction(std::shared_ptr<const MultiGraph> source, std::shared_ptr<const MultiGraph> target,
              std::vector<std::size_t> vertex_map, std::vector<EdgeImage> edge_map);
  explicit Contraction(const Smooshing& s);

  static Contraction identity(std::shared_ptr<const MultiGraph> g);
  static Contraction identity(const MultiGraph& g);
};

/// ψ ∘ φ. Throws std::invalid_argument unless target(φ) == source(ψ).
Smooshing compose(const Smooshing& psi, const Smooshing& phi);
Contraction compose(const Contraction& psi, const Contraction& phi);

/// ψ with φ = ψ ∘ π, if it exists (π must contract only edges that φ
/// contracts and respect φ's vertex fibers). Sources must agree.
std::optional<Contraction> factor_through(const Contraction& phi, const Contraction& pi);

/// Inverse of an isomorphism (a contraction with no contracted edges).
Contraction inverse(const Contraction& iso);

/// Quotient G/E. Vertices of the quotient are the components of (V, E)
/// ordered by least member; surviving edges keep their relative order.
Smooshing smoosh_edges(std::shared_ptr<const MultiGraph> g, const std::vector<std::size_t>& edges);

struct ContractionResult {
  std::shared_ptr<const MultiGraph> graph;
  Contraction map;
};

/// G/E for a forest E. Throws std::invalid_argument if E contains a cycle or loop.
ContractionResult contract_edges(std::shared_ptr<const MultiGraph> g, const std::vector<std::size_t>& edges);
ContractionResult contract_edges(const MultiGraph& g, const std::vector<std::size_t>& edges);

}  // namespace gcat

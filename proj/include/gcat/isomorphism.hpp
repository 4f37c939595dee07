#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

/// Complete isomorphism invariant: the vertex count followed by the upper
/// triangle (diagonal = loop counts) of the edge-multiplicity matrix under
/// the canonical vertex order.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const;
};

/// canonical_order()[k] is the vertex placed at position k.
std::vector<std::size_t> canonical_order(const MultiGraph& g);
CanonicalForm canonical_form(const MultiGraph& g);
/// The graph rebuilt in canonical vertex order with edges sorted by endpoints.
MultiGraph canonical_graph(const MultiGraph& g);

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// All isomorphisms a -> b as contractions with no contracted edge, in a
/// deterministic order.
std::vector<Contraction> isomorphisms(std::shared_ptr<const MultiGraph> a, std::shared_ptr<const MultiGraph> b);
std::optional<Contraction> find_isomorphism(std::shared_ptr<const MultiGraph> a,
                                            std::shared_ptr<const MultiGraph> b);
std::vector<Contraction> automorphisms(std::shared_ptr<const MultiGraph> g);
std::vector<Contraction> automorphisms(const MultiGraph& g);
/// |Aut(G)| without materializing the group.
std::uint64_t count_automorphisms(const MultiGraph& g);

}  // namespace gcat

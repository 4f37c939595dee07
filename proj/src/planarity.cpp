#include "gcat/planarity.hpp"

#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace gcat {

bool is_planar(const MultiGraph& g) {
  using Simple = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Simple s(g.num_vertices());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    if (seen.insert({std::min(u, v), std::max(u, v)}).second) boost::add_edge(u, v, s);
  }
  return boost::boyer_myrvold_planarity_test(s);
}

}  // namespace gcat

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gcat/subdivision.hpp"
#include "gcat/swiatkowski.hpp"

namespace gcat {

namespace {

std::string cell_key(const std::vector<std::size_t>& c) {
  std::string key;
  for (auto x : c) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  }
  return key;
}

MultiGraph uniform_subdivision(const MultiGraph& g, std::size_t pieces) {
  std::vector<DirectedEdge> sites;
  for (std::size_t e = 0; e < g.num_edges(); ++e) sites.push_back({e, false});
  return *subdivide(g, sites, std::vector<std::size_t>(g.num_edges(), pieces)).graph;
}

}  // namespace

AbramsComplex::AbramsComplex(const MultiGraph& g, std::size_t n)
    : sub_(uniform_subdivision(g, n + 1)), n_(n), cells_(n + 1), index_(n + 1) {
  std::size_t nv = sub_.num_vertices(), ne = sub_.num_edges();
  std::vector<char> used(nv, 0);
  Cell cur;
  std::size_t edges_in = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == n) {
      index_[edges_in].emplace(cell_key(cur), cells_[edges_in].size());
      cells_[edges_in].push_back(cur);
      return;
    }
    for (std::size_t item = from; item < nv + ne; ++item) {
      if (item < nv) {
        if (used[item]) continue;
        used[item] = 1;
        cur.push_back(item);
        rec(item + 1);
        cur.pop_back();
        used[item] = 0;
      } else {
        auto [u, v] = sub_.ends(item - nv);
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        cur.push_back(item);
        ++edges_in;
        rec(item + 1);
        --edges_in;
        cur.pop_back();
        used[u] = used[v] = 0;
      }
    }
  };
  rec(0);
}

std::size_t AbramsComplex::cell_index(std::size_t k, const Cell& c) const {
  auto it = index_[k].find(cell_key(c));
  if (it == index_[k].end()) throw std::logic_error("AbramsComplex: face is not a cell");
  return it->second;
}

SparseIntMatrix AbramsComplex::boundary(std::size_t k) const {
  if (k == 0) return SparseIntMatrix(0, num_cells(0));
  SparseIntMatrix d(num_cells(k - 1), num_cells(k));
  if (k > n_) return d;
  std::size_t nv = sub_.num_vertices();
  for (std::size_t c = 0; c < cells_[k].size(); ++c) {
    const auto& cell = cells_[k][c];
    std::size_t j = 0;
    for (std::size_t pos = 0; pos < cell.size(); ++pos) {
      if (cell[pos] < nv) continue;
      auto [tail, head] = sub_.ends(cell[pos] - nv);
      Integer sign(j % 2 ? -1 : 1);
      for (auto [v, s] : {std::pair{head, 1}, std::pair{tail, -1}}) {
        Cell face = cell;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
        face.insert(std::lower_bound(face.begin(), face.end(), v), v);
        d.add(cell_index(k - 1, face), c, s > 0 ? sign : -sign);
      }
      ++j;
    }
  }
  return d;
}

HomologySummary AbramsComplex::homology(std::size_t i) const {
  return gcat::homology(boundary(i), boundary(i + 1));
}

HomologySummary abrams_homology(const MultiGraph& g, std::size_t i, std::size_t n) {
  return AbramsComplex(g, n).homology(i);
}

}  // namespace gcat

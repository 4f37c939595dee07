#include "gcat/corpus.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "gcat/families.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/isomorphism.hpp"

namespace gcat {

namespace {

std::string join_lengths(const std::vector<std::size_t>& a) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "-" : "") + std::to_string(a[k]);
  return s;
}

}  // namespace

std::vector<CorpusEntry> acceptance_corpus() {
  std::vector<CorpusEntry> out;
  std::set<CanonicalForm> seen;
  auto add = [&](std::string id, std::string family, MultiGraph g) {
    if (seen.insert(canonical_form(g)).second) out.push_back({std::move(id), std::move(family), std::move(g)});
  };
  for (std::size_t k = 0; k <= 6; ++k) {
    auto trees = trees_with_edges(k);
    for (std::size_t t = 0; t < trees.size(); ++t) {
      add("tree-" + std::to_string(k) + "-" + std::to_string(t), "tree", trees[t]);
    }
  }
  for (std::size_t n = 3; n <= 8; ++n) add("cycle-" + std::to_string(n), "cycle", cycle_graph(n));
  for (std::size_t n = 3; n <= 8; ++n) add("star-" + std::to_string(n), "star", star_graph(n));
  add("complete-4", "complete", complete_graph(4));
  add("complete-5", "complete", complete_graph(5));
  add("bipartite-3-3", "complete-bipartite", complete_bipartite_graph(3, 3));
  add("melon", "melon", melon_graph());
  for (std::size_t g = 1; g <= 4; ++g) add("rose-" + std::to_string(g), "rose", rose_graph(g));
  for (std::size_t g = 0; g <= 3; ++g) {
    // Sorted tuples a_1 <= ... <= a_{g+1} with entries in 1..4.
    std::vector<std::size_t> a(g + 1, 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t lo) {
      if (k == a.size()) {
        add("theta-" + join_lengths(a), "theta", theta_graph(a));
        return;
      }
      for (std::size_t x = lo; x <= 4; ++x) {
        a[k] = x;
        rec(k + 1, x);
      }
    };
    rec(0, 1);
  }
  for (auto& entry : out) {
    for (std::size_t v = 0; v < entry.graph.num_vertices(); ++v) entry.graph.set_vertex_name(v, "v" + std::to_string(v));
    for (std::size_t e = 0; e < entry.graph.num_edges(); ++e) entry.graph.set_edge_name(e, "e" + std::to_string(e));
  }
  return out;
}

void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus) {
  std::filesystem::create_directories(dir);
  nlohmann::json index = nlohmann::json::array();
  for (const auto& entry : corpus) {
    write_graph_file(dir / (entry.id + ".json"), entry.graph);
    index.push_back({{"id", entry.id}, {"family", entry.family}, {"file", entry.id + ".json"}});
  }
  std::ofstream out(dir / "index.json");
  out << index.dump(1) << '\n';
}

std::vector<CorpusEntry> read_corpus(const std::filesystem::path& dir) {
  std::ifstream in(dir / "index.json");
  if (!in) throw GraphFormatError("no index.json in " + dir.string());
  nlohmann::json index;
  in >> index;
  std::vector<CorpusEntry> out;
  for (const auto& item : index) {
    out.push_back({item.at("id").get<std::string>(), item.at("family").get<std::string>(),
                   read_graph_file(dir / item.at("file").get<std::string>())});
  }
  return out;
}

}  // namespace gcat

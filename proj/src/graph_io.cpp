#include "gcat/graph_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gcat {

nlohmann::json graph_to_json(const MultiGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.vertex_name(v));
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    edges.push_back({{"id", g.edge_name(e)},
                     {"ends", {g.vertex_name(g.ends(e).u), g.vertex_name(g.ends(e).v)}}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphFormatError("graph: expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw GraphFormatError("graph: missing \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw GraphFormatError("graph: missing \"edges\" array");
  MultiGraph g;
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < j["vertices"].size(); ++k) {
    const auto& v = j["vertices"][k];
    if (!v.is_string()) throw GraphFormatError("graph: vertex #" + std::to_string(k) + " is not a string");
    auto name = v.get<std::string>();
    if (index.count(name)) throw GraphFormatError("graph: duplicate vertex \"" + name + "\"");
    index[name] = g.add_vertex(name);
  }
  std::set<std::string> ids;
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    const auto& e = j["edges"][k];
    std::string where = "edge record #" + std::to_string(k);
    if (e.is_object() && e.contains("id") && e["id"].is_string()) {
      where += " (id \"" + e["id"].get<std::string>() + "\")";
    }
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) throw GraphFormatError(where + ": missing string id");
    if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 || !e["ends"][0].is_string() ||
        !e["ends"][1].is_string()) {
      throw GraphFormatError(where + ": \"ends\" must be a pair of vertex names");
    }
    auto id = e["id"].get<std::string>();
    if (!ids.insert(id).second) throw GraphFormatError(where + ": duplicate edge id");
    auto a = e["ends"][0].get<std::string>(), b = e["ends"][1].get<std::string>();
    for (const auto& end : {a, b}) {
      if (!index.count(end)) throw GraphFormatError(where + ": unknown vertex \"" + end + "\"");
    }
    g.add_edge(index[a], index[b], id);
  }
  return g;
}

MultiGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphFormatError(path.string() + ": " + e.what());
  }
  try {
    return graph_from_json(j);
  } catch (const GraphFormatError& e) {
    throw GraphFormatError(path.string() + ": " + e.what());
  }
}

void write_graph_file(const std::filesystem::path& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << graph_to_json(g).dump(1) << '\n';
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gcat

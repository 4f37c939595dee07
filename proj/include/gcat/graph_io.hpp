#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "gcat/graph.hpp"
#include "json.hpp"

namespace gcat {

struct GraphFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"vertices": [...], "edges": [{"id": ..., "ends": [a, b]}, ...]}. Edge
/// order in the file is the edge order of the graph.
nlohmann::json graph_to_json(const MultiGraph& g);
/// Throws GraphFormatError; the message names the offending record.
MultiGraph graph_from_json(const nlohmann::json& j);

MultiGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const MultiGraph& g);

/// FNV-1a 64-bit of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace gcat

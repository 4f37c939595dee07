#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

struct CorpusEntry {
  std::string id;
  std::string family;
  MultiGraph graph;
};

/// Trees with at most 6 edges, cycles 3..8, stars 3..8, K_4, K_5, K_{3,3},
/// the melon, roses R_1..R_4, and theta graphs G_g(a) for g <= 3 with
/// 1 <= a_i <= 4. One entry per isomorphism class, in a fixed order.
std::vector<CorpusEntry> acceptance_corpus();

/// Writes one graph file per entry plus index.json. Rebuilding produces
/// byte-identical files.
void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& dir);

}  // namespace gcat

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace normsim {

// Undirected simple graph over agents 0..n-1. Adjacency lists are sorted and
// symmetric; the graph is immutable once built.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Builds from an edge list. Throws ParameterError on self-loops,
  // duplicate edges, or endpoints outside [0, n_nodes).
  static SocialGraph from_edges(int n_nodes, std::span<const std::pair<int, int>> edges);

  int n_nodes() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // Sorted neighbor list of node i; never contains i.
  std::span<const int> neighbors(int i) const;
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

  // Each undirected edge once, as (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;

  friend bool operator==(const SocialGraph&, const SocialGraph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Barabasi-Albert preferential attachment. The seed graph is the complete
// graph on m + 1 nodes; every later node attaches to m distinct existing
// nodes drawn without replacement with probability proportional to degree.
SocialGraph generate_ba(int n_nodes, int m, std::uint64_t seed);

// degree -> number of nodes with that degree
std::map<int, int> degree_histogram(const SocialGraph& graph);

// Edge-list text: one "i j" pair per line, 0-based, whitespace separated,
// '#' lines ignored. The node count is taken from `n_nodes` when positive,
// otherwise from the largest index seen.
SocialGraph load_edge_list(const std::filesystem::path& path, int n_nodes = 0);
void write_edge_list(const SocialGraph& graph, const std::filesystem::path& path);

}  // namespace normsim

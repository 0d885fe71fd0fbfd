#include "normsim/network.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "normsim/errors.hpp"
#include "normsim/rng.hpp"

namespace normsim {

SocialGraph SocialGraph::from_edges(int n_nodes, std::span<const std::pair<int, int>> edges) {
  if (n_nodes < 0) throw ParameterError("graph: node count must be >= 0");
  SocialGraph graph;
  graph.adjacency_.resize(static_cast<std::size_t>(n_nodes));
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n_nodes || j >= n_nodes) {
      throw ParameterError("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") out of range");
    }
    if (i == j) throw ParameterError("graph: self-loop at node " + std::to_string(i));
    graph.adjacency_[i].push_back(j);
    graph.adjacency_[j].push_back(i);
  }
  for (std::size_t i = 0; i < graph.adjacency_.size(); ++i) {
    auto& adj = graph.adjacency_[i];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw ParameterError("graph: duplicate edge at node " + std::to_string(i));
    }
  }
  graph.edge_count_ = edges.size();
  return graph;
}

std::span<const int> SocialGraph::neighbors(int i) const {
  if (i < 0 || i >= n_nodes()) {
    throw ParameterError("graph: node index " + std::to_string(i) + " out of range");
  }
  return adjacency_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<int, int>> SocialGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_nodes(); ++i) {
    for (int j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool SocialGraph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == adjacency_.size();
}

SocialGraph generate_ba(int n_nodes, int m, std::uint64_t seed) {
  if (m < 1) throw ParameterError("generate_ba: m must be >= 1");
  if (n_nodes <= m) throw ParameterError("generate_ba: n_nodes must be >= m + 1");

  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(static_cast<std::size_t>(n_nodes), 0);
  for (int i = 0; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
      ++degree[i];
      ++degree[j];
    }
  }

  Rng rng(seed);
  std::vector<int> targets;
  targets.reserve(static_cast<std::size_t>(m));
  for (int node = m + 1; node < n_nodes; ++node) {
    // Sequential weighted draws without replacement over existing nodes.
    targets.clear();
    long long remaining = std::accumulate(degree.begin(), degree.begin() + node, 0LL);
    for (int k = 0; k < m; ++k) {
      const long long pick = static_cast<long long>(rng.below(static_cast<std::uint64_t>(remaining)));
      long long acc = 0;
      int chosen = -1;
      for (int u = 0; u < node; ++u) {
        if (std::find(targets.begin(), targets.end(), u) != targets.end()) continue;
        acc += degree[u];
        if (pick < acc) {
          chosen = u;
          break;
        }
      }
      targets.push_back(chosen);
      remaining -= degree[chosen];
    }
    for (int u : targets) {
      edges.emplace_back(u, node);
      ++degree[u];
      ++degree[node];
    }
  }
  return SocialGraph::from_edges(n_nodes, edges);
}

std::map<int, int> degree_histogram(const SocialGraph& graph) {
  std::map<int, int> counts;
  for (int i = 0; i < graph.n_nodes(); ++i) ++counts[graph.degree(i)];
  return counts;
}

SocialGraph load_edge_list(const std::filesystem::path& path, int n_nodes) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open edge list '" + path.string() + "'");
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    // Also accept the "i,j" CSV form written alongside run outputs.
    std::replace(line.begin(), line.end(), ',', ' ');
    if (line.substr(first, 3) == "i j") continue;
    std::istringstream fields(line);
    long long i = 0;
    long long j = 0;
    std::string rest;
    if (!(fields >> i >> j) || (fields >> rest)) {
      throw ParameterError(path.string() + ":" + std::to_string(line_no) +
                           ": expected 'i j'");
    }
    if (i < 0 || j < 0 || i > 1'000'000'000 || j > 1'000'000'000) {
      throw ParameterError(path.string() + ":" + std::to_string(line_no) + ": bad index");
    }
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    max_index = std::max({max_index, static_cast<int>(i), static_cast<int>(j)});
  }
  return SocialGraph::from_edges(n_nodes > 0 ? n_nodes : max_index + 1, edges);
}

void write_edge_list(const SocialGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << "# nodes " << graph.n_nodes() << " edges " << graph.edge_count() << "\n";
  for (const auto& [i, j] : graph.edges()) out << i << ' ' << j << '\n';
}

}  // namespace normsim

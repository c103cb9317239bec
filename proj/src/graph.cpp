#include "theta6/graph.hpp"

#include <algorithm>

namespace theta6 {

GeoGraph GeoGraph::from_edge_set(int n, const std::set<Edge>& set) {
  GeoGraph g;
  g.vertex_count = n;
  g.edges.assign(set.begin(), set.end());
  return g;
}

bool GeoGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

std::vector<int> GeoGraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> GeoGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool GeoGraph::is_subgraph_of(const GeoGraph& other) const {
  if (vertex_count != other.vertex_count) return false;
  return std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

}  // namespace theta6

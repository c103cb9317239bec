#pragma once

#include <set>
#include <utility>
#include <vector>

namespace theta6 {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Undirected geometric graph on an instance's vertices. Edges carry no data
// beyond their endpoints; weights are always derived from coordinates.
struct GeoGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;  // normalized u<v, sorted, unique

  static GeoGraph from_edge_set(int n, const std::set<Edge>& set);

  bool has_edge(int u, int v) const;
  std::size_t edge_count() const { return edges.size(); }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  bool is_subgraph_of(const GeoGraph& other) const;
};

}  // namespace theta6

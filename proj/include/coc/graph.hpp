#ifndef COC_GRAPH_HPP
#define COC_GRAPH_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace coc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Builds a graph from an edge list. Throws Error(invalid_argument) on
  /// loops, parallel edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (sorted). Vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Connected components of the graph restricted to vertices with alive[v] set.
/// Components are sorted internally and ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g, const std::vector<char>& alive);
std::vector<VertexSet> components(const Graph& g);

std::vector<char> mask_of(int n, std::span<const Vertex> vertices);
VertexSet normalized(VertexSet s);

/// N(X) restricted to the vertex set `within` (sorted), excluding X itself.
VertexSet neighborhood_within(const Graph& g, std::span<const Vertex> x,
                              std::span<const Vertex> within);

}  // namespace coc

#endif

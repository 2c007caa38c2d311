#ifndef COC_PACKING_HPP
#define COC_PACKING_HPP

#include <span>
#include <vector>

#include "coc/caterpillar.hpp"

namespace coc {

/// A packed subgraph: spine interval [first, last] of one component together
/// with every pendant of those spine vertices.
struct PackedGraph {
  int component = 0;
  int first = 0;
  int last = 0;
  int units = 1;  // number of solution-tight graphs merged into this one
  VertexSet vertices;  // sorted

  friend bool operator==(const PackedGraph&, const PackedGraph&) = default;
};

struct Packing {
  int alpha = 1;
  std::vector<std::vector<PackedGraph>> per_component;
  /// Solution-tight graphs not absorbed into a merged graph (empty for alpha = 1).
  std::vector<std::vector<PackedGraph>> leftover;

  std::size_t size() const;
  /// All graphs, component by component, left to right.
  std::vector<PackedGraph> flat() const;

  friend bool operator==(const Packing&, const Packing&) = default;
};

/// Greedy left-to-right packing of one caterpillar: repeatedly cut the
/// shortest spine prefix whose closed pendant set has at least d+1 vertices.
std::vector<PackedGraph> pack_caterpillar(const Caterpillar& c, int d, int component = 0);

Packing solution_tight_packing(const CaterpillarStructure& cs, int d);

/// Merges consecutive groups of alpha graphs per component.
Packing merged_packing(const Packing& tight, int alpha);

/// True iff w is exactly the union of some packed graphs.
bool is_merged_graph(const Packing& tight, std::span<const Vertex> w);

/// True iff the packing of the caterpillar covers every vertex.
bool packing_is_full(const Caterpillar& c, int d);

/// The caterpillar consisting of spine[first..last] and their pendants.
Caterpillar subcaterpillar(const Caterpillar& c, int first, int last);

}  // namespace coc

#endif

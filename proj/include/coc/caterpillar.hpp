#ifndef COC_CATERPILLAR_HPP
#define COC_CATERPILLAR_HPP

#include <span>
#include <vector>

#include "coc/graph.hpp"

namespace coc {

/// One caterpillar with a fixed, ordered spine. pendants[i] lists the
/// pendant vertices hanging off spine[i].
struct Caterpillar {
  VertexSet spine;  // ordered left to right, not sorted
  std::vector<VertexSet> pendants;

  int spine_length() const { return static_cast<int>(spine.size()); }
  int size() const;
  VertexSet vertices() const;  // sorted

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

/// Spines and pendant maps for every component of G - M, plus per-vertex
/// lookups. Components are ordered by their smallest vertex id.
class CaterpillarStructure {
 public:
  CaterpillarStructure() = default;
  CaterpillarStructure(int n, std::vector<Caterpillar> components);

  const std::vector<Caterpillar>& components() const { return components_; }
  const Caterpillar& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
  int component_count() const { return static_cast<int>(components_.size()); }

  /// -1 for vertices outside the forest (modulator).
  int component_of(Vertex v) const { return component_of_[static_cast<std::size_t>(v)]; }
  /// Spine index of v, or of its parent when v is a pendant.
  int spine_position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  bool is_spine(Vertex v) const { return parent_[static_cast<std::size_t>(v)] < 0 && component_of(v) >= 0; }
  /// Parent spine vertex of a pendant, -1 otherwise.
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  int vertex_count() const { return static_cast<int>(component_of_.size()); }
  int total_spine_length() const;

  friend bool operator==(const CaterpillarStructure&, const CaterpillarStructure&) = default;

 private:
  std::vector<Caterpillar> components_;
  std::vector<int> component_of_;
  std::vector<int> position_;
  std::vector<Vertex> parent_;
};

/// Recognizes G - modulator as a caterpillar forest. The spine of each
/// component is a longest path; its left end is the endpoint with the smaller
/// id. Throws NotCaterpillar naming the first offending component.
CaterpillarStructure recognize_caterpillar_forest(const Graph& g, std::span<const Vertex> modulator);

/// Recognizes a single connected caterpillar on the given vertex set.
Caterpillar recognize_caterpillar(const Graph& g, std::span<const Vertex> vertices, int component_index = 0);

/// The caterpillar on `vertices` (sorted, connected) with the given spine
/// order. Throws NotCaterpillar if the spine is not an induced path or some
/// other vertex is not a leaf hanging off it.
Caterpillar caterpillar_with_spine(const Graph& g, std::span<const Vertex> vertices, std::span<const Vertex> spine,
                                   int component_index = 0);

/// Standalone graph of a caterpillar whose vertex ids are exactly 0..size-1.
Graph caterpillar_graph(const Caterpillar& c);

/// Checks the structural invariants against the graph: spines are paths,
/// pendants are leaves of their parent, components match G - M.
bool structure_matches(const Graph& g, std::span<const Vertex> modulator, const CaterpillarStructure& cs);

}  // namespace coc

#endif

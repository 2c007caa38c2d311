#ifndef COC_INSTANCE_HPP
#define COC_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coc/graph.hpp"

namespace coc {

/// A COC instance: graph, component-size bound d, budget k (may be negative)
/// and a modulator M.
struct Instance {
  Graph graph;
  int d = 1;
  std::int64_t k = 0;
  VertexSet modulator;

  int n() const { return graph.n(); }
  std::vector<char> modulator_mask() const { return mask_of(graph.n(), modulator); }
  /// Vertices outside the modulator, ascending.
  VertexSet free_vertices() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Instance with annotation pairs over the modulator: every pair must be hit
/// by the solution.
struct AnnotatedInstance {
  Instance base;
  std::vector<Edge> annotations;  // (u, v) with u < v, sorted

  friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

/// Throws ParseError with the offending line number.
Instance parse_instance(std::string_view text);
AnnotatedInstance parse_annotated_instance(std::string_view text);

/// Canonical text: header, sorted modulator line (omitted when empty),
/// lexicographically sorted edges, then annotations.
std::string write_instance(const Instance& inst);
std::string write_annotated_instance(const AnnotatedInstance& inst);

Instance read_instance_file(const std::string& path);
AnnotatedInstance read_annotated_instance_file(const std::string& path);

}  // namespace coc

#endif

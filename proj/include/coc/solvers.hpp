#ifndef COC_SOLVERS_HPP
#define COC_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coc/caterpillar.hpp"
#include "coc/instance.hpp"

namespace coc {

inline constexpr int kBruteForceLimit = 24;
inline constexpr int kBlockingEnumerationLimit = 16;
/// Hard ceiling for the bitmask enumerator, even with an explicit override.
inline constexpr int kBruteForceCeiling = 62;

struct Solution {
  VertexSet vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

bool is_dcoc_set(const Graph& g, int d, std::span<const Vertex> s);

/// Exact minimum d-coc set by enumerating subsets by increasing size, then
/// lexicographically. Throws Error(too_large) when n exceeds max_n.
Solution opt_brute(const Graph& g, int d, int max_n = kBruteForceLimit);

/// Smallest d-coc set of size at most max_size (same order as opt_brute),
/// or nullopt. Only subsets up to max_size are enumerated.
std::optional<Solution> find_dcoc_set(const Graph& g, int d, std::int64_t max_size,
                                      int max_n = kBruteForceLimit);

/// Every minimum d-coc set, in lexicographic order.
std::vector<VertexSet> all_minimum_dcoc_sets(const Graph& g, int d, int max_n = kBruteForceLimit);

int opt_caterpillar_forest(const CaterpillarStructure& cs, int d);

/// Graph classes with a polynomial opt oracle.
enum class GraphClass { caterpillar_forest, cycles_and_caterpillars };

/// Minimal blocking set size bound of the class.
int blocking_bound(GraphClass cls);

/// opt of the subgraph induced by `vertices` (sorted), which must lie in the
/// class. Throws NotCaterpillar / Error(class_violation) otherwise.
int opt_induced(const Graph& g, std::span<const Vertex> vertices, int d, GraphClass cls);

/// X is blocking iff no minimum d-coc set of g contains X, decided as
/// opt(g - X) + |X| > opt(g) with the class oracle.
bool is_blocking_set(const Graph& g, int d, std::span<const Vertex> x, GraphClass cls);

/// All inclusion-minimal blocking sets, ordered by size then lexicographically.
std::vector<VertexSet> enumerate_minimal_blocking_sets(const Graph& g, int d,
                                                       int max_n = kBlockingEnumerationLimit);

struct BranchResult {
  bool yes = false;
  VertexSet witness;
  std::uint64_t colorings_tried = 0;
};

/// Decides an instance whose modulator is a vertex cover by branching over
/// all colorings of M with colors 0..|M|. Throws Error(modulator_not_vc).
BranchResult solve_vc_branching(const Instance& inst);

}  // namespace coc

#endif

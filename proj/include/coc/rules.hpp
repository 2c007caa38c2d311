#ifndef COC_RULES_HPP
#define COC_RULES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coc/caterpillar.hpp"
#include "coc/instance.hpp"
#include "coc/monoid.hpp"
#include "coc/packing.hpp"
#include "coc/solvers.hpp"

namespace coc {

using Chunk = VertexSet;

/// Nonempty subsets of the modulator of size at most b, by size then
/// lexicographically.
std::vector<Chunk> make_chunks(std::span<const Vertex> modulator, int b);

/// |N_H(X)| + opt(H - N_H(X)) - opt(H) for the subgraph H induced by h.
int conflict(const Graph& g, const Chunk& x, std::span<const Vertex> h, int d, GraphClass cls);

struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // per left vertex, sorted right ids
};

struct ConflictGraph {
  std::vector<Chunk> chunks;
  std::vector<VertexSet> components;
  Bipartite graph;
};

ConflictGraph build_conflict_graph(const Instance& inst, int b, GraphClass cls);

struct Expansion {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<std::vector<int>> assignment;  // per x member, its q partners
};

/// Nonempty X, Y with a q-expansion of X into Y, |Y| = q|X| and N(Y) inside X.
/// Needs |B| >= q|A| and no isolated right vertex; throws Error(precondition).
Expansion q_expansion(const Bipartite& g, int q);

struct Rule1Result {
  Instance instance;
  std::vector<Vertex> origin;  // new vertex -> input vertex
  int components_before = 0;
  int components_after = 0;
  int deleted_components = 0;
  int expansions = 0;
  std::vector<std::string> trace;
};

/// Deletes whole components of G - M that become isolated in the conflict
/// graph while q-expansions with q = (d-1)b+1 are peeled off.
Rule1Result rule1_reduce_components(const Instance& inst, int b, GraphClass cls);

/// Keeps the components whose vertices all survive in `origin`.
CaterpillarStructure restrict_structure(const CaterpillarStructure& cs, const std::vector<Vertex>& origin);

struct Rule2Constants {
  std::int64_t small_alpha = 0;  // d^3 + 1
  std::int64_t c_p = 0;          // (d^3 + 1)(2d|M| + 1)
  std::int64_t threshold = 0;    // |M|^2 (|M| + 2(d-1))
  std::int64_t mark_quota = 0;   // |M| + 2(d-1)
};

Rule2Constants rule2_constants(int d, int m);

bool rule2_applicable(const Instance& inst, const CaterpillarStructure& cs);

struct MarkResult {
  std::vector<PackedGraph> hosts;  // the c_p-merged packing, flattened
  std::vector<char> marked;
  int picked = -1;
};

/// Marks up to |M| + 2(d-1) conflicting hosts per chunk (in host order) and
/// picks the first unmarked host. Throws Error(not_applicable).
MarkResult mark_and_pick(const Instance& inst, const CaterpillarStructure& cs);

/// First (d^3+1)-merged graph inside the host such that every modulator
/// neighbour has d neighbours in the host on each side of it.
PackedGraph find_replaceable_subgraph(const Instance& inst, const CaterpillarStructure& cs,
                                      const PackedGraph& host);

struct Replacement {
  Instance instance;
  CaterpillarStructure structure;
  std::vector<Vertex> origin;  // new vertex -> input vertex, -1 for new ones
};

/// Cuts out the packed subgraph and splices in the caterpillar between its
/// left and right spine neighbours. k and M are carried over unchanged.
Replacement replace_subcaterpillar(const Instance& inst, const CaterpillarStructure& cs,
                                   const PackedGraph& target, const Caterpillar& replacement);

struct Rule2Result {
  Instance instance;
  CaterpillarStructure structure;
  std::vector<Vertex> origin;
  PackedGraph host;
  PackedGraph target;
  MonoidFn gamma = MonoidFn::identity(1);
  Caterpillar replacement;
  int opt_target = 0;
  int opt_replacement = 0;
  std::vector<std::string> trace;
};

/// One application of the spine replacement rule. Throws Error(not_applicable).
Rule2Result rule2_replace_spine(const Instance& inst, const CaterpillarStructure& cs);
Rule2Result rule2_replace_spine(const Instance& inst);

}  // namespace coc

#endif

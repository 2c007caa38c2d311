#include "coc/caterpillar.hpp"

#include <algorithm>
#include <cstdlib>

#include "coc/error.hpp"

namespace coc {

int Caterpillar::size() const {
  int total = spine_length();
  for (const auto& p : pendants) total += static_cast<int>(p.size());
  return total;
}

VertexSet Caterpillar::vertices() const {
  VertexSet out(spine.begin(), spine.end());
  for (const auto& p : pendants) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

CaterpillarStructure::CaterpillarStructure(int n, std::vector<Caterpillar> components)
    : components_(std::move(components)),
      component_of_(static_cast<std::size_t>(n), -1),
      position_(static_cast<std::size_t>(n), -1),
      parent_(static_cast<std::size_t>(n), -1) {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& cat = components_[c];
    COC_ENSURE(cat.pendants.size() == cat.spine.size());
    for (std::size_t i = 0; i < cat.spine.size(); ++i) {
      auto v = static_cast<std::size_t>(cat.spine[i]);
      COC_ENSURE(component_of_[v] < 0);
      component_of_[v] = static_cast<int>(c);
      position_[v] = static_cast<int>(i);
      for (Vertex p : cat.pendants[i]) {
        auto pi = static_cast<std::size_t>(p);
        COC_ENSURE(component_of_[pi] < 0);
        component_of_[pi] = static_cast<int>(c);
        position_[pi] = static_cast<int>(i);
        parent_[pi] = cat.spine[i];
      }
    }
  }
}

int CaterpillarStructure::total_spine_length() const {
  int total = 0;
  for (const auto& c : components_) total += c.spine_length();
  return total;
}

Caterpillar recognize_caterpillar(const Graph& g, std::span<const Vertex> vertices, int component_index) {
  // vertices is sorted and induces a connected subgraph.
  auto inside = [&](Vertex v) { return std::binary_search(vertices.begin(), vertices.end(), v); };
  auto local_degree = [&](Vertex v) {
    int deg = 0;
    for (Vertex w : g.neighbors(v)) deg += inside(w) ? 1 : 0;
    return deg;
  };

  std::size_t edge_ends = 0;
  for (Vertex v : vertices) edge_ends += static_cast<std::size_t>(local_degree(v));
  if (edge_ends / 2 != vertices.size() - 1) throw NotCaterpillar(component_index, "contains a cycle");

  Caterpillar cat;
  if (vertices.size() <= 2) {
    cat.spine.assign(vertices.begin(), vertices.end());
    cat.pendants.assign(cat.spine.size(), {});
    return cat;
  }

  // Removing the leaves of a tree leaves its core; the tree is a caterpillar
  // iff the core is a path.
  VertexSet core;
  for (Vertex v : vertices)
    if (local_degree(v) >= 2) core.push_back(v);
  auto in_core = [&](Vertex v) { return std::binary_search(core.begin(), core.end(), v); };
  auto core_neighbors = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbors(v))
      if (inside(w) && in_core(w)) out.push_back(w);
    return out;
  };

  Vertex start = core.front();
  for (Vertex v : core) {
    auto cn = core_neighbors(v);
    if (cn.size() > 2) throw NotCaterpillar(component_index, "vertex " + std::to_string(v) + " branches");
    if (cn.size() <= 1) {
      start = v;
      break;
    }
  }
  VertexSet path{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : core_neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (path.size() != core.size()) throw NotCaterpillar(component_index, "core is not a path");
  for (Vertex v : core)
    if (core_neighbors(v).size() > 2)
      throw NotCaterpillar(component_index, "vertex " + std::to_string(v) + " branches");

  auto leaves_of = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbors(v))
      if (inside(w) && !in_core(w)) out.push_back(w);
    return out;
  };
  // Extend the core by one leaf at each end to get a longest path.
  auto left_leaves = leaves_of(path.front());
  Vertex left_end = left_leaves.front();
  auto right_leaves = leaves_of(path.back());
  Vertex right_end = -1;
  for (Vertex w : right_leaves)
    if (w != left_end) {
      right_end = w;
      break;
    }
  COC_ENSURE(right_end >= 0);
  cat.spine.push_back(left_end);
  cat.spine.insert(cat.spine.end(), path.begin(), path.end());
  cat.spine.push_back(right_end);
  if (cat.spine.front() > cat.spine.back()) std::reverse(cat.spine.begin(), cat.spine.end());

  cat.pendants.assign(cat.spine.size(), {});
  for (std::size_t i = 1; i + 1 < cat.spine.size(); ++i) {
    for (Vertex w : leaves_of(cat.spine[i]))
      if (w != cat.spine.front() && w != cat.spine.back()) cat.pendants[i].push_back(w);
  }
  return cat;
}

CaterpillarStructure recognize_caterpillar_forest(const Graph& g, std::span<const Vertex> modulator) {
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  for (Vertex v : modulator) alive[static_cast<std::size_t>(v)] = 0;
  auto comps = components(g, alive);
  std::vector<Caterpillar> cats;
  cats.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    cats.push_back(recognize_caterpillar(g, comps[i], static_cast<int>(i)));
  return CaterpillarStructure(g.n(), std::move(cats));
}

Graph caterpillar_graph(const Caterpillar& c) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    if (i + 1 < c.spine.size()) edges.emplace_back(c.spine[i], c.spine[i + 1]);
    for (Vertex p : c.pendants[i]) edges.emplace_back(c.spine[i], p);
  }
  return Graph::from_edges(c.size(), edges);
}

bool structure_matches(const Graph& g, std::span<const Vertex> modulator, const CaterpillarStructure& cs) {
  if (cs.vertex_count() != g.n()) return false;
  auto in_m = mask_of(g.n(), modulator);
  std::vector<char> alive(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) alive[static_cast<std::size_t>(v)] = !in_m[static_cast<std::size_t>(v)];
  auto comps = components(g, alive);
  if (static_cast<int>(comps.size()) != cs.component_count()) return false;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& cat = cs.component(static_cast<int>(c));
    if (cat.vertices() != comps[c]) return false;
    if (cat.spine.empty()) return false;
    for (std::size_t i = 0; i + 1 < cat.spine.size(); ++i)
      if (!g.has_edge(cat.spine[i], cat.spine[i + 1])) return false;
    for (std::size_t i = 0; i < cat.spine.size(); ++i)
      for (Vertex p : cat.pendants[i]) {
        int deg = 0;
        for (Vertex w : g.neighbors(p)) deg += alive[static_cast<std::size_t>(w)] ? 1 : 0;
        if (deg != 1 || !g.has_edge(p, cat.spine[i])) return false;
      }
    // A tree on the component: edge count = vertex count - 1.
    std::size_t ends = 0;
    for (Vertex v : comps[c])
      for (Vertex w : g.neighbors(v)) ends += alive[static_cast<std::size_t>(w)] ? 1 : 0;
    if (ends / 2 + 1 != comps[c].size()) return false;
  }
  return true;
}

}  // namespace coc

namespace coc {

Caterpillar caterpillar_with_spine(const Graph& g, std::span<const Vertex> vertices, std::span<const Vertex> spine,
                                   int component_index) {
  auto in_set = [&](Vertex v) { return std::binary_search(vertices.begin(), vertices.end(), v); };
  if (spine.empty()) throw NotCaterpillar(component_index, "empty spine");
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    Vertex v = spine[i];
    if (v < 0 || v >= g.n() || !in_set(v)) throw NotCaterpillar(component_index, "spine vertex outside component");
    if (pos[static_cast<std::size_t>(v)] >= 0) throw NotCaterpillar(component_index, "spine repeats a vertex");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Caterpillar c;
  c.spine.assign(spine.begin(), spine.end());
  c.pendants.assign(spine.size(), {});
  for (Vertex v : vertices) {
    int here = pos[static_cast<std::size_t>(v)];
    int spine_nbrs = 0;
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v)) {
      if (!in_set(u)) continue;
      int there = pos[static_cast<std::size_t>(u)];
      if (here >= 0 && there >= 0 && std::abs(here - there) != 1)
        throw NotCaterpillar(component_index, "spine is not an induced path");
      if (here < 0 && there < 0) throw NotCaterpillar(component_index, "vertex off the spine has a non-spine neighbour");
      if (there >= 0) {
        ++spine_nbrs;
        parent = u;
      }
    }
    if (here >= 0) {
      int expect = (here > 0) + (here + 1 < static_cast<int>(spine.size()));
      if (spine_nbrs != expect) throw NotCaterpillar(component_index, "spine is not a path");
    } else {
      if (spine_nbrs != 1) throw NotCaterpillar(component_index, "vertex off the spine is not a pendant");
      c.pendants[static_cast<std::size_t>(pos[static_cast<std::size_t>(parent)])].push_back(v);
    }
  }
  return c;
}

}  // namespace coc

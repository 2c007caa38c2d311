#include "coc/graph.hpp"

#include <algorithm>
#include <string>

#include "coc/error.hpp"

namespace coc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse: return "parse error";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::not_caterpillar: return "not a caterpillar forest";
    case Errc::class_violation: return "graph class violation";
    case Errc::too_large: return "instance too large";
    case Errc::precondition: return "precondition failed";
    case Errc::not_applicable: return "rule not applicable";
    case Errc::modulator_not_vc: return "modulator is not a vertex cover";
    case Errc::packing_not_full: return "packing does not cover the caterpillar";
    case Errc::internal: return "internal error";
    case Errc::io: return "i/o error";
  }
  return "unknown error";
}

void invariant_failure(const char* expr, const char* file, int line) {
  throw Error(Errc::internal, std::string("invariant violated: ") + expr + " (" + file + ":" +
                                  std::to_string(line) + ")");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::invalid_argument,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (u == v) throw Error(Errc::invalid_argument, "loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < g.adj_.size(); ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end())
      throw Error(Errc::invalid_argument, "duplicate edge " + std::to_string(v) + " " +
                                              std::to_string(*dup));
  }
  return g;
}

std::size_t Graph::m() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : neighbors(keep[i])) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (j >= 0) h.adj_[i].push_back(j);
    }
    std::sort(h.adj_[i].begin(), h.adj_[i].end());
  }
  return h;
}

std::vector<VertexSet> components(const Graph& g, const std::vector<char>& alive) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (alive[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
}

std::vector<char> mask_of(int n, std::span<const Vertex> vertices) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : vertices) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet neighborhood_within(const Graph& g, std::span<const Vertex> x,
                              std::span<const Vertex> within) {
  VertexSet out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (std::binary_search(within.begin(), within.end(), w) &&
          !std::binary_search(x.begin(), x.end(), w))
        out.push_back(w);
  return normalized(std::move(out));
}

}  // namespace coc

#include "coc/solvers.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "coc/error.hpp"
#include "coc/packing.hpp"

namespace coc {

namespace {

using Mask = std::uint64_t;

struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g) : n(g.n()), adj(static_cast<std::size_t>(g.n()), 0) {
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
  }

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

  bool small_components(Mask removed, int d) const {
    Mask remaining = all() & ~removed;
    while (remaining) {
      Mask comp = remaining & (~remaining + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= remaining & ~comp;
        comp |= next;
        frontier = next;
        if (std::popcount(comp) > d) return false;
      }
      remaining &= ~comp;
    }
    return true;
  }
};

void check_size(const Graph& g, int max_n) {
  int cap = std::min(max_n, kBruteForceCeiling);
  if (g.n() > cap)
    throw Error(Errc::too_large, "brute force limited to " + std::to_string(cap) + " vertices, got " +
                                     std::to_string(g.n()));
}

// Visits the size-s subsets of {0..n-1} in lexicographic order until the
// visitor returns true.
template <typename F>
bool for_each_subset_of_size(int n, int s, F&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (visit(m)) return true;
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

bool is_dcoc_set(const Graph& g, int d, std::span<const Vertex> s) {
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  for (Vertex v : s) alive[static_cast<std::size_t>(v)] = 0;
  for (const auto& c : components(g, alive))
    if (static_cast<int>(c.size()) > d) return false;
  return true;
}

std::optional<Solution> find_dcoc_set(const Graph& g, int d, std::int64_t max_size, int max_n) {
  check_size(g, max_n);
  BitGraph bg(g);
  std::int64_t limit = std::min<std::int64_t>(max_size, g.n());
  for (int s = 0; s <= limit; ++s) {
    Mask found = 0;
    bool ok = for_each_subset_of_size(g.n(), s, [&](Mask m) {
      if (bg.small_components(m, d)) {
        found = m;
        return true;
      }
      return false;
    });
    if (ok) return Solution{to_set(found)};
  }
  return std::nullopt;
}

Solution opt_brute(const Graph& g, int d, int max_n) {
  auto s = find_dcoc_set(g, d, g.n(), max_n);
  COC_ENSURE(s.has_value());
  return *s;
}

std::vector<VertexSet> all_minimum_dcoc_sets(const Graph& g, int d, int max_n) {
  int opt = opt_brute(g, d, max_n).size();
  BitGraph bg(g);
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.n(), opt, [&](Mask m) {
    if (bg.small_components(m, d)) out.push_back(to_set(m));
    return false;
  });
  return out;
}

int opt_caterpillar_forest(const CaterpillarStructure& cs, int d) {
  return static_cast<int>(solution_tight_packing(cs, d).size());
}

int blocking_bound(GraphClass cls) { return cls == GraphClass::caterpillar_forest ? 2 : 3; }

int opt_induced(const Graph& g, std::span<const Vertex> vertices, int d, GraphClass cls) {
  Graph h = g.induced(vertices);
  int total = 0;
  auto comps = components(h);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    int size = static_cast<int>(c.size());
    if (cls == GraphClass::cycles_and_caterpillars && size >= 3) {
      bool cycle = std::all_of(c.begin(), c.end(), [&](Vertex v) { return h.degree(v) == 2; });
      if (cycle) {
        // One deletion opens the cycle into a path on size-1 vertices.
        total += size > d ? 1 + (size - 1) / (d + 1) : 0;
        continue;
      }
    }
    Caterpillar cat;
    try {
      cat = recognize_caterpillar(h, c, static_cast<int>(i));
    } catch (const NotCaterpillar& e) {
      if (cls == GraphClass::caterpillar_forest) throw;
      throw Error(Errc::class_violation, e.what());
    }
    total += static_cast<int>(pack_caterpillar(cat, d).size());
  }
  return total;
}

bool is_blocking_set(const Graph& g, int d, std::span<const Vertex> x, GraphClass cls) {
  if (x.empty()) return false;
  VertexSet all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  auto in_x = mask_of(g.n(), x);
  VertexSet rest;
  for (Vertex v : all)
    if (!in_x[static_cast<std::size_t>(v)]) rest.push_back(v);
  return opt_induced(g, rest, d, cls) + static_cast<int>(x.size()) > opt_induced(g, all, d, cls);
}

std::vector<VertexSet> enumerate_minimal_blocking_sets(const Graph& g, int d, int max_n) {
  if (g.n() > max_n)
    throw Error(Errc::too_large, "blocking-set enumeration limited to " + std::to_string(max_n) +
                                     " vertices, got " + std::to_string(g.n()));
  const int n = g.n();
  // A set is non-blocking iff it lies inside some minimum solution.
  std::vector<char> non_blocking(std::size_t{1} << n, 0);
  for (const auto& sol : all_minimum_dcoc_sets(g, d, max_n)) {
    Mask full = 0;
    for (Vertex v : sol) full |= Mask{1} << v;
    for (Mask sub = full;; sub = (sub - 1) & full) {
      non_blocking[sub] = 1;
      if (sub == 0) break;
    }
  }
  std::vector<VertexSet> out;
  for (int s = 1; s <= n; ++s) {
    for_each_subset_of_size(n, s, [&](Mask m) {
      if (non_blocking[m]) return false;
      for (Mask f = m; f; f &= f - 1)
        if (!non_blocking[m & ~(f & (~f + 1))]) return false;
      out.push_back(to_set(m));
      return false;
    });
  }
  return out;
}

BranchResult solve_vc_branching(const Instance& inst) {
  const Graph& g = inst.graph;
  auto in_m = inst.modulator_mask();
  for (auto [u, v] : g.edges())
    if (!in_m[static_cast<std::size_t>(u)] && !in_m[static_cast<std::size_t>(v)])
      throw Error(Errc::modulator_not_vc, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                              " avoids the modulator");
  BranchResult result;
  if (inst.k < 0) return result;
  const auto& m = inst.modulator;
  const int colors = static_cast<int>(m.size()) + 1;
  std::vector<int> color_of(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> digits(m.size(), 0);
  VertexSet free = inst.free_vertices();

  while (true) {
    ++result.colorings_tried;
    for (std::size_t i = 0; i < m.size(); ++i) color_of[static_cast<std::size_t>(m[i])] = digits[i];
    VertexSet s2;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (digits[i] == 0) s2.push_back(m[i]);
    bool over = static_cast<std::int64_t>(s2.size()) > inst.k;
    for (std::size_t i = 0; i < free.size() && !over; ++i) {
      Vertex w = free[i];
      int seen = 0;
      bool split = false;
      for (Vertex u : g.neighbors(w)) {
        int c = color_of[static_cast<std::size_t>(u)];
        if (c == 0) continue;
        if (seen == 0) seen = c;
        else if (c != seen) split = true;
      }
      if (split) {
        s2.push_back(w);
        over = static_cast<std::int64_t>(s2.size()) > inst.k;
      }
    }
    if (!over && is_dcoc_set(g, inst.d, s2)) {
      result.yes = true;
      result.witness = normalized(std::move(s2));
      return result;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == colors) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return result;
}

}  // namespace coc

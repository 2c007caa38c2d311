#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace oracle {

bool leaves_small_components(const Graph& g, int d, std::uint64_t removed) {
  const int n = g.n();
  std::uint64_t seen = removed;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen >> s & 1) continue;
    int size = 0;
    stack.assign(1, s);
    seen |= std::uint64_t{1} << s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (++size > d) return false;
      for (int u : g.neighbors(v))
        if (!(seen >> u & 1)) {
          seen |= std::uint64_t{1} << u;
          stack.push_back(u);
        }
    }
  }
  return true;
}

namespace {

// Calls visit on every n-bit mask with exactly `size` bits (Gosper's hack).
template <class F>
bool for_each_mask(int n, int size, F&& visit) {
  if (size == 0) return visit(std::uint64_t{0});
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (visit(mask)) return true;
    std::uint64_t c = mask & -mask;
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return false;
}

}  // namespace

int brute_opt(const Graph& g, int d) {
  if (g.n() > 30) throw std::length_error("brute_opt oracle capped at 30 vertices");
  for (int size = 0; size <= g.n(); ++size)
    if (for_each_mask(g.n(), size, [&](std::uint64_t m) { return leaves_small_components(g, d, m); })) return size;
  return g.n();
}

bool brute_within(const Graph& g, int d, std::int64_t k) {
  if (g.n() > 30) throw std::length_error("brute_within oracle capped at 30 vertices");
  for (int size = 0; size <= g.n() && size <= k; ++size)
    if (for_each_mask(g.n(), size, [&](std::uint64_t m) { return leaves_small_components(g, d, m); })) return true;
  return false;
}

bool brute_annotated_within(const Graph& g, int d, std::int64_t k, const std::vector<coc::Edge>& annotations) {
  if (g.n() > 30) throw std::length_error("brute_annotated_within oracle capped at 30 vertices");
  auto hits = [&](std::uint64_t m) {
    for (auto [u, v] : annotations)
      if (!((m >> u) & 1) && !((m >> v) & 1)) return false;
    return true;
  };
  for (int size = 0; size <= g.n() && size <= k; ++size)
    if (for_each_mask(g.n(), size, [&](std::uint64_t m) { return hits(m) && leaves_small_components(g, d, m); }))
      return true;
  return false;
}

std::vector<std::uint64_t> brute_minimum_sets(const Graph& g, int d) {
  int opt = brute_opt(g, d);
  std::vector<std::uint64_t> out;
  for_each_mask(g.n(), opt, [&](std::uint64_t m) {
    if (leaves_small_components(g, d, m)) out.push_back(m);
    return false;
  });
  return out;
}

int forest_opt(const Graph& g, int d) {
  const int n = g.n();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<int> parent(n, -2), order;
  for (int r = 0; r < n; ++r) {
    if (parent[r] != -2) continue;
    parent[r] = -1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int u : g.neighbors(v)) {
        if (u == parent[v]) continue;
        if (parent[u] != -2) throw std::invalid_argument("forest_opt needs a forest");
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  // keep[v][s]: v kept, open component of v inside its subtree has s vertices.
  std::vector<std::vector<int>> keep(n, std::vector<int>(d + 1, inf));
  std::vector<int> del(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<int> cur(d + 1, inf);
    cur[1] = 0;
    int del_cost = 1;
    for (int c : g.neighbors(v)) {
      if (c == parent[v]) continue;
      int best_c = del[c];
      for (int t = 1; t <= d; ++t) best_c = std::min(best_c, keep[c][t]);
      del_cost += best_c;
      std::vector<int> next(d + 1, inf);
      for (int s = 1; s <= d; ++s) {
        if (cur[s] >= inf) continue;
        next[s] = std::min(next[s], cur[s] + del[c]);
        for (int t = 1; s + t <= d; ++t)
          if (keep[c][t] < inf) next[s + t] = std::min(next[s + t], cur[s] + keep[c][t]);
      }
      cur = std::move(next);
    }
    keep[v] = std::move(cur);
    del[v] = del_cost;
  }
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (parent[v] != -1) continue;
    int best = del[v];
    for (int s = 1; s <= d; ++s) best = std::min(best, keep[v][s]);
    total += best;
  }
  return total;
}

int vc_modulator_opt(const Instance& inst) {
  if (inst.d != 1) throw std::invalid_argument("vc_modulator_opt is for d = 1");
  const auto& m = inst.modulator;
  const int size = static_cast<int>(m.size());
  if (size > 20) throw std::length_error("modulator too large");
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t kept = 0; kept < (1u << size); ++kept) {
    std::vector<char> removed(inst.n(), 0);
    bool independent = true;
    int cost = 0;
    for (int i = 0; i < size; ++i) {
      if (kept >> i & 1) continue;
      removed[m[i]] = 1;
      ++cost;
    }
    for (int i = 0; i < size && independent; ++i) {
      if (!(kept >> i & 1)) continue;
      for (int u : inst.graph.neighbors(m[i])) {
        if (std::find(m.begin(), m.end(), u) != m.end()) {
          if (!removed[u]) independent = false;
          continue;
        }
        if (!removed[u]) {
          removed[u] = 1;
          ++cost;
        }
      }
    }
    if (!independent) continue;
    std::vector<int> rest;
    for (int v = 0; v < inst.n(); ++v)
      if (!removed[v] && std::find(m.begin(), m.end(), v) == m.end()) rest.push_back(v);
    cost += forest_opt(inst.graph.induced(rest), 1);
    best = std::min(best, cost);
  }
  return best;
}

std::vector<int> essence_dp(const Caterpillar& c, int d) {
  const int inf = std::numeric_limits<int>::max() / 4;
  auto run = [&](int x, int& opt) {
    // state[s]: min cost with the open component at the current spine vertex of size s.
    std::vector<int> state(d + 1, inf);
    state[0] = 0;  // virtual deleted vertex left of the spine
    for (std::size_t i = 0; i < c.spine.size(); ++i) {
      int pend = static_cast<int>(c.pendants[i].size()) + (i == 0 ? x : 0);
      std::vector<int> next(d + 1, inf);
      for (int s = 0; s <= d; ++s) {
        if (state[s] >= inf) continue;
        next[0] = std::min(next[0], state[s] + 1);
        for (int j = 0; j <= pend; ++j) {
          int size = s + 1 + j;
          if (size > d) break;
          next[size] = std::min(next[size], state[s] + pend - j);
        }
      }
      state = std::move(next);
    }
    opt = *std::min_element(state.begin(), state.end());
    for (int s = 0; s <= d; ++s)
      if (state[s] == opt) return s;
    return d + 1;
  };
  int base = 0;
  run(0, base);
  std::vector<int> gamma(d + 2, d + 1);
  for (int x = 0; x <= d; ++x) {
    int opt = 0;
    int beta = run(x, opt);
    gamma[x] = opt == base ? beta : d + 1;
  }
  return gamma;
}

Caterpillar random_caterpillar(std::mt19937_64& rng, int spine_min, int spine_max, int max_pendants,
                               double density) {
  int len = std::uniform_int_distribution<int>(spine_min, spine_max)(rng);
  std::bernoulli_distribution coin(density);
  Caterpillar c;
  int next = len;
  for (int i = 0; i < len; ++i) {
    c.spine.push_back(i);
    std::vector<int> p;
    for (int j = 0; j < max_pendants; ++j)
      if (coin(rng)) p.push_back(next++);
    c.pendants.push_back(std::move(p));
  }
  return c;
}

Graph random_caterpillar_forest(std::mt19937_64& rng, int components, int spine_max, int max_pendants,
                                double density) {
  std::vector<coc::Edge> edges;
  int n = 0;
  for (int k = 0; k < components; ++k) {
    Caterpillar c = random_caterpillar(rng, 1, spine_max, max_pendants, density);
    for (std::size_t i = 0; i < c.spine.size(); ++i) {
      if (i > 0) edges.emplace_back(n + c.spine[i - 1], n + c.spine[i]);
      for (int p : c.pendants[i]) edges.emplace_back(n + c.spine[i], n + p);
    }
    n += c.size();
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<coc::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

void add_cycle(std::vector<coc::Edge>& edges, int first, int n) {
  for (int i = 0; i < n; ++i) {
    int a = first + i, b = first + (i + 1) % n;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
}

}  // namespace oracle

#include "coc/rules.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "coc/arith.hpp"
#include "coc/error.hpp"
#include "coc/essence.hpp"

namespace coc {

namespace {

std::string join(const VertexSet& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  return out.str();
}

VertexSet set_minus(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int conflict_with_base(const Graph& g, const Chunk& x, std::span<const Vertex> h, int d,
                       GraphClass cls, int base) {
  VertexSet n = neighborhood_within(g, x, h);
  if (n.empty()) return 0;
  VertexSet rest = set_minus(h, n);
  return static_cast<int>(n.size()) + opt_induced(g, rest, d, cls) - base;
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;

struct FlowEdge {
  long capacity = 0;
  long residual = 0;
  FlowTraits::edge_descriptor reverse;
};

using FlowNet = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS,
                                      boost::no_property, FlowEdge>;

void add_arc(FlowNet& net, int u, int v, long cap) {
  auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), net).first;
  auto r = boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(u), net).first;
  net[e].capacity = cap;
  net[r].capacity = 0;
  net[e].reverse = r;
  net[r].reverse = e;
}

}  // namespace

std::vector<Chunk> make_chunks(std::span<const Vertex> modulator, int b) {
  if (b < 1) throw Error(Errc::invalid_argument, "chunk size bound must be at least 1");
  VertexSet m(modulator.begin(), modulator.end());
  std::sort(m.begin(), m.end());
  std::vector<Chunk> out;
  int n = static_cast<int>(m.size());
  for (int size = 1; size <= std::min(b, n); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Chunk c;
      for (int i : idx) c.push_back(m[static_cast<std::size_t>(i)]);
      out.push_back(std::move(c));
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

int conflict(const Graph& g, const Chunk& x, std::span<const Vertex> h, int d, GraphClass cls) {
  return conflict_with_base(g, x, h, d, cls, opt_induced(g, h, d, cls));
}

ConflictGraph build_conflict_graph(const Instance& inst, int b, GraphClass cls) {
  ConflictGraph cg;
  cg.chunks = make_chunks(inst.modulator, b);
  auto mask = inst.modulator_mask();
  std::vector<char> alive(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) alive[i] = !mask[i];
  cg.components = components(inst.graph, alive);
  cg.graph.left = static_cast<int>(cg.chunks.size());
  cg.graph.right = static_cast<int>(cg.components.size());
  cg.graph.adj.assign(cg.chunks.size(), {});
  for (std::size_t j = 0; j < cg.components.size(); ++j) {
    const auto& comp = cg.components[j];
    int base = opt_induced(inst.graph, comp, inst.d, cls);
    for (std::size_t i = 0; i < cg.chunks.size(); ++i) {
      if (conflict_with_base(inst.graph, cg.chunks[i], comp, inst.d, cls, base) > 0)
        cg.graph.adj[i].push_back(static_cast<int>(j));
    }
  }
  return cg;
}

Expansion q_expansion(const Bipartite& g, int q) {
  if (q < 1) throw Error(Errc::invalid_argument, "expansion factor must be at least 1");
  if (g.left == 0) throw Error(Errc::precondition, "expansion needs a nonempty left side");
  if (static_cast<std::int64_t>(g.right) < static_cast<std::int64_t>(q) * g.left)
    throw Error(Errc::precondition, "right side smaller than q times left side");
  std::vector<char> has_neighbor(static_cast<std::size_t>(g.right), 0);
  for (const auto& row : g.adj)
    for (int b : row) has_neighbor[static_cast<std::size_t>(b)] = 1;
  if (std::find(has_neighbor.begin(), has_neighbor.end(), 0) != has_neighbor.end())
    throw Error(Errc::precondition, "right side has an isolated vertex");

  std::vector<char> left_alive(static_cast<std::size_t>(g.left), 1);
  std::vector<char> right_alive(static_cast<std::size_t>(g.right), 1);
  const int s = g.left + g.right;
  const int t = s + 1;
  while (true) {
    FlowNet net(static_cast<std::size_t>(t + 1));
    long active_left = 0;
    for (int a = 0; a < g.left; ++a) {
      if (!left_alive[static_cast<std::size_t>(a)]) continue;
      ++active_left;
      add_arc(net, s, a, q);
      // Capacity above any feasible flow keeps these arcs open in the residual graph.
      for (int b : g.adj[static_cast<std::size_t>(a)])
        if (right_alive[static_cast<std::size_t>(b)]) add_arc(net, a, g.left + b, q + 1);
    }
    for (int b = 0; b < g.right; ++b)
      if (right_alive[static_cast<std::size_t>(b)]) add_arc(net, g.left + b, t, 1);
    COC_ENSURE(active_left > 0);

    long flow = boost::edmonds_karp_max_flow(
        net, static_cast<std::size_t>(s), static_cast<std::size_t>(t),
        boost::capacity_map(boost::get(&FlowEdge::capacity, net))
            .residual_capacity_map(boost::get(&FlowEdge::residual, net))
            .reverse_edge_map(boost::get(&FlowEdge::reverse, net)));

    if (flow == active_left * q) {
      Expansion ex;
      for (int a = 0; a < g.left; ++a) {
        if (!left_alive[static_cast<std::size_t>(a)]) continue;
        ex.x.push_back(a);
        std::vector<int> partners;
        for (auto [it, end] = boost::out_edges(static_cast<std::size_t>(a), net); it != end; ++it) {
          const auto& e = net[*it];
          if (e.capacity > 0 && e.capacity - e.residual > 0)
            partners.push_back(static_cast<int>(boost::target(*it, net)) - g.left);
        }
        std::sort(partners.begin(), partners.end());
        COC_ENSURE(static_cast<int>(partners.size()) == q);
        ex.y.insert(ex.y.end(), partners.begin(), partners.end());
        ex.assignment.push_back(std::move(partners));
      }
      std::sort(ex.y.begin(), ex.y.end());
      return ex;
    }

    // Vertices reachable from s in the residual graph form a Hall violator; drop them.
    std::vector<char> seen(static_cast<std::size_t>(t + 1), 0);
    std::queue<std::size_t> bfs;
    bfs.push(static_cast<std::size_t>(s));
    seen[static_cast<std::size_t>(s)] = 1;
    while (!bfs.empty()) {
      auto u = bfs.front();
      bfs.pop();
      for (auto [it, end] = boost::out_edges(u, net); it != end; ++it) {
        auto v = boost::target(*it, net);
        if (!seen[v] && net[*it].residual > 0) {
          seen[v] = 1;
          bfs.push(v);
        }
      }
    }
    bool removed = false;
    for (int a = 0; a < g.left; ++a)
      if (left_alive[static_cast<std::size_t>(a)] && seen[static_cast<std::size_t>(a)]) {
        left_alive[static_cast<std::size_t>(a)] = 0;
        removed = true;
      }
    for (int b = 0; b < g.right; ++b)
      if (seen[static_cast<std::size_t>(g.left + b)]) right_alive[static_cast<std::size_t>(b)] = 0;
    COC_ENSURE(removed);
  }
}

Rule1Result rule1_reduce_components(const Instance& inst, int b, GraphClass cls) {
  const int q = (inst.d - 1) * b + 1;
  ConflictGraph cg = build_conflict_graph(inst, b, cls);
  Rule1Result res;
  res.components_before = static_cast<int>(cg.components.size());

  std::vector<char> left_alive(cg.chunks.size(), 1);
  std::vector<char> right_alive(cg.components.size(), 1);
  std::vector<char> deleted(cg.components.size(), 0);
  std::int64_t k = inst.k;

  while (true) {
    std::vector<int> degree(cg.components.size(), 0);
    for (std::size_t a = 0; a < cg.chunks.size(); ++a) {
      if (!left_alive[a]) continue;
      for (int c : cg.graph.adj[a]) ++degree[static_cast<std::size_t>(c)];
    }
    for (std::size_t c = 0; c < cg.components.size(); ++c) {
      if (!right_alive[c] || degree[c] > 0) continue;
      right_alive[c] = 0;
      deleted[c] = 1;
      int opt = opt_induced(inst.graph, cg.components[c], inst.d, cls);
      k -= opt;
      ++res.deleted_components;
      res.trace.push_back("rule1 delete component {" + join(cg.components[c]) + "} opt " + std::to_string(opt));
    }

    std::vector<int> lefts, rights;
    for (std::size_t a = 0; a < cg.chunks.size(); ++a)
      if (left_alive[a]) lefts.push_back(static_cast<int>(a));
    for (std::size_t c = 0; c < cg.components.size(); ++c)
      if (right_alive[c]) rights.push_back(static_cast<int>(c));
    // With no chunks left every component was isolated and deleted above.
    if (lefts.empty() || static_cast<std::int64_t>(rights.size()) < static_cast<std::int64_t>(q) * static_cast<std::int64_t>(lefts.size()))
      break;

    std::vector<int> right_index(cg.components.size(), -1);
    for (std::size_t i = 0; i < rights.size(); ++i) right_index[static_cast<std::size_t>(rights[i])] = static_cast<int>(i);
    Bipartite sub;
    sub.left = static_cast<int>(lefts.size());
    sub.right = static_cast<int>(rights.size());
    for (int a : lefts) {
      std::vector<int> row;
      for (int c : cg.graph.adj[static_cast<std::size_t>(a)])
        if (right_index[static_cast<std::size_t>(c)] >= 0) row.push_back(right_index[static_cast<std::size_t>(c)]);
      sub.adj.push_back(std::move(row));
    }
    Expansion ex = q_expansion(sub, q);
    ++res.expansions;
    std::ostringstream line;
    line << "rule1 expansion q " << q << " chunks";
    for (int a : ex.x) {
      left_alive[static_cast<std::size_t>(lefts[static_cast<std::size_t>(a)])] = 0;
      line << " {" << join(cg.chunks[static_cast<std::size_t>(lefts[static_cast<std::size_t>(a)])]) << "}";
    }
    for (int c : ex.y) right_alive[static_cast<std::size_t>(rights[static_cast<std::size_t>(c)])] = 0;
    line << " components " << ex.y.size();
    res.trace.push_back(line.str());
  }

  std::vector<char> drop(static_cast<std::size_t>(inst.n()), 0);
  for (std::size_t c = 0; c < cg.components.size(); ++c)
    if (deleted[c])
      for (Vertex v : cg.components[c]) drop[static_cast<std::size_t>(v)] = 1;
  std::vector<int> new_id(static_cast<std::size_t>(inst.n()), -1);
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (drop[static_cast<std::size_t>(v)]) continue;
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(res.origin.size());
    res.origin.push_back(v);
  }
  res.instance.graph = inst.graph.induced(res.origin);
  res.instance.d = inst.d;
  res.instance.k = k;
  for (Vertex v : inst.modulator) res.instance.modulator.push_back(new_id[static_cast<std::size_t>(v)]);
  std::sort(res.instance.modulator.begin(), res.instance.modulator.end());
  res.components_after = res.components_before - res.deleted_components;
  return res;
}

CaterpillarStructure restrict_structure(const CaterpillarStructure& cs, const std::vector<Vertex>& origin) {
  std::vector<int> new_id(static_cast<std::size_t>(cs.vertex_count()), -1);
  for (std::size_t i = 0; i < origin.size(); ++i)
    if (origin[i] >= 0) new_id[static_cast<std::size_t>(origin[i])] = static_cast<int>(i);
  std::vector<Caterpillar> kept;
  for (const auto& c : cs.components()) {
    auto vs = c.vertices();
    bool all = std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return new_id[static_cast<std::size_t>(v)] >= 0; });
    if (!all) {
      COC_ENSURE(std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return new_id[static_cast<std::size_t>(v)] >= 0; }));
      continue;
    }
    Caterpillar m;
    for (std::size_t i = 0; i < c.spine.size(); ++i) {
      m.spine.push_back(new_id[static_cast<std::size_t>(c.spine[i])]);
      VertexSet p;
      for (Vertex v : c.pendants[i]) p.push_back(new_id[static_cast<std::size_t>(v)]);
      m.pendants.push_back(std::move(p));
    }
    kept.push_back(std::move(m));
  }
  return CaterpillarStructure(static_cast<int>(origin.size()), std::move(kept));
}

Rule2Constants rule2_constants(int d, int m) {
  Rule2Constants c;
  c.small_alpha = sat_add(sat_pow(d, 3), 1);
  c.c_p = sat_mul(c.small_alpha, sat_add(sat_mul(sat_mul(2, d), m), 1));
  c.mark_quota = sat_add(m, sat_mul(2, d - 1));
  c.threshold = sat_mul(sat_mul(m, m), c.mark_quota);
  return c;
}

namespace {

std::vector<PackedGraph> hosts_of(const Instance& inst, const CaterpillarStructure& cs, const Rule2Constants& rc) {
  if (rc.c_p > INT_MAX) return {};
  return merged_packing(solution_tight_packing(cs, inst.d), static_cast<int>(rc.c_p)).flat();
}

}  // namespace

bool rule2_applicable(const Instance& inst, const CaterpillarStructure& cs) {
  auto rc = rule2_constants(inst.d, static_cast<int>(inst.modulator.size()));
  return static_cast<std::int64_t>(hosts_of(inst, cs, rc).size()) > rc.threshold;
}

MarkResult mark_and_pick(const Instance& inst, const CaterpillarStructure& cs) {
  auto rc = rule2_constants(inst.d, static_cast<int>(inst.modulator.size()));
  MarkResult res;
  res.hosts = hosts_of(inst, cs, rc);
  if (static_cast<std::int64_t>(res.hosts.size()) <= rc.threshold)
    throw Error(Errc::not_applicable, "too few merged graphs for spine replacement");
  res.marked.assign(res.hosts.size(), 0);
  std::vector<int> base(res.hosts.size());
  for (std::size_t h = 0; h < res.hosts.size(); ++h)
    base[h] = opt_induced(inst.graph, res.hosts[h].vertices, inst.d, GraphClass::caterpillar_forest);
  for (const auto& x : make_chunks(inst.modulator, 2)) {
    std::int64_t count = 0;
    for (std::size_t h = 0; h < res.hosts.size() && count < rc.mark_quota; ++h) {
      if (conflict_with_base(inst.graph, x, res.hosts[h].vertices, inst.d, GraphClass::caterpillar_forest, base[h]) > 0) {
        res.marked[h] = 1;
        ++count;
      }
    }
  }
  for (std::size_t h = 0; h < res.hosts.size(); ++h)
    if (!res.marked[h]) {
      res.picked = static_cast<int>(h);
      break;
    }
  COC_ENSURE(res.picked >= 0);
  return res;
}

PackedGraph find_replaceable_subgraph(const Instance& inst, const CaterpillarStructure& cs, const PackedGraph& host) {
  auto rc = rule2_constants(inst.d, static_cast<int>(inst.modulator.size()));
  const auto alpha = static_cast<std::size_t>(rc.small_alpha);
  std::vector<PackedGraph> inside;
  for (auto& p : pack_caterpillar(cs.component(host.component), inst.d, host.component))
    if (p.first >= host.first && p.last <= host.last) inside.push_back(std::move(p));

  auto in_m = inst.modulator_mask();
  for (std::size_t g = 0; g + alpha <= inside.size(); g += alpha) {
    PackedGraph p{host.component, inside[g].first, inside[g + alpha - 1].last, static_cast<int>(alpha), {}};
    for (std::size_t j = g; j < g + alpha; ++j)
      p.vertices.insert(p.vertices.end(), inside[j].vertices.begin(), inside[j].vertices.end());
    std::sort(p.vertices.begin(), p.vertices.end());

    VertexSet touching;
    for (Vertex v : p.vertices)
      for (Vertex u : inst.graph.neighbors(v))
        if (in_m[static_cast<std::size_t>(u)]) touching.push_back(u);
    touching = normalized(std::move(touching));

    bool ok = true;
    for (Vertex m : touching) {
      int left = 0, right = 0;
      for (Vertex u : inst.graph.neighbors(m)) {
        if (cs.component_of(u) != host.component) continue;
        int pos = cs.spine_position(u);
        if (pos >= host.first && pos < p.first) ++left;
        if (pos > p.last && pos <= host.last) ++right;
      }
      if (left < inst.d || right < inst.d) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  invariant_failure("replaceable subgraph exists in an unmarked host", __FILE__, __LINE__);
}

Replacement replace_subcaterpillar(const Instance& inst, const CaterpillarStructure& cs,
                                   const PackedGraph& target, const Caterpillar& replacement) {
  const Caterpillar& comp = cs.component(target.component);
  COC_ENSURE(target.first >= 0 && target.first <= target.last && target.last < comp.spine_length());
  Caterpillar r = relabelled(replacement);
  COC_ENSURE(r.spine_length() > 0);

  std::vector<char> removed(static_cast<std::size_t>(inst.n()), 0);
  for (Vertex v : target.vertices) removed[static_cast<std::size_t>(v)] = 1;

  Replacement out;
  std::vector<int> new_id(static_cast<std::size_t>(inst.n()), -1);
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.origin.size());
    out.origin.push_back(v);
  }
  const int shift = static_cast<int>(out.origin.size());
  const int n = shift + r.size();
  out.origin.resize(static_cast<std::size_t>(n), -1);

  std::vector<Edge> edges;
  for (auto [u, v] : inst.graph.edges())
    if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)])
      edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
  for (auto [u, v] : caterpillar_graph(r).edges()) edges.emplace_back(u + shift, v + shift);
  if (target.first > 0)
    edges.emplace_back(new_id[static_cast<std::size_t>(comp.spine[static_cast<std::size_t>(target.first - 1)])],
                       r.spine.front() + shift);
  if (target.last + 1 < comp.spine_length())
    edges.emplace_back(r.spine.back() + shift,
                       new_id[static_cast<std::size_t>(comp.spine[static_cast<std::size_t>(target.last + 1)])]);
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);

  out.instance.graph = Graph::from_edges(n, edges);
  out.instance.d = inst.d;
  out.instance.k = inst.k;
  for (Vertex v : inst.modulator) out.instance.modulator.push_back(new_id[static_cast<std::size_t>(v)]);
  std::sort(out.instance.modulator.begin(), out.instance.modulator.end());

  auto map_set = [&](const VertexSet& vs) {
    VertexSet m;
    for (Vertex v : vs) m.push_back(new_id[static_cast<std::size_t>(v)]);
    return m;
  };
  std::vector<Caterpillar> comps;
  for (int c = 0; c < cs.component_count(); ++c) {
    const auto& old = cs.component(c);
    Caterpillar m;
    for (int i = 0; i < old.spine_length(); ++i) {
      if (c == target.component && i == target.first) {
        for (int j = 0; j < r.spine_length(); ++j) {
          m.spine.push_back(r.spine[static_cast<std::size_t>(j)] + shift);
          VertexSet p;
          for (Vertex v : r.pendants[static_cast<std::size_t>(j)]) p.push_back(v + shift);
          m.pendants.push_back(std::move(p));
        }
      }
      if (c == target.component && i >= target.first && i <= target.last) continue;
      m.spine.push_back(new_id[static_cast<std::size_t>(old.spine[static_cast<std::size_t>(i)])]);
      m.pendants.push_back(map_set(old.pendants[static_cast<std::size_t>(i)]));
    }
    comps.push_back(std::move(m));
  }
  std::sort(comps.begin(), comps.end(), [](const Caterpillar& a, const Caterpillar& b) {
    return a.vertices().front() < b.vertices().front();
  });
  out.structure = CaterpillarStructure(n, std::move(comps));
  return out;
}

Rule2Result rule2_replace_spine(const Instance& inst, const CaterpillarStructure& cs) {
  MarkResult mark = mark_and_pick(inst, cs);
  Rule2Result res;
  res.host = mark.hosts[static_cast<std::size_t>(mark.picked)];
  res.target = find_replaceable_subgraph(inst, cs, res.host);
  Caterpillar sub = subcaterpillar(cs.component(res.target.component), res.target.first, res.target.last);
  res.gamma = essence(sub, inst.d);
  res.replacement = synthesize(res.gamma);
  res.opt_target = static_cast<int>(pack_caterpillar(sub, inst.d).size());
  res.opt_replacement = static_cast<int>(pack_caterpillar(res.replacement, inst.d).size());
  Replacement rep = replace_subcaterpillar(inst, cs, res.target, res.replacement);
  res.instance = std::move(rep.instance);
  res.instance.k = inst.k - res.opt_target + res.opt_replacement;
  res.structure = std::move(rep.structure);
  res.origin = std::move(rep.origin);
  std::ostringstream line;
  line << "rule2 replace component " << res.target.component << " spine [" << res.target.first << ","
       << res.target.last << "] " << res.target.vertices.size() << " vertices opt " << res.opt_target
       << " by essence " << res.gamma.str() << " " << res.replacement.size() << " vertices opt "
       << res.opt_replacement;
  res.trace.push_back(line.str());
  return res;
}

Rule2Result rule2_replace_spine(const Instance& inst) {
  return rule2_replace_spine(inst, recognize_caterpillar_forest(inst.graph, inst.modulator));
}

}  // namespace coc

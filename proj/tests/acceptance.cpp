// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coc/caterpillar.hpp"
#include "coc/essence.hpp"
#include "coc/hardness.hpp"
#include "coc/monoid.hpp"
#include "coc/packing.hpp"
#include "coc/pipeline.hpp"
#include "coc/rules.hpp"
#include "coc/solvers.hpp"
#include "support/oracles.hpp"

using namespace coc;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_failure = what;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Caterpillar forest from the oracle generator plus `m` modulator vertices
// with random edges. Modulator ids are 0..m-1.
Instance random_pw1(std::mt19937_64& rng, int d, int m, int components, int spine_max, double edge_p,
                    std::int64_t k) {
  Graph forest = oracle::random_caterpillar_forest(rng, components, spine_max, 2, 0.3);
  std::vector<Edge> e;
  for (auto [u, v] : forest.edges()) e.emplace_back(u + m, v + m);
  std::bernoulli_distribution coin(edge_p);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b)
      if (coin(rng)) e.emplace_back(a, b);
    for (int v = 0; v < forest.n(); ++v)
      if (coin(rng)) e.emplace_back(a, v + m);
  }
  Instance inst{Graph::from_edges(forest.n() + m, e), d, k, {}};
  for (int a = 0; a < m; ++a) inst.modulator.push_back(a);
  return inst;
}

bool kernel_answer(const KernelReport& r) {
  if (r.outcome == Outcome::trivial_yes) return true;
  if (r.outcome == Outcome::trivial_no) return false;
  return oracle::brute_within(r.instance.graph, r.instance.d, r.instance.k);
}

// Own tables for the generators of the monoid.
std::vector<int> basic_table(const BasicFn& b, int d) {
  std::vector<int> t(static_cast<std::size_t>(d) + 2);
  for (int x = 0; x <= d + 1; ++x) t[static_cast<std::size_t>(x)] = x;
  if (b.kind == BasicFn::Kind::inc)
    for (int x = 1; x <= d; ++x) t[static_cast<std::size_t>(x)] = x + 1;
  if (b.kind == BasicFn::Kind::dec) t[static_cast<std::size_t>(b.i)] = b.i - 1;
  return t;
}

// x -> second(first(x))
std::vector<int> then(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[static_cast<std::size_t>(first[x])];
  return out;
}

std::vector<int> apply_in_order(const std::vector<BasicFn>& fns, int d) {
  std::vector<int> acc = basic_table(BasicFn::id(), d);
  for (const auto& b : fns) acc = then(acc, basic_table(b, d));
  return acc;
}

// All non-decreasing tables on 0..d+1 fixing both ends.
std::vector<std::vector<int>> all_tables(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(d) + 2, 0);
  t.back() = d + 1;
  std::function<void(int, int)> fill = [&](int pos, int low) {
    if (pos > d) {
      out.push_back(t);
      return;
    }
    for (int v = low; v <= d + 1; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, v);
    }
  };
  fill(1, 0);
  return out;
}

Caterpillar random_admissible(std::mt19937_64& rng, int d, int spine_max) {
  Caterpillar c = oracle::random_caterpillar(rng, 1, spine_max, 2, 0.35);
  auto packed = pack_caterpillar(c, d);
  if (packed.empty()) return {};
  return relabelled(subcaterpillar(c, 0, packed.back().last));
}

// Minimal blocking sets from the list of minimum solutions, as bitmasks.
std::vector<std::uint64_t> oracle_minimal_blocking(const Graph& g, int d) {
  auto minimum = oracle::brute_minimum_sets(g, d);
  const std::uint64_t all = std::uint64_t{1} << g.n();
  std::vector<char> blocking(all);
  for (std::uint64_t x = 0; x < all; ++x) {
    bool inside = false;
    for (auto s : minimum)
      if ((x & s) == x) {
        inside = true;
        break;
      }
    blocking[x] = !inside;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < all; ++x) {
    if (!blocking[x]) continue;
    bool minimal = true;
    for (std::uint64_t rest = x; rest; rest &= rest - 1)
      if (blocking[x & ~(rest & -rest)]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::uint64_t mask_of_set(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

int max_popcount(const std::vector<std::uint64_t>& masks) {
  int best = 0;
  for (auto m : masks) best = std::max(best, std::popcount(m));
  return best;
}

Graph induced(const Graph& g, const VertexSet& vs) {
  std::vector<int> id(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) id[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (id[static_cast<std::size_t>(u)] >= 0 && id[static_cast<std::size_t>(v)] >= 0)
      e.emplace_back(id[static_cast<std::size_t>(u)], id[static_cast<std::size_t>(v)]);
  return Graph::from_edges(static_cast<int>(vs.size()), e);
}

// ---------------------------------------------------------------------------

Verdict kernel_equivalence() {
  Verdict v;
  auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  int runs = 0, yes = 0, reduced = 0;
  while (runs < 1000) {
    int d = 1 + static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 5);
    int comps = 1 + static_cast<int>(rng() % 4);
    std::int64_t k = static_cast<std::int64_t>(rng() % 9);
    Instance inst = random_pw1(rng, d, m, comps, 4, 0.25, k);
    if (inst.n() > 18) continue;
    ++runs;
    bool truth = oracle::brute_within(inst.graph, d, k);
    auto r = kernelize_pw1(inst);
    yes += truth;
    reduced += r.outcome == Outcome::reduced;
    v.require(kernel_answer(r) == truth, "mismatch on run " + std::to_string(runs));
  }
  double secs = seconds_since(t0);
  v.require(secs <= 600, "runtime over 10 minutes");
  v.detail = std::to_string(runs) + " instances, " + std::to_string(yes) + " yes, " + std::to_string(reduced) +
             " reduced, " + std::to_string(secs).substr(0, 5) + "s";
  return v;
}

Verdict component_bound_check() {
  Verdict v;
  std::mt19937_64 rng(1002);
  int runs = 0, max_seen = 0;
  for (int round = 0; round < 1500; ++round) {
    int d = 1 + round % 4;
    int m = 1 + static_cast<int>(rng() % 4);
    int comps = round < 1000 ? 1 + static_cast<int>(rng() % 4) : 10 + static_cast<int>(rng() % 40);
    Instance inst = random_pw1(rng, d, m, comps, 5, 0.15, 5);
    std::int64_t bound = ((d - 1) * 2 + 1) * static_cast<std::int64_t>(m) * m;
    auto r1 = rule1_reduce_components(inst, 2, GraphClass::caterpillar_forest);
    v.require(r1.components_after <= bound, "direct rule 1 over bound");
    auto r = kernelize_pw1(inst);
    v.require(r.components_after_rule1 <= bound, "pipeline over bound");
    max_seen = std::max(max_seen, r1.components_after);
    ++runs;
  }
  v.detail = std::to_string(runs) + " runs, largest surviving count " + std::to_string(max_seen);
  return v;
}

Verdict spine_bound_check() {
  Verdict v;
  std::mt19937_64 rng(1003);
  int reduced = 0, shrunk = 0;
  auto check = [&](const Instance& inst) {
    auto r = kernelize_pw1(inst);
    if (r.outcome != Outcome::reduced) return r;
    ++reduced;
    const int d = inst.d;
    const auto m = static_cast<std::int64_t>(inst.modulator.size());
    std::int64_t bound = 48 * ipow(d, 6) * ipow(m, 3) + 12 * ipow(d, 5) * ipow(m, 4);
    auto cs = recognize_caterpillar_forest(r.instance.graph, r.instance.modulator);
    v.require(cs.total_spine_length() <= bound, "spine over bound");
    return r;
  };
  for (int round = 0; round < 600; ++round) {
    int d = 1 + round % 3;
    int m = 1 + static_cast<int>(rng() % 3);
    check(random_pw1(rng, d, m, 1 + static_cast<int>(rng() % 6), 8, 0.2, static_cast<std::int64_t>(rng() % 12)));
  }
  // Long spines next to one modulator vertex, so that the spine rule has work.
  for (int round = 0; round < 40; ++round) {
    int len = 80 + static_cast<int>(rng() % 120);
    std::vector<Edge> e;
    for (int i = 1; i < len; ++i) e.emplace_back(i, i + 1);
    std::uniform_int_distribution<int> pos(1, len);
    for (int j = 0; j < 3; ++j) {
      int p = pos(rng);
      if (std::find(e.begin(), e.end(), Edge{0, p}) == e.end()) e.emplace_back(0, p);
    }
    Instance inst{Graph::from_edges(len + 1, e), 1, 0, {0}};
    inst.k = oracle::vc_modulator_opt(inst) - static_cast<int>(rng() % 2);
    auto r = check(inst);
    if (r.outcome == Outcome::reduced) {
      shrunk += r.rule2_iterations > 0;
      v.require((oracle::vc_modulator_opt(r.instance) <= r.instance.k) ==
                    (oracle::vc_modulator_opt(inst) <= inst.k),
                "long-spine answer changed");
    }
  }
  v.detail = std::to_string(reduced) + " reduced outcomes, " + std::to_string(shrunk) + " with spine replacements";
  return v;
}

Verdict packing_duality() {
  Verdict v;
  std::mt19937_64 rng(1004);
  int total = 0;
  for (int d = 1; d <= 4; ++d) {
    int runs = 0;
    while (runs < 500) {
      Graph g = oracle::random_caterpillar_forest(rng, 1 + static_cast<int>(rng() % 3), 5, 2, 0.3);
      if (g.n() > 20) continue;
      ++runs;
      auto cs = recognize_caterpillar_forest(g, {});
      v.require(static_cast<int>(solution_tight_packing(cs, d).size()) == oracle::brute_opt(g, d),
                "packing size differs from opt at d=" + std::to_string(d));
    }
    total += runs;
  }
  v.detail = std::to_string(total) + " forests over d=1..4";
  return v;
}

Verdict blocking_sets() {
  Verdict v;
  std::mt19937_64 rng(1005);
  int forests = 0, forest_max = 0;
  while (forests < 200) {
    int d = 1 + forests % 4;
    Graph g = oracle::random_caterpillar_forest(rng, 1 + static_cast<int>(rng() % 3), 5, 2, 0.3);
    if (g.n() > 14) continue;
    ++forests;
    auto expected = oracle_minimal_blocking(g, d);
    auto got = enumerate_minimal_blocking_sets(g, d);
    std::vector<std::uint64_t> got_masks;
    for (const auto& s : got) got_masks.push_back(mask_of_set(s));
    std::sort(expected.begin(), expected.end());
    std::sort(got_masks.begin(), got_masks.end());
    v.require(expected == got_masks, "enumeration differs from oracle");
    forest_max = std::max(forest_max, max_popcount(expected));
  }
  v.require(forest_max <= 2, "forest blocking set larger than 2");

  int mixed = 0, mixed_max = 0;
  while (mixed < 100) {
    int d = 1 + mixed % 4;
    std::vector<Edge> e;
    int n = 0;
    for (int c = 0; c < 1 + static_cast<int>(rng() % 2); ++c) {
      int len = 3 + static_cast<int>(rng() % 5);
      oracle::add_cycle(e, n, len);
      n += len;
    }
    Caterpillar cat = oracle::random_caterpillar(rng, 1, 3, 1, 0.3);
    for (std::size_t i = 0; i < cat.spine.size(); ++i) {
      if (i > 0) e.emplace_back(n + cat.spine[i - 1], n + cat.spine[i]);
      for (int q : cat.pendants[i]) e.emplace_back(n + cat.spine[i], n + q);
    }
    n += cat.size();
    if (n > 14) continue;
    ++mixed;
    Graph g = Graph::from_edges(n, e);
    auto expected = oracle_minimal_blocking(g, d);
    auto got = enumerate_minimal_blocking_sets(g, d);
    v.require(expected.size() == got.size(), "cycle enumeration differs from oracle");
    mixed_max = std::max(mixed_max, max_popcount(expected));
  }
  v.require(mixed_max <= 3, "cycle blocking set larger than 3");

  for (int d = 1; d <= 4; ++d) {
    std::vector<Edge> e;
    oracle::add_cycle(e, 0, d + 2);
    Graph g = Graph::from_edges(d + 2, e);
    v.require(max_popcount(oracle_minimal_blocking(g, d)) == 3, "cycle witness not 3 at d=" + std::to_string(d));
    int lib_max = 0;
    for (const auto& s : enumerate_minimal_blocking_sets(g, d)) lib_max = std::max(lib_max, static_cast<int>(s.size()));
    v.require(lib_max == 3, "library cycle witness not 3");
  }
  v.detail = std::to_string(forests) + " forests (max " + std::to_string(forest_max) + "), " +
             std::to_string(mixed) + " cycle graphs (max " + std::to_string(mixed_max) + "), witnesses d=1..4";
  return v;
}

Verdict monoid_decomposition() {
  Verdict v;
  auto t0 = Clock::now();
  int exhaustive = 0;
  std::size_t longest = 0;
  auto check = [&](int d, const std::vector<int>& table) {
    auto fns = decompose(MonoidFn(d, table));
    v.require(apply_in_order(fns, d) == table, "decomposition does not compose back at d=" + std::to_string(d));
    v.require(static_cast<std::int64_t>(fns.size()) <= ipow(d, 3), "decomposition longer than d^3");
    longest = std::max(longest, fns.size());
  };
  for (int d = 1; d <= 4; ++d) {
    auto tables = all_tables(d);
    v.require(tables.size() == enumerate_monoid(d).size(), "monoid enumeration size");
    for (const auto& t : tables) {
      check(d, t);
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(1006);
  for (int i = 0; i < 10000; ++i) {
    int d = 1 + static_cast<int>(rng() % 12);
    std::uniform_int_distribution<int> val(0, d + 1);
    std::vector<int> mid(static_cast<std::size_t>(d));
    for (auto& x : mid) x = val(rng);
    std::sort(mid.begin(), mid.end());
    std::vector<int> t{0};
    t.insert(t.end(), mid.begin(), mid.end());
    t.push_back(d + 1);
    check(d, t);
  }
  double secs = seconds_since(t0);
  v.require(secs <= 60, "runtime over 1 minute");
  v.detail = std::to_string(exhaustive) + " exhaustive + 10000 random, longest " + std::to_string(longest) + ", " +
             std::to_string(secs).substr(0, 5) + "s";
  return v;
}

Verdict essence_equivalence() {
  Verdict v;
  std::mt19937_64 rng(1007);
  int checked = 0;
  while (checked < 300) {
    int d = 1 + checked % 3;
    Caterpillar c = random_admissible(rng, d, 8);
    if (c.spine.empty() || c.size() > 14) continue;
    ++checked;
    auto fast = essence(c, d);
    v.require(fast == essence_brute(c, d), "essence differs from brute force");
    v.require(fast.table() == oracle::essence_dp(c, d), "essence differs from DP oracle");
  }
  int basics = 0;
  for (int d = 1; d <= 5; ++d) {
    std::vector<BasicFn> fns{BasicFn::id(), BasicFn::inc()};
    for (int i = 1; i <= d; ++i) fns.push_back(BasicFn::dec(i));
    for (const auto& b : fns) {
      Caterpillar c = caterpillar_for_basic(b, d);
      auto want = basic_table(b, d);
      v.require(essence(c, d).table() == want, "basic caterpillar essence");
      v.require(oracle::essence_dp(c, d) == want, "basic caterpillar DP");
      if (c.size() + d <= kEssenceBruteLimit) v.require(essence_brute(c, d).table() == want, "basic brute");
      ++basics;
    }
  }
  v.detail = std::to_string(checked) + " random caterpillars, " + std::to_string(basics) + " basic caterpillars";
  return v;
}

Verdict composition_law() {
  Verdict v;
  std::mt19937_64 rng(1008);
  int pairs = 0;
  while (pairs < 300) {
    int d = 1 + pairs % 4;
    Caterpillar a = random_admissible(rng, d, 6);
    Caterpillar b = random_admissible(rng, d, 6);
    if (a.spine.empty() || b.spine.empty()) continue;
    ++pairs;
    auto want = then(essence(a, d).table(), essence(b, d).table());
    Caterpillar ab = concat(a, b);
    v.require(oracle::essence_dp(ab, d) == want, "concatenation DP differs");
    v.require(essence(ab, d).table() == want, "concatenation essence differs");
  }
  v.detail = std::to_string(pairs) + " pairs over d=1..4";
  return v;
}

Verdict synthesis() {
  Verdict v;
  int total = 0, by_brute = 0;
  for (int d = 1; d <= 3; ++d)
    for (const auto& t : all_tables(d)) {
      ++total;
      Caterpillar c = synthesize(MonoidFn(d, t));
      v.require(static_cast<std::int64_t>(pack_caterpillar(c, d).size()) <= ipow(d, 3), "packing larger than d^3");
      if (c.size() + d <= 40) {
        v.require(essence_brute(c, d, 40).table() == t, "brute essence of synthesized caterpillar");
        ++by_brute;
      } else {
        v.require(oracle::essence_dp(c, d) == t, "DP essence of synthesized caterpillar");
      }
    }
  v.detail = std::to_string(total) + " functions, " + std::to_string(by_brute) + " by brute force, " +
             std::to_string(total - by_brute) + " by the DP oracle";
  return v;
}

Verdict rule2_safety() {
  Verdict v;
  std::mt19937_64 rng(1010);
  int fixtures = 0, applications = 0, brute_checked = 0, yes = 0;
  for (int round = 0; round < 400 && fixtures < 150; ++round) {
    int m = static_cast<int>(rng() % 2);
    std::vector<Edge> e;
    int n = m;
    int comps = 1 + static_cast<int>(rng() % 2);
    for (int c = 0; c < comps; ++c) {
      Caterpillar cat = oracle::random_caterpillar(rng, 12, 24, 1, 0.15);
      for (std::size_t i = 0; i < cat.spine.size(); ++i) {
        if (i > 0) e.emplace_back(n + cat.spine[i - 1], n + cat.spine[i]);
        for (int q : cat.pendants[i]) e.emplace_back(n + cat.spine[i], n + q);
      }
      n += cat.size();
    }
    if (n > 60) continue;
    if (m == 1) {
      std::uniform_int_distribution<int> pick(1, n - 1);
      for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j) {
        Edge link{0, pick(rng)};
        if (std::find(e.begin(), e.end(), link) == e.end()) e.push_back(link);
      }
    }
    Instance inst{Graph::from_edges(n, e), 1, 0, {}};
    if (m == 1) inst.modulator = {0};
    inst.k = oracle::vc_modulator_opt(inst) - static_cast<int>(rng() % 2);
    auto cs = recognize_caterpillar_forest(inst.graph, inst.modulator);
    if (!rule2_applicable(inst, cs)) continue;
    ++fixtures;
    const bool truth = oracle::vc_modulator_opt(inst) <= inst.k;
    yes += truth;
    Instance cur = inst;
    while (true) {
      auto cur_cs = recognize_caterpillar_forest(cur.graph, cur.modulator);
      if (!rule2_applicable(cur, cur_cs)) break;
      auto r = rule2_replace_spine(cur, cur_cs);
      ++applications;
      int opt_p = oracle::forest_opt(induced(cur.graph, r.target.vertices), 1);
      int opt_new = oracle::forest_opt(caterpillar_graph(r.replacement), 1);
      v.require(r.instance.k == cur.k - opt_p + opt_new, "k' formula");
      v.require((oracle::vc_modulator_opt(r.instance) <= r.instance.k) == truth, "answer changed");
      cur = r.instance;
    }
    if (cur.n() <= 24) {
      ++brute_checked;
      v.require(oracle::brute_within(cur.graph, 1, cur.k) == truth, "brute force disagrees after reduction");
    }
  }
  v.require(fixtures >= 100, "too few applicable fixtures");
  v.require(brute_checked > 0, "no fixture small enough for brute force");
  v.detail = std::to_string(fixtures) + " fixtures (" + std::to_string(yes) + " yes), " +
             std::to_string(applications) + " replacements, " + std::to_string(brute_checked) +
             " brute-forced after reduction";
  return v;
}

bool own_umrss(const UMRSSInstance& u) {
  const int n = static_cast<int>(u.vectors.size());
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    if (std::popcount(pick) > u.budget) continue;
    bool ok = true;
    for (int i = 0; i < u.k && ok; ++i) {
      int sum = 0;
      for (int s = 0; s < n; ++s)
        if ((pick >> s) & 1) sum += u.vectors[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
      ok = sum >= u.target[static_cast<std::size_t>(i)];
    }
    if (ok) return true;
  }
  return false;
}

bool own_xsc(const XSCInstance& x) {
  const int n = static_cast<int>(x.family.size());
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    if (std::popcount(pick) != x.k) continue;
    std::vector<int> count(static_cast<std::size_t>(x.universe), 0);
    for (int s = 0; s < n; ++s)
      if ((pick >> s) & 1)
        for (int el : x.family[static_cast<std::size_t>(s)]) ++count[static_cast<std::size_t>(el)];
    if (std::all_of(count.begin(), count.end(), [](int c) { return c == 1; })) return true;
  }
  return false;
}

Verdict reductions() {
  Verdict v;
  std::mt19937_64 rng(1011);
  std::ostringstream detail;

  int vc_runs = 0, vc_yes = 0;
  while (vc_runs < 100) {
    int n = 2 + static_cast<int>(rng() % 4);
    VCInstance vc{oracle::random_graph(rng, n, 0.5), static_cast<std::int64_t>(rng() % 3)};
    int d = 1 + static_cast<int>(rng() % 3);
    Instance out = gen_vc_to_dcoc(vc, d);
    if (out.n() > 24) continue;
    ++vc_runs;
    bool truth = oracle::brute_within(vc.graph, 1, vc.k);
    vc_yes += truth;
    v.require(out.k == vc.k + static_cast<std::int64_t>(vc.graph.edges().size()), "vc: k' = k + |E|");
    v.require(oracle::brute_within(out.graph, d, out.k) == truth, "vc: answer changed");
  }
  detail << "vc " << vc_runs << " (" << vc_yes << " yes)";

  int um_runs = 0, um_yes = 0;
  for (int tries = 0; um_runs < 100 && tries < 200000; ++tries) {
    UMRSSInstance u;
    u.k = 1 + static_cast<int>(rng() % 2);
    u.budget = static_cast<int>(rng() % 3);
    int vectors = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < vectors; ++s) {
      std::vector<int> vec;
      for (int i = 0; i < u.k; ++i) vec.push_back(static_cast<int>(rng() % 2));
      u.vectors.push_back(vec);
    }
    for (int i = 0; i < u.k; ++i) u.target.push_back(static_cast<int>(rng() % 3));
    auto red = gen_umrss_to_coc(u);
    if (red.instance.n() > 24) continue;
    ++um_runs;
    bool truth = own_umrss(u);
    um_yes += truth;
    v.require(red.instance.k == (red.gamma - 1) * static_cast<std::int64_t>(u.vectors.size()) + u.budget,
              "umrss: budget formula");
    v.require(static_cast<int>(red.instance.modulator.size()) == u.k * (u.budget + 1), "umrss: modulator size");
    v.require(oracle::brute_within(red.instance.graph, red.instance.d, red.instance.k) == truth,
              "umrss: answer changed");
  }
  v.require(um_runs >= 100, "umrss: too few small outputs");
  detail << ", umrss " << um_runs << " (" << um_yes << " yes)";

  int xs_runs = 0, xs_yes = 0;
  for (int tries = 0; xs_runs < 100 && tries < 200000; ++tries) {
    XSCInstance x;
    x.universe = 2 + static_cast<int>(rng() % 3);
    std::vector<int> divisors;
    for (int t = 1; t <= x.universe; ++t)
      if (x.universe % t == 0) divisors.push_back(t);
    int t = divisors[rng() % divisors.size()];
    x.k = rng() % 8 == 0 ? 1 + static_cast<int>(rng() % 3) : x.universe / t;
    int sets = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < sets; ++s) {
      std::vector<int> all(static_cast<std::size_t>(x.universe));
      for (int i = 0; i < x.universe; ++i) all[static_cast<std::size_t>(i)] = i;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(static_cast<std::size_t>(t));
      std::sort(all.begin(), all.end());
      x.family.push_back(all);
    }
    auto a = gen_xsc_to_acoc(x);
    if (a.base.n() > 24) continue;
    ++xs_runs;
    bool truth = own_xsc(x);
    xs_yes += truth;
    if (x.k * t == x.universe)
      v.require(a.base.d == static_cast<int>(x.family.size()) + t - 1, "xsc: d = |F| + t - 1");
    v.require(oracle::brute_annotated_within(a.base.graph, a.base.d, a.base.k, a.annotations) == truth,
              "xsc: answer changed");
  }
  v.require(xs_runs >= 100, "xsc: too few small outputs");
  detail << ", xsc " << xs_runs << " (" << xs_yes << " yes)";

  int an_runs = 0, an_yes = 0;
  while (an_runs < 100) {
    int n = 3 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 2);
    AnnotatedInstance a;
    a.base = Instance{oracle::random_graph(rng, n, 0.4), d, static_cast<std::int64_t>(rng() % 3), {}};
    for (int v2 = 0; v2 < n; ++v2)
      if (rng() % 2) a.base.modulator.push_back(v2);
    auto& mod = a.base.modulator;
    for (std::size_t i = 0; i < mod.size(); ++i)
      for (std::size_t j = i + 1; j < mod.size(); ++j)
        if (rng() % 3 == 0) a.annotations.emplace_back(mod[i], mod[j]);
    if (a.annotations.size() > 3) continue;
    Instance out = gen_acoc_to_coc(a);
    if (out.n() > 24) continue;
    ++an_runs;
    bool truth = oracle::brute_annotated_within(a.base.graph, d, a.base.k, a.annotations);
    an_yes += truth;
    v.require(out.k == a.base.k + static_cast<std::int64_t>(a.annotations.size()), "acoc: k' = k + |A|");
    v.require(oracle::brute_within(out.graph, d, out.k) == truth, "acoc: answer changed");
  }
  detail << ", acoc " << an_runs << " (" << an_yes << " yes)";
  v.detail = detail.str();
  return v;
}

Verdict branching_solver() {
  Verdict v;
  std::mt19937_64 rng(1012);
  int runs = 0, yes = 0;
  while (runs < 300) {
    int m = 1 + static_cast<int>(rng() % 5);
    int f = 2 + static_cast<int>(rng() % 9);
    int d = 1 + static_cast<int>(rng() % 3);
    std::bernoulli_distribution coin(0.35);
    std::vector<Edge> e;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b)
        if (coin(rng)) e.emplace_back(a, b);
      for (int x = m; x < m + f; ++x)
        if (coin(rng)) e.emplace_back(a, x);
    }
    Instance inst{Graph::from_edges(m + f, e), d, 0, {}};
    for (int a = 0; a < m; ++a) inst.modulator.push_back(a);
    int opt = oracle::brute_opt(inst.graph, d);
    inst.k = std::max(0, opt - 1 + static_cast<int>(rng() % 3));
    ++runs;
    bool truth = opt <= inst.k;
    yes += truth;
    auto r = solve_vc_branching(inst);
    v.require(r.yes == truth, "branching answer differs");
    if (r.yes) v.require(is_dcoc_set(inst.graph, d, r.witness) && r.witness.size() <= static_cast<std::size_t>(inst.k),
                         "branching witness invalid");
  }
  v.detail = std::to_string(runs) + " instances (" + std::to_string(yes) + " yes)";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"kernel equivalence", kernel_equivalence},
      {"component bound", component_bound_check},
      {"spine bound", spine_bound_check},
      {"packing duality", packing_duality},
      {"blocking-set bounds", blocking_sets},
      {"monoid decomposition", monoid_decomposition},
      {"essence oracle equivalence", essence_equivalence},
      {"composition law", composition_law},
      {"synthesis", synthesis},
      {"spine replacement safety", rule2_safety},
      {"reductions", reductions},
      {"branching solver", branching_solver},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& ex) {
      v.pass = false;
      v.first_failure = std::string("exception: ") + ex.what();
    }
    failed += !v.pass;
    std::printf("%s %2d %s: %s%s%s\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str(),
                v.pass ? "" : " | first failure: ", v.pass ? "" : v.first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

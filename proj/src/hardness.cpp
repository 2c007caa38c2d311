#include "coc/hardness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "coc/error.hpp"
#include "coc/solvers.hpp"

namespace coc {

namespace {

struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add() { return n++; }
  void link(int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
  Graph graph() const { return Graph::from_edges(n, edges); }
};

// Visits subsets of {0..n-1} of size 0..max_size in size-then-lex order until
// the visitor returns true.
bool any_subset(int n, std::int64_t max_size, const std::function<bool(const std::vector<int>&)>& visit) {
  if (max_size < 0) return false;
  int cap = static_cast<int>(std::min<std::int64_t>(max_size, n));
  for (int size = 0; size <= cap; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (visit(idx)) return true;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

}  // namespace

Instance gen_vc_to_dcoc(const VCInstance& vc, int d) {
  if (d < 1) throw Error(Errc::invalid_argument, "d must be at least 1");
  const int n = vc.graph.n();
  Instance out;
  out.d = d;
  out.modulator.resize(static_cast<std::size_t>(n));
  std::iota(out.modulator.begin(), out.modulator.end(), 0);
  Builder b;
  b.n = n;
  auto hang_path = [&](int anchor) {
    int prev = anchor;
    for (int i = 0; i < d - 1; ++i) {
      int p = b.add();
      b.link(prev, p);
      prev = p;
    }
  };
  auto edges = vc.graph.edges();
  for (auto [u, v] : edges) {
    int ue = b.add();
    int ve = b.add();
    b.link(u, ue);
    b.link(ue, ve);
    b.link(ve, v);
    hang_path(ue);
    hang_path(ve);
  }
  out.graph = b.graph();
  out.k = vc.k + static_cast<std::int64_t>(edges.size());
  return out;
}

UMRSSReduction gen_umrss_to_coc(const UMRSSInstance& u) {
  if (u.k < 1) throw Error(Errc::invalid_argument, "dimension must be at least 1");
  if (u.budget < 0) throw Error(Errc::invalid_argument, "selection budget must be non-negative");
  if (static_cast<int>(u.target.size()) != u.k) throw Error(Errc::invalid_argument, "target has wrong dimension");
  for (int x : u.target)
    if (x < 0) throw Error(Errc::invalid_argument, "negative target entry");
  std::int64_t beta = 0;
  for (const auto& s : u.vectors) {
    if (static_cast<int>(s.size()) != u.k) throw Error(Errc::invalid_argument, "vector has wrong dimension");
    for (int x : s) {
      if (x < 0) throw Error(Errc::invalid_argument, "negative vector entry");
      beta = std::max<std::int64_t>(beta, x);
    }
  }
  UMRSSReduction red;
  red.beta = beta;
  // With beta = 0 there would be no copies at all; one copy keeps the chains well formed.
  red.gamma = std::max<std::int64_t>(1, static_cast<std::int64_t>(u.budget + 1) * u.k * beta);
  const int copies = u.budget + 1;
  const auto gamma = static_cast<int>(red.gamma);

  Builder b;
  auto u_id = [&](int i, int j) { return i * copies + j; };
  b.n = u.k * copies;
  std::vector<int> set_base;
  for (std::size_t s = 0; s < u.vectors.size(); ++s) {
    set_base.push_back(b.n);
    b.n += gamma;
  }
  std::vector<int> degree(static_cast<std::size_t>(b.n), 0);
  for (std::size_t s = 0; s < u.vectors.size(); ++s) {
    int next = 0;
    for (int i = 0; i < u.k; ++i)
      for (int j = 0; j < copies; ++j)
        for (int c = 0; c < u.vectors[s][static_cast<std::size_t>(i)]; ++c) {
          int sv = set_base[s] + next++;
          b.link(u_id(i, j), sv);
          ++degree[static_cast<std::size_t>(u_id(i, j))];
          ++degree[static_cast<std::size_t>(sv)];
        }
  }
  const int d = *std::max_element(degree.begin(), degree.end()) + 1;

  for (std::size_t s = 0; s < u.vectors.size(); ++s)
    for (int i = 0; i + 1 < gamma; ++i) {
      int center = b.add();
      for (int l = 0; l < d - 1; ++l) b.link(center, b.add());
      b.link(center, set_base[s] + i);
      b.link(center, set_base[s] + i + 1);
    }
  for (int i = 0; i < u.k; ++i)
    for (int j = 0; j < copies; ++j) {
      int want = d + u.target[static_cast<std::size_t>(i)] - 1;
      for (int have = degree[static_cast<std::size_t>(u_id(i, j))]; have < want; ++have) b.link(u_id(i, j), b.add());
    }

  red.instance.graph = b.graph();
  red.instance.d = d;
  red.instance.k = (red.gamma - 1) * static_cast<std::int64_t>(u.vectors.size()) + u.budget;
  red.instance.modulator.resize(static_cast<std::size_t>(u.k * copies));
  std::iota(red.instance.modulator.begin(), red.instance.modulator.end(), 0);
  return red;
}

AnnotatedInstance gen_xsc_to_acoc(const XSCInstance& x) {
  const int n = x.universe;
  if (n < 1 || x.family.empty()) throw Error(Errc::invalid_argument, "need a nonempty universe and family");
  const int t = static_cast<int>(x.family.front().size());
  for (const auto& f : x.family) {
    if (static_cast<int>(f.size()) != t) throw Error(Errc::invalid_argument, "sets differ in size");
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] < 0 || f[i] >= n || (i > 0 && f[i - 1] >= f[i]))
        throw Error(Errc::invalid_argument, "sets must be sorted subsets of the universe");
  }
  if (t == 0 || x.k < 1 || static_cast<std::int64_t>(x.k) * t != n) {
    AnnotatedInstance no;
    std::vector<Edge> e{{0, 1}};
    no.base = Instance{Graph::from_edges(2, e), 1, 0, {0, 1}};
    return no;
  }
  const int k = x.k;
  const int sets = static_cast<int>(x.family.size());
  Builder b;
  auto u_id = [&](int i, int j) { return i * k + j; };
  b.n = n * k;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      for (int i2 = i + 1; i2 < n; ++i2) b.link(u_id(i, j), u_id(i2, j));
  AnnotatedInstance out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      for (int j2 = j + 1; j2 < k; ++j2) out.annotations.emplace_back(u_id(i, j), u_id(i, j2));
  for (int j = 0; j < k; ++j)
    for (const auto& f : x.family) {
      int v = b.add();
      for (int i = 0; i < n; ++i)
        if (!std::binary_search(f.begin(), f.end(), i)) b.link(v, u_id(i, j));
    }
  std::sort(out.annotations.begin(), out.annotations.end());
  out.base.graph = b.graph();
  out.base.d = sets + t - 1;
  out.base.k = static_cast<std::int64_t>(n) * (k - 1);
  out.base.modulator.resize(static_cast<std::size_t>(n * k));
  std::iota(out.base.modulator.begin(), out.base.modulator.end(), 0);
  return out;
}

Instance gen_acoc_to_coc(const AnnotatedInstance& a) {
  const Instance& in = a.base;
  Builder b;
  b.n = in.n();
  b.edges = in.graph.edges();
  Instance out;
  out.d = in.d;
  out.modulator = in.modulator;
  for (auto [u, v] : a.annotations) {
    int au = b.add();
    int av = b.add();
    b.link(au, u);
    b.link(av, v);
    b.link(au, av);
    for (int i = 0; i < in.d - 1; ++i) b.link(au, b.add());
    for (int i = 0; i < in.d - 1; ++i) b.link(av, b.add());
    out.modulator.push_back(au);
    out.modulator.push_back(av);
  }
  std::sort(out.modulator.begin(), out.modulator.end());
  out.graph = b.graph();
  out.k = in.k + static_cast<std::int64_t>(a.annotations.size());
  return out;
}

Instance gen_random(const RandomProfile& p, std::uint64_t seed) {
  if (p.d < 1 || p.modulator_size < 0 || p.components < 0 || p.spine_min < 1 || p.spine_max < p.spine_min ||
      p.max_pendants < 0 || p.k_max < p.k_min)
    throw Error(Errc::invalid_argument, "inconsistent random profile");
  std::mt19937_64 rng(seed);
  auto coin = [&](double prob) { return std::bernoulli_distribution(std::clamp(prob, 0.0, 1.0))(rng); };
  Builder b;
  b.n = p.modulator_size;
  std::vector<int> forest;
  for (int c = 0; c < p.components; ++c) {
    int len = std::uniform_int_distribution<int>(p.spine_min, p.spine_max)(rng);
    int prev = -1;
    for (int i = 0; i < len; ++i) {
      int s = b.add();
      forest.push_back(s);
      if (prev >= 0) b.link(prev, s);
      prev = s;
      for (int j = 0; j < p.max_pendants; ++j)
        if (coin(p.pendant_density)) {
          int leaf = b.add();
          forest.push_back(leaf);
          b.link(s, leaf);
        }
    }
  }
  for (int m = 0; m < p.modulator_size; ++m) {
    for (int m2 = m + 1; m2 < p.modulator_size; ++m2)
      if (coin(p.modulator_inner_prob)) b.link(m, m2);
    for (int v : forest)
      if (coin(p.modulator_edge_prob)) b.link(m, v);
  }

  std::vector<int> perm(static_cast<std::size_t>(b.n));
  std::iota(perm.begin(), perm.end(), 0);
  if (p.shuffle) std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : b.edges) {
    int a = perm[static_cast<std::size_t>(u)], c = perm[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, c), std::max(a, c));
  }
  Instance out;
  out.graph = Graph::from_edges(b.n, edges);
  out.d = p.d;
  for (int m = 0; m < p.modulator_size; ++m) out.modulator.push_back(perm[static_cast<std::size_t>(m)]);
  std::sort(out.modulator.begin(), out.modulator.end());
  out.k = p.k_policy == KPolicy::fixed ? p.k_min : std::uniform_int_distribution<std::int64_t>(p.k_min, p.k_max)(rng);
  return out;
}

bool vc_brute(const VCInstance& vc) { return find_dcoc_set(vc.graph, 1, vc.k).has_value(); }

bool umrss_brute(const UMRSSInstance& u) {
  const int n = static_cast<int>(u.vectors.size());
  if (n > kBruteForceLimit) throw Error(Errc::too_large, "too many vectors for enumeration");
  return any_subset(n, u.budget, [&](const std::vector<int>& pick) {
    for (int i = 0; i < u.k; ++i) {
      long sum = 0;
      for (int s : pick) sum += u.vectors[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
      if (sum < u.target[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  });
}

bool xsc_brute(const XSCInstance& x) {
  const int n = static_cast<int>(x.family.size());
  if (n > kBruteForceLimit) throw Error(Errc::too_large, "family too large for enumeration");
  return any_subset(n, x.k, [&](const std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) != x.k) return false;
    std::vector<int> hits(static_cast<std::size_t>(x.universe), 0);
    for (int f : pick)
      for (int e : x.family[static_cast<std::size_t>(f)]) ++hits[static_cast<std::size_t>(e)];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  });
}

bool acoc_brute(const AnnotatedInstance& a) {
  const Instance& in = a.base;
  if (in.n() > kBruteForceLimit) throw Error(Errc::too_large, "instance too large for enumeration");
  return any_subset(in.n(), in.k, [&](const std::vector<int>& pick) {
    for (auto [u, v] : a.annotations)
      if (!std::binary_search(pick.begin(), pick.end(), u) && !std::binary_search(pick.begin(), pick.end(), v))
        return false;
    return is_dcoc_set(in.graph, in.d, pick);
  });
}

}  // namespace coc

namespace coc {

namespace {

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // line number, tokens
};

Lines tokenize(std::string_view text) {
  Lines out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) toks.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (!toks.empty()) out.rows.emplace_back(line_no, std::move(toks));
    if (end == text.size()) break;
  }
  return out;
}

int to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size() || v < INT32_MIN || v > INT32_MAX) throw ParseError(line, "bad integer '" + tok + "'");
  return static_cast<int>(v);
}

std::vector<int> ints_after(const std::vector<std::string>& toks, int line) {
  std::vector<int> out;
  for (std::size_t i = 1; i < toks.size(); ++i) out.push_back(to_int(toks[i], line));
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += " " + std::to_string(x);
  return s;
}

}  // namespace

UMRSSInstance parse_umrss(std::string_view text) {
  UMRSSInstance u;
  bool header = false, target = false;
  for (const auto& [line, toks] : tokenize(text).rows) {
    if (toks[0] == "u") {
      if (header) throw ParseError(line, "duplicate header");
      if (toks.size() != 3) throw ParseError(line, "header needs k and k'");
      u.k = to_int(toks[1], line);
      u.budget = to_int(toks[2], line);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line, "header must come first");
    auto vals = ints_after(toks, line);
    if (static_cast<int>(vals.size()) != u.k) throw ParseError(line, "expected " + std::to_string(u.k) + " entries");
    if (toks[0] == "t") {
      if (target) throw ParseError(line, "duplicate target");
      u.target = std::move(vals);
      target = true;
    } else if (toks[0] == "s") {
      u.vectors.push_back(std::move(vals));
    } else {
      throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!header) throw ParseError(0, "missing header");
  if (!target) throw ParseError(0, "missing target");
  return u;
}

std::string write_umrss(const UMRSSInstance& u) {
  std::string s = "u " + std::to_string(u.k) + " " + std::to_string(u.budget) + "\nt" + join_ints(u.target) + "\n";
  for (const auto& v : u.vectors) s += "s" + join_ints(v) + "\n";
  return s;
}

XSCInstance parse_xsc(std::string_view text) {
  XSCInstance x;
  bool header = false;
  for (const auto& [line, toks] : tokenize(text).rows) {
    if (toks[0] == "x") {
      if (header) throw ParseError(line, "duplicate header");
      if (toks.size() != 3) throw ParseError(line, "header needs n and k");
      x.universe = to_int(toks[1], line);
      x.k = to_int(toks[2], line);
      header = true;
    } else if (toks[0] == "f") {
      if (!header) throw ParseError(line, "header must come first");
      auto set = ints_after(toks, line);
      std::sort(set.begin(), set.end());
      x.family.push_back(std::move(set));
    } else {
      throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!header) throw ParseError(0, "missing header");
  return x;
}

std::string write_xsc(const XSCInstance& x) {
  std::string s = "x " + std::to_string(x.universe) + " " + std::to_string(x.k) + "\n";
  for (const auto& f : x.family) s += "f" + join_ints(f) + "\n";
  return s;
}

}  // namespace coc

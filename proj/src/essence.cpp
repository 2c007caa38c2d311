#include "coc/essence.hpp"

#include <algorithm>
#include <string>

#include "coc/error.hpp"
#include "coc/packing.hpp"
#include "coc/solvers.hpp"

namespace coc {

Caterpillar relabelled(const Caterpillar& c) {
  Caterpillar out;
  int next = c.spine_length();
  for (int i = 0; i < c.spine_length(); ++i) out.spine.push_back(i);
  for (const auto& p : c.pendants) {
    VertexSet fresh;
    for (std::size_t j = 0; j < p.size(); ++j) fresh.push_back(next++);
    out.pendants.push_back(std::move(fresh));
  }
  return out;
}

Caterpillar with_left_pendants(const Caterpillar& c, int x) {
  Caterpillar out = relabelled(c);
  int next = out.size();
  for (int j = 0; j < x; ++j) out.pendants.front().push_back(next++);
  return out;
}

MonoidFn essence(const Caterpillar& c, int d) {
  if (c.spine.empty() || !packing_is_full(c, d))
    throw Error(Errc::packing_not_full, "essence needs a packing covering the whole caterpillar");
  const auto base = pack_caterpillar(c, d).size();
  std::vector<int> table(static_cast<std::size_t>(d) + 2, d + 1);
  for (int x = 0; x <= d; ++x) {
    Caterpillar cx = with_left_pendants(c, x);
    auto packing = pack_caterpillar(cx, d);
    if (packing.size() > base) continue;
    // Selecting the rightmost spine vertex of every packed graph is optimal;
    // what survives at the right end is the tail after the last selection.
    int last_selected = packing.back().last;
    int residue = 0;
    for (int i = last_selected + 1; i < cx.spine_length(); ++i)
      residue += 1 + static_cast<int>(cx.pendants[static_cast<std::size_t>(i)].size());
    table[static_cast<std::size_t>(x)] = residue;
  }
  return MonoidFn(d, std::move(table));
}

MonoidFn essence_brute(const Caterpillar& c, int d, int limit) {
  if (c.size() + d > limit)
    throw Error(Errc::too_large, "essence_brute needs |C| + d <= " + std::to_string(limit));
  if (c.spine.empty() || !packing_is_full(c, d))
    throw Error(Errc::packing_not_full, "essence needs a packing covering the whole caterpillar");
  const int base = opt_brute(caterpillar_graph(relabelled(c)), d, limit).size();
  std::vector<int> table(static_cast<std::size_t>(d) + 2, d + 1);
  for (int x = 0; x <= d; ++x) {
    Caterpillar cx = with_left_pendants(c, x);
    Graph g = caterpillar_graph(cx);
    auto minimum = all_minimum_dcoc_sets(g, d, limit);
    if (minimum.front().size() != static_cast<std::size_t>(base)) continue;
    Vertex right = cx.spine.back();
    int best = d + 1;
    for (const auto& y : minimum) {
      if (std::binary_search(y.begin(), y.end(), right)) {
        best = 0;
        break;
      }
      std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
      for (Vertex v : y) alive[static_cast<std::size_t>(v)] = 0;
      for (const auto& comp : components(g, alive))
        if (std::binary_search(comp.begin(), comp.end(), right))
          best = std::min(best, static_cast<int>(comp.size()));
    }
    table[static_cast<std::size_t>(x)] = best;
  }
  return MonoidFn(d, std::move(table));
}

namespace {

// Path v1..vj with one pendant on v_i (1-based), ids 0..j.
Caterpillar path_with_pendant(int j, int i) {
  Caterpillar c;
  for (int v = 0; v < j; ++v) c.spine.push_back(v);
  c.pendants.assign(static_cast<std::size_t>(j), {});
  c.pendants[static_cast<std::size_t>(i - 1)].push_back(j);
  return c;
}

}  // namespace

Caterpillar caterpillar_for_basic(const BasicFn& b, int d) {
  switch (b.kind) {
    case BasicFn::Kind::id: {
      Caterpillar c;
      for (int v = 0; v <= d; ++v) c.spine.push_back(v);
      c.pendants.assign(static_cast<std::size_t>(d) + 1, {});
      return c;
    }
    case BasicFn::Kind::inc:
      return path_with_pendant(d + 1, d + 1);
    case BasicFn::Kind::dec:
      if (b.i < 1 || b.i > d) throw Error(Errc::invalid_argument, "dec index out of range");
      return path_with_pendant(d, d - b.i + 1);
  }
  throw Error(Errc::invalid_argument, "unknown basic function");
}

Caterpillar concat(const Caterpillar& a, const Caterpillar& b) {
  Caterpillar joined;
  joined.spine = a.spine;
  joined.spine.insert(joined.spine.end(), b.spine.begin(), b.spine.end());
  joined.pendants = a.pendants;
  joined.pendants.insert(joined.pendants.end(), b.pendants.begin(), b.pendants.end());
  return relabelled(joined);
}

Caterpillar synthesize(const MonoidFn& gamma) {
  auto parts = decompose(gamma);
  Caterpillar out = caterpillar_for_basic(parts.front(), gamma.d());
  for (std::size_t i = 1; i < parts.size(); ++i) out = concat(out, caterpillar_for_basic(parts[i], gamma.d()));
  return out;
}

}  // namespace coc

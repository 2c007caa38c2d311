#include "coc/packing.hpp"

#include <algorithm>

#include "coc/error.hpp"

namespace coc {

std::size_t Packing::size() const {
  std::size_t total = 0;
  for (const auto& c : per_component) total += c.size();
  return total;
}

std::vector<PackedGraph> Packing::flat() const {
  std::vector<PackedGraph> out;
  for (const auto& c : per_component) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Caterpillar subcaterpillar(const Caterpillar& c, int first, int last) {
  Caterpillar sub;
  for (int i = first; i <= last; ++i) {
    sub.spine.push_back(c.spine[static_cast<std::size_t>(i)]);
    sub.pendants.push_back(c.pendants[static_cast<std::size_t>(i)]);
  }
  return sub;
}

namespace {

PackedGraph make_packed(const Caterpillar& c, int component, int first, int last, int units) {
  PackedGraph h{component, first, last, units, {}};
  for (int i = first; i <= last; ++i) {
    h.vertices.push_back(c.spine[static_cast<std::size_t>(i)]);
    const auto& p = c.pendants[static_cast<std::size_t>(i)];
    h.vertices.insert(h.vertices.end(), p.begin(), p.end());
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  return h;
}

}  // namespace

std::vector<PackedGraph> pack_caterpillar(const Caterpillar& c, int d, int component) {
  std::vector<PackedGraph> out;
  int start = 0;
  int count = 0;
  for (int i = 0; i < c.spine_length(); ++i) {
    count += 1 + static_cast<int>(c.pendants[static_cast<std::size_t>(i)].size());
    if (count >= d + 1) {
      out.push_back(make_packed(c, component, start, i, 1));
      start = i + 1;
      count = 0;
    }
  }
  return out;
}

Packing solution_tight_packing(const CaterpillarStructure& cs, int d) {
  Packing p;
  p.alpha = 1;
  for (int c = 0; c < cs.component_count(); ++c) p.per_component.push_back(pack_caterpillar(cs.component(c), d, c));
  p.leftover.assign(p.per_component.size(), {});
  return p;
}

Packing merged_packing(const Packing& tight, int alpha) {
  if (alpha < 1) throw Error(Errc::invalid_argument, "merge factor must be at least 1");
  COC_ENSURE(tight.alpha == 1);
  Packing out;
  out.alpha = alpha;
  for (const auto& comp : tight.per_component) {
    std::vector<PackedGraph> merged, rest;
    std::size_t groups = comp.size() / static_cast<std::size_t>(alpha);
    for (std::size_t g = 0; g < groups; ++g) {
      const auto& a = comp[g * static_cast<std::size_t>(alpha)];
      const auto& b = comp[(g + 1) * static_cast<std::size_t>(alpha) - 1];
      PackedGraph h{a.component, a.first, b.last, alpha, {}};
      for (std::size_t j = g * static_cast<std::size_t>(alpha); j < (g + 1) * static_cast<std::size_t>(alpha); ++j)
        h.vertices.insert(h.vertices.end(), comp[j].vertices.begin(), comp[j].vertices.end());
      std::sort(h.vertices.begin(), h.vertices.end());
      merged.push_back(std::move(h));
    }
    rest.assign(comp.begin() + static_cast<std::ptrdiff_t>(groups * static_cast<std::size_t>(alpha)), comp.end());
    out.per_component.push_back(std::move(merged));
    out.leftover.push_back(std::move(rest));
  }
  return out;
}

bool is_merged_graph(const Packing& tight, std::span<const Vertex> w) {
  if (w.empty()) return false;
  VertexSet target(w.begin(), w.end());
  std::sort(target.begin(), target.end());
  VertexSet acc;
  for (const auto& comp : tight.per_component)
    for (const auto& h : comp)
      if (std::includes(target.begin(), target.end(), h.vertices.begin(), h.vertices.end()))
        acc.insert(acc.end(), h.vertices.begin(), h.vertices.end());
  std::sort(acc.begin(), acc.end());
  return acc == target;
}

bool packing_is_full(const Caterpillar& c, int d) {
  auto p = pack_caterpillar(c, d);
  return !p.empty() && p.back().last == c.spine_length() - 1;
}

}  // namespace coc

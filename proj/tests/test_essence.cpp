#include <random>

#include "coc/error.hpp"
#include "coc/essence.hpp"
#include "coc/packing.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace coc;

namespace {

// Random caterpillar trimmed to the end of its last packed graph, so that the
// packing covers it. Returns an empty caterpillar when nothing packs.
Caterpillar random_admissible(std::mt19937_64& rng, int d, int spine_max, int max_pendants) {
  Caterpillar c = oracle::random_caterpillar(rng, 1, spine_max, max_pendants, 0.35);
  auto packed = pack_caterpillar(c, d);
  if (packed.empty()) return {};
  return relabelled(subcaterpillar(c, 0, packed.back().last));
}

}  // namespace

TEST_CASE("essence needs a full packing") {
  Caterpillar c{{0, 1, 2}, {{}, {}, {}}};
  CHECK_THROWS_AS(essence(c, 3), Error);
  CHECK(essence(c, 2).table() == oracle::essence_dp(c, 2));
}

TEST_CASE("hand-checked essence of a path") {
  // P3 with d = 2. x = 0: delete the right end. x = 1: delete the middle,
  // leaving it alone. x = 2: only the left end works, leaving two.
  Caterpillar c{{0, 1, 2}, {{}, {}, {}}};
  CHECK(essence(c, 2).table() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("relabelling and left pendants") {
  Caterpillar c{{5, 3}, {{9}, {}}};
  Caterpillar r = relabelled(c);
  CHECK(r.spine == VertexSet{0, 1});
  CHECK(r.pendants[0] == VertexSet{2});
  Caterpillar x = with_left_pendants(c, 2);
  CHECK(x.size() == 5);
  CHECK(x.pendants[0].size() == 3);
}

TEST_CASE("basic caterpillars realise their functions") {
  for (int d = 1; d <= 5; ++d) {
    std::vector<BasicFn> basics{BasicFn::id(), BasicFn::inc()};
    for (int i = 1; i <= d; ++i) basics.push_back(BasicFn::dec(i));
    for (const auto& b : basics) {
      Caterpillar c = caterpillar_for_basic(b, d);
      CHECK(pack_caterpillar(c, d).size() == 1);
      CHECK(packing_is_full(c, d));
      CHECK(oracle::essence_dp(c, d) == eval(b, d).table());
      CHECK(essence(c, d) == eval(b, d));
      if (c.size() + d <= kEssenceBruteLimit) CHECK(essence_brute(c, d) == eval(b, d));
    }
  }
}

TEST_CASE("property: essence agrees with the DP oracle and the literal definition") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int round = 0; round < 600; ++round) {
    int d = 1 + round % 3;
    Caterpillar c = random_admissible(rng, d, 8, 2);
    if (c.spine.empty() || c.size() > 14) continue;
    auto fast = essence(c, d);
    CHECK(fast.table() == oracle::essence_dp(c, d));
    if (c.size() + d <= kEssenceBruteLimit) CHECK(fast == essence_brute(c, d));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: concatenation composes essences") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 300; ++round) {
    int d = 1 + round % 4;
    Caterpillar a = random_admissible(rng, d, 7, 2);
    Caterpillar b = random_admissible(rng, d, 7, 2);
    if (a.spine.empty() || b.spine.empty()) continue;
    Caterpillar ab = concat(a, b);
    CHECK(ab.size() == a.size() + b.size());
    CHECK(oracle::essence_dp(ab, d) == compose(essence(b, d), essence(a, d)).table());
  }
}

TEST_CASE("property: synthesis realises every monoid element") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& f : enumerate_monoid(d)) {
      Caterpillar c = synthesize(f);
      auto packs = pack_caterpillar(c, d);
      CHECK(packing_is_full(c, d));
      CHECK(static_cast<long>(packs.size()) <= static_cast<long>(d) * d * d);
      CHECK(oracle::essence_dp(c, d) == f.table());
      CHECK(essence(c, d) == f);
    }
}

TEST_CASE("brute essence refuses large inputs") {
  Caterpillar c = caterpillar_for_basic(BasicFn::inc(), 9);
  CHECK_THROWS_AS(essence_brute(c, 9), Error);
}

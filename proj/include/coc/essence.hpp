#ifndef COC_ESSENCE_HPP
#define COC_ESSENCE_HPP

#include "coc/caterpillar.hpp"
#include "coc/monoid.hpp"

namespace coc {

inline constexpr int kEssenceBruteLimit = 18;  // bound on |C| + d

/// Essence of a caterpillar whose packing covers all of it. For each x the
/// caterpillar with x extra pendants on the left spine end is repacked; if the
/// packing grows the value is d+1, otherwise the rightmost spine vertex of each
/// packed graph is selected and the residual component at the right end is
/// measured. Throws Error(packing_not_full).
MonoidFn essence(const Caterpillar& c, int d);

/// Essence evaluated literally over all minimum d-coc sets of each C_x.
/// Throws Error(too_large) when |C| + d exceeds the limit.
MonoidFn essence_brute(const Caterpillar& c, int d, int limit = kEssenceBruteLimit);

/// The caterpillar with x fresh pendants on spine[0]; vertex ids 0..|C|+x-1
/// with the original vertices relabelled in spine order.
Caterpillar with_left_pendants(const Caterpillar& c, int x);

/// Relabels a caterpillar to ids 0..size-1: spine first, then pendants.
Caterpillar relabelled(const Caterpillar& c);

/// Single-unit caterpillar realising a basic function.
Caterpillar caterpillar_for_basic(const BasicFn& b, int d);

/// Joins the right spine end of a to the left spine end of b.
Caterpillar concat(const Caterpillar& a, const Caterpillar& b);

/// Caterpillar with essence gamma and at most d^3 packed graphs.
Caterpillar synthesize(const MonoidFn& gamma);

}  // namespace coc

#endif

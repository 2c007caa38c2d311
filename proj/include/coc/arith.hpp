#ifndef COC_ARITH_HPP
#define COC_ARITH_HPP

#include <cstdint>
#include <limits>

namespace coc {

inline constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

// Saturating arithmetic on non-negative values.
inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

inline std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

inline std::int64_t sat_pow(std::int64_t a, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, a);
  return r;
}

}  // namespace coc

#endif

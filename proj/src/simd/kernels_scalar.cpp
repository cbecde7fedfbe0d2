#include "mdred/simd.hpp"

namespace mdred::simd::scalar {

std::size_t not_equal_mask(const Dist* a, const Dist* b, std::uint8_t* out,
                           std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const bool ne = a[k] != b[k];
    out[k] = ne ? 1 : 0;
    count += ne;
  }
  return count;
}

std::size_t count_not_equal(const Dist* a, const Dist* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) count += a[k] != b[k];
  return count;
}

void accumulate_not_equal(const Dist* a, const Dist* b, std::int32_t* counts,
                          std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) counts[k] += a[k] != b[k];
}

MaxFinite max_finite(const Dist* a, std::size_t n) {
  MaxFinite r;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] == kUnreachable) {
      ++r.unreachable;
    } else if (a[k] > r.max) {
      r.max = a[k];
    }
  }
  return r;
}

}  // namespace mdred::simd::scalar

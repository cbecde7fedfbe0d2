#include <immintrin.h>

#include <array>
#include <bit>

#include "mdred/simd.hpp"

namespace mdred::simd::avx2 {

namespace {

// Byte expansion of an 8-bit mask: bit k -> byte k set to 1.
constexpr std::array<std::uint64_t, 256> make_expand_table() {
  std::array<std::uint64_t, 256> t{};
  for (unsigned m = 0; m < 256; ++m) {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < 8; ++k) {
      if (m & (1u << k)) v |= std::uint64_t{1} << (8 * k);
    }
    t[m] = v;
  }
  return t;
}

constexpr auto kExpand = make_expand_table();

inline unsigned ne_bits(const Dist* a, const Dist* b) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i eq = _mm256_cmpeq_epi32(va, vb);
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xFFu;
}

}  // namespace

std::size_t not_equal_mask(const Dist* a, const Dist* b, std::uint8_t* out,
                           std::size_t n) {
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const unsigned bits = ne_bits(a + k, b + k);
    const std::uint64_t bytes = kExpand[bits];
    __builtin_memcpy(out + k, &bytes, sizeof bytes);
    count += static_cast<std::size_t>(std::popcount(bits));
  }
  return count + scalar::not_equal_mask(a + k, b + k, out + k, n - k);
}

std::size_t count_not_equal(const Dist* a, const Dist* b, std::size_t n) {
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    count += static_cast<std::size_t>(std::popcount(ne_bits(a + k, b + k)));
  }
  return count + scalar::count_not_equal(a + k, b + k, n - k);
}

void accumulate_not_equal(const Dist* a, const Dist* b, std::int32_t* counts,
                          std::size_t n) {
  const __m256i ones = _mm256_set1_epi32(-1);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    // ne lanes are -1, so subtracting adds one
    const __m256i ne = _mm256_xor_si256(_mm256_cmpeq_epi32(va, vb), ones);
    __m256i* c = reinterpret_cast<__m256i*>(counts + k);
    _mm256_storeu_si256(c, _mm256_sub_epi32(_mm256_loadu_si256(c), ne));
  }
  scalar::accumulate_not_equal(a + k, b + k, counts + k, n - k);
}

MaxFinite max_finite(const Dist* a, std::size_t n) {
  const __m256i inf = _mm256_set1_epi32(kUnreachable);
  const __m256i zero = _mm256_setzero_si256();
  __m256i best = zero;
  std::size_t unreachable = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i is_inf = _mm256_cmpeq_epi32(v, inf);
    unreachable += static_cast<std::size_t>(
        std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(is_inf)))));
    best = _mm256_max_epi32(best, _mm256_blendv_epi8(v, zero, is_inf));
  }
  alignas(32) std::array<Dist, 8> lanes{};
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), best);
  MaxFinite tail = scalar::max_finite(a + k, n - k);
  for (Dist d : lanes) tail.max = d > tail.max ? d : tail.max;
  tail.unreachable += unreachable;
  return tail;
}

}  // namespace mdred::simd::avx2

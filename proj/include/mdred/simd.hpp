#pragma once

// Data-parallel kernels over distance arrays. Every kernel has a scalar
// reference implementation; wider variants are picked at runtime from what
// the CPU supports and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "mdred/types.hpp"

namespace mdred::simd {

enum class Backend : std::uint8_t { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;

/// True if the variant was compiled in and the running CPU supports it.
bool backend_available(Backend b) noexcept;

Backend active_backend() noexcept;

/// Pins the dispatch table to `b`. Throws ArgumentError if unavailable.
void force_backend(Backend b);

/// Restores the best available backend.
void reset_backend() noexcept;

struct MaxFinite {
  Dist max = 0;                 // 0 when every entry is unreachable
  std::size_t unreachable = 0;  // entries equal to kUnreachable
};

// a and b must have equal length; out/counts too.

/// out[v] = (a[v] != b[v]); returns the number of set entries.
std::size_t not_equal_mask(std::span<const Dist> a, std::span<const Dist> b,
                           std::span<std::uint8_t> out);

std::size_t count_not_equal(std::span<const Dist> a, std::span<const Dist> b);

/// counts[v] += (a[v] != b[v])
void accumulate_not_equal(std::span<const Dist> a, std::span<const Dist> b,
                          std::span<std::int32_t> counts);

MaxFinite max_finite(std::span<const Dist> a);

namespace scalar {
std::size_t not_equal_mask(const Dist* a, const Dist* b, std::uint8_t* out,
                           std::size_t n);
std::size_t count_not_equal(const Dist* a, const Dist* b, std::size_t n);
void accumulate_not_equal(const Dist* a, const Dist* b, std::int32_t* counts,
                          std::size_t n);
MaxFinite max_finite(const Dist* a, std::size_t n);
}  // namespace scalar

#if defined(MDRED_HAVE_AVX2)
namespace avx2 {
std::size_t not_equal_mask(const Dist* a, const Dist* b, std::uint8_t* out,
                           std::size_t n);
std::size_t count_not_equal(const Dist* a, const Dist* b, std::size_t n);
void accumulate_not_equal(const Dist* a, const Dist* b, std::int32_t* counts,
                          std::size_t n);
MaxFinite max_finite(const Dist* a, std::size_t n);
}  // namespace avx2
#endif

}  // namespace mdred::simd

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "mdred/error.hpp"
#include "mdred/simd.hpp"

namespace mdred::simd {

namespace {

struct Table {
  std::size_t (*not_equal_mask)(const Dist*, const Dist*, std::uint8_t*, std::size_t);
  std::size_t (*count_not_equal)(const Dist*, const Dist*, std::size_t);
  void (*accumulate_not_equal)(const Dist*, const Dist*, std::int32_t*, std::size_t);
  MaxFinite (*max_finite)(const Dist*, std::size_t);
};

constexpr Table kScalar{scalar::not_equal_mask, scalar::count_not_equal,
                        scalar::accumulate_not_equal, scalar::max_finite};
#if defined(MDRED_HAVE_AVX2)
constexpr Table kAvx2{avx2::not_equal_mask, avx2::count_not_equal,
                      avx2::accumulate_not_equal, avx2::max_finite};
#endif

bool cpu_has_avx2() noexcept {
#if defined(MDRED_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend best_backend() noexcept {
  if (const char* env = std::getenv("MDRED_SIMD"); env && std::string_view(env) == "scalar") {
    return Backend::Scalar;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{best_backend()};
  return b;
}

const Table& table() {
#if defined(MDRED_HAVE_AVX2)
  if (current().load(std::memory_order_relaxed) == Backend::Avx2) return kAvx2;
#endif
  return kScalar;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw ArgumentError("simd kernel: operand length mismatch");
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) noexcept {
  return b == Backend::Scalar || (b == Backend::Avx2 && cpu_has_avx2());
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!backend_available(b)) {
    throw ArgumentError("simd backend unavailable: " + std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

void reset_backend() noexcept { current().store(best_backend(), std::memory_order_relaxed); }

std::size_t not_equal_mask(std::span<const Dist> a, std::span<const Dist> b,
                           std::span<std::uint8_t> out) {
  check_sizes(a.size(), b.size());
  check_sizes(a.size(), out.size());
  return table().not_equal_mask(a.data(), b.data(), out.data(), a.size());
}

std::size_t count_not_equal(std::span<const Dist> a, std::span<const Dist> b) {
  check_sizes(a.size(), b.size());
  return table().count_not_equal(a.data(), b.data(), a.size());
}

void accumulate_not_equal(std::span<const Dist> a, std::span<const Dist> b,
                          std::span<std::int32_t> counts) {
  check_sizes(a.size(), b.size());
  check_sizes(a.size(), counts.size());
  table().accumulate_not_equal(a.data(), b.data(), counts.data(), a.size());
}

MaxFinite max_finite(std::span<const Dist> a) { return table().max_finite(a.data(), a.size()); }

}  // namespace mdred::simd

#pragma once

#include <cstdint>
#include <limits>

namespace mdred {

/// Dense vertex index, assigned in construction order.
using VertexId = std::int32_t;

/// Hop count. Unreachable vertices carry kUnreachable, never a finite value.
using Dist = std::int32_t;

inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

constexpr bool reachable(Dist d) noexcept { return d != kUnreachable; }

}  // namespace mdred

#pragma once

#include <cstdint>
#include <random>

namespace agarch {

using Rng = std::mt19937_64;

/// Independent stream for one consumer of a run seed. Every source of
/// randomness in a run is derived as make_stream(seed, consumer_id) so that a
/// single seed reproduces the whole run.
Rng make_stream(std::uint64_t seed, std::uint64_t stream_id);

namespace streams {
inline constexpr std::uint64_t kSimulate = 0;
inline constexpr std::uint64_t kWarmup = 1;
inline constexpr std::uint64_t kAdaptive = 2;
}  // namespace streams

}  // namespace agarch

#pragma once

#include <cstdint>

namespace sectorlab {

namespace detail {

// SplitMix64 finalizer (Steele/Lea/Flood via Vigna's public-domain code).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

/// Small, fully specified 64-bit generator (SplitMix64). Used everywhere a
/// seeded stream is needed so that results do not depend on the standard
/// library's distribution implementations.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t operator()() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Fair coin from the top bit.
  bool coin() { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Derives the seed of an independent substream from (master, stream, lane).
/// Draw `stream` of a Monte Carlo experiment gets its own generator keyed by
/// the draw index, so results are identical for any worker count or schedule.
constexpr std::uint64_t substream_seed(std::uint64_t master,
                                       std::uint64_t stream,
                                       std::uint64_t lane = 0) {
  std::uint64_t x = detail::mix64(master + detail::kGolden);
  x ^= detail::mix64(stream + 2 * detail::kGolden);
  x ^= detail::mix64(lane + 3 * detail::kGolden);
  return detail::mix64(x);
}

}  // namespace sectorlab

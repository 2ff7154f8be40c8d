#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace swcap {

/// Master seed for every generator and experiment.
struct Seed {
  std::uint64_t value = 0;
};

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output finalizer.
inline constexpr std::uint64_t avalanche64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a list of
/// counters:  h = avalanche64(master + golden);
///            for each c: h = avalanche64(h ^ (c + golden)).
/// This mixer is part of the reproducibility contract; do not change it.
inline constexpr std::uint64_t derive_seed(std::uint64_t master,
                                           std::initializer_list<std::uint64_t> counters) {
  std::uint64_t h = avalanche64(master + kGolden);
  for (std::uint64_t c : counters) h = avalanche64(h ^ (c + kGolden));
  return h;
}

/// SplitMix64 sequence. Satisfies UniformRandomBitGenerator.
class Stream {
 public:
  using result_type = std::uint64_t;

  constexpr explicit Stream(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    state_ += kGolden;
    return avalanche64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), unbiased (Lemire's multiply-and-reject).
  constexpr std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Stream-domain tags so that different generators never share a stream.
enum class StreamTag : std::uint64_t {
  kShortcut = 1,
  kRewire = 2,
  kKleinberg = 3,
  kNavigableRing = 4,
  kRoutingPair = 5,
  kRoutingGraph = 6,
};

inline constexpr std::uint64_t tag(StreamTag t) { return static_cast<std::uint64_t>(t); }

}  // namespace swcap

#pragma once
#include <cstdint>

namespace gsh {

//! Counter-style 64-bit generator (splitmix64). Chosen over the standard
//! library engines so report numbers are bit-identical across platforms.
class SplitMix64 {
public:
  static constexpr const char *kName = "splitmix64 v1";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  //! Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

//! Independent substream seed for suite `stream` of a run seeded with `seed`.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x517cc1b727220a95ULL * (stream + 1)));
  return g.next();
}

} // namespace gsh

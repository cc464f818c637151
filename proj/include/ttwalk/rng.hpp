#pragma once

#include <cstdint>

namespace ttwalk {

// 64-bit finalizer used both as the generator step and for substream keys.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// splitmix64. std::mt19937 and the std distributions are avoided on purpose:
// replays must be byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }

  // uniform in [0, n), rejection sampled
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do v = next();
    while (v >= lim);
    return v % n;
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Independent substream key for (seed, stream), e.g. one stream per trial.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

}  // namespace ttwalk

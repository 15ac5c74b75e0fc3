#pragma once

#include <cstdint>
#include <random>

namespace dpflmd {

// splitmix64 finalizer, used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Domain separators so streams with different purposes never collide.
namespace stream_tag {
inline constexpr std::uint64_t sampling = 0x73616d706c652d31ull;
inline constexpr std::uint64_t client = 0x636c69656e742d32ull;
inline constexpr std::uint64_t synthetic = 0x73796e74682d3333ull;
inline constexpr std::uint64_t run = 0x72756e2d34343434ull;
}  // namespace stream_tag

// Seed of the (a, b) stream of a given purpose under `master`. Every
// randomized component takes its stream from here, so a run is fully
// determined by the master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                    std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ tag);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return h;
}

// mt19937_64 with fixed draw recipes. The engine's output sequence is
// pinned by the standard, and the recipes below avoid the
// implementation-defined std:: distributions, so identical seeds give
// identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0,1), 53-bit resolution. Exactly one engine call.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0,n). Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t excess = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
    const std::uint64_t cutoff = 0 - excess;
    std::uint64_t v = engine_();
    while (excess != 0 && v >= cutoff) v = engine_();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dpflmd

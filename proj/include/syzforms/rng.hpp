#pragma once

#include <cstdint>
#include <stdexcept>

namespace syzforms {

// splitmix64: the documented mixing generator used for every seeded choice.
// Passed by value; no hidden state anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [lo, hi], rejection sampled.
  long uniform_int(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long>(next());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % range);
  }

  // Derive an independent stream, for retry attempts.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 g(seed ^ (0x632BE59BD9B4E019ull * (salt + 1)));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace syzforms

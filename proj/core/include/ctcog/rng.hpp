#pragma once

#include <cstdint>

namespace ctcog {

// Counter-based generator in the splitmix64 family. Output k is a pure
// function of (seed, stream, k), so every draw is reproducible bit for bit
// and independent streams can be split off without sharing any state.
// This is what makes seeded experiments byte-identical across runs and
// independent of thread scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

  std::uint64_t next_u64() {
    return mix(key_ + 0x9E3779B97F4A7C15ull * ++counter_);
  }

  // Uniform double in [0, 1), 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Rejection-free modulo is fine here: bound
  // is tiny compared to 2^64 in every use, so the bias is far below any
  // tolerance in play.
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ctcog

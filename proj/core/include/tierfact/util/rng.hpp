#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tierfact::util {

/// Deterministic RNG for sampling. mt19937_64 output is fully specified by
/// the standard, and the bounded draw below avoids std::uniform_int_distribution
/// (whose mapping is implementation-defined), so identical seeds produce
/// identical draws on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /// Unbiased draw in [0, n). n must be > 0.
  uint64_t bounded(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 bits of entropy.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tierfact::util

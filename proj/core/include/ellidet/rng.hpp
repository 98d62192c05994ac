#pragma once

#include <cstdint>
#include <random>

namespace ellidet {

// splitmix64 finalizer, used only to decorrelate derived stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for an independent sub-stream (edge index, scene index, ...) of a
// master seed. Every random decision in the library flows through this, so
// results do not depend on scheduling or evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t salt = 0) {
  return mix64(mix64(master ^ mix64(stream + 0x632be59bd9b4e019ULL)) ^ salt);
}

// mt19937_64 is fully specified by the standard; the bounded/unit draws of
// std::uniform_*_distribution are not, so those are done by hand here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [0, n), unbiased via rejection on the top 32 bits.
  std::uint32_t below(std::uint32_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = (0x100000000ULL / n) * n;
    for (;;) {
      const std::uint64_t v = next() >> 32;
      if (v < limit) return static_cast<std::uint32_t>(v % n);
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ellidet

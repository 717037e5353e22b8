#pragma once

#include <cstdint>

namespace descentlab {

// splitmix64: deterministic across platforms and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t u64() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at desk scale.
  std::uint64_t below(std::uint64_t n) { return n ? u64() % n : 0; }

  bool coin() { return u64() & 1; }

  // Derive a stream for instance `idx` of a seeded corpus.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t idx) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (idx + 1)));
    return r.u64();
  }

 private:
  std::uint64_t s_;
};

}  // namespace descentlab

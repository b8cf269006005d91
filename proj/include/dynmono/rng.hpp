#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dynmono {

// Deterministic generator for instance synthesis. std::uniform_int_distribution
// is implementation-defined, so bounded draws go through next() directly to keep
// generated instances byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish value in [0, bound); bound >= 1. Modulo bias is irrelevant for
  // test-corpus generation.
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  // Inclusive range.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t p : parts) {
    h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
  }
  return h;
}

}  // namespace dynmono

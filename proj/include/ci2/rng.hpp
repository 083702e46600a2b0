#pragma once

#include <cstdint>

namespace ci2 {

// splitmix64: tiny, platform-independent, and good enough for sampling.
// std::mt19937 would also be deterministic, but the distributions wrapped
// around it are not specified bit-for-bit; we need byte-stable streams.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Multiply-shift; the O(n/2^64) bias is irrelevant here.
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Derived stream: deterministic function of (current seed, tag), used to give
  // each sampled pair / each trial an independent reproducer seed.
  Rng fork(uint64_t tag) const {
    Rng mixer(state_ ^ (0x94d049bb133111ebULL * (tag + 1)));
    uint64_t s = mixer.next();
    return Rng(s);
  }

  uint64_t seed_state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace ci2

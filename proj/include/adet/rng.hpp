#pragma once

#include <cstdint>

#include "adet/rat.hpp"

namespace adet {

// splitmix64 step; stable across platforms and compilers, which is what
// makes byte-identical verification reports possible.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sub-seed derivation: hash(seed, index).
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t s = index;
  uint64_t h = splitmix64(s);
  s = seed ^ h;
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [lo, hi], inclusive
  long long uniform(long long lo, long long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

  // numerator in [-bound, bound], denominator in [1, bound]
  Rat rational(long long bound) {
    return Rat(Int(uniform(-bound, bound)), Int(uniform(1, bound)));
  }

  // nonzero rational with numerator and denominator in [1, bound] and a
  // random sign
  Rat nonzero_rational(long long bound) {
    Rat r(Int(uniform(1, bound)), Int(uniform(1, bound)));
    return uniform(0, 1) ? r : -r;
  }

 private:
  uint64_t state_;
};

}  // namespace adet

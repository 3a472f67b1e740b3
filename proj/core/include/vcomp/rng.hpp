#pragma once

#include <cmath>
#include <cstdint>

namespace vcomp {

// Counter-based generator: every draw is a pure mix of (key, counter), so
// streams can be forked without sharing state and replay is exact.
class Rng {
 public:
  explicit Rng(uint64_t seed) : key_(seed) {}

  uint64_t next_u64() { return mix(key_, ctr_++); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  uint64_t uniform_int(uint64_t n) { return n ? next_u64() % n : 0; }

  double normal() {
    // Box-Muller; u1 shifted away from 0 so log stays finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Independent stream derived from this generator's key.
  Rng fork(uint64_t stream) const {
    return Rng(mix(key_, 0x9e3779b97f4a7c15ULL ^ stream));
  }

 private:
  static uint64_t mix(uint64_t key, uint64_t ctr) {
    uint64_t z = key + ctr * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t key_;
  uint64_t ctr_ = 0;
};

}  // namespace vcomp

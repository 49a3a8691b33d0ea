#pragma once
#include <cstdint>

namespace dgar {

/* splitmix64; fixed default seed so every run of a seeded procedure is reproducible. */
class Rng {
 public:
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /* Uniform in [0, n). */
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  /* Small signed integer in [-r, r]. */
  long small(long r) { return long(below(uint64_t(2 * r + 1))) - r; }

 private:
  uint64_t state_;
};

}  // namespace dgar

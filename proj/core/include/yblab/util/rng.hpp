#pragma once

#include <cstdint>

#include "yblab/util/rational.hpp"

namespace yblab {

// splitmix64: tiny, platform-independent, good enough for sampling test points.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // uniform integer in [-bound, bound]
  long integer(long bound) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }

  // nonzero rational with numerator in [-bound, bound] and denominator in [1, den_bound]
  Rational rational(long bound, long den_bound = 8) {
    long n = 0;
    while (n == 0) n = integer(bound);
    long d = static_cast<long>(below(static_cast<std::uint64_t>(den_bound))) + 1;
    return Rational(n, d);
  }

  Rng split() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

 private:
  std::uint64_t s_;
};

}  // namespace yblab

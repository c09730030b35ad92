#pragma once

#include <random>

#include "cartankit/exact_scalar.hpp"

namespace cartankit {

// Deterministic rational sampler.  mt19937_64 has a standard-specified output
// sequence and the modular draw below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined; runs are therefore reproducible
// for a fixed seed on any platform.
class RationalSampler {
 public:
  explicit RationalSampler(uint64_t seed) : eng_(seed) {}

  // Uniform-ish integer in [lo, hi] (inclusive).
  long integer(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  // Small rational with numerator in [-num_max, num_max], denominator in
  // [1, den_max].
  ExactScalar rational(long num_max = 9, long den_max = 4) {
    return rat(integer(-num_max, num_max), integer(1, den_max));
  }

  ExactScalar nonzero_rational(long num_max = 9, long den_max = 4) {
    for (;;) {
      ExactScalar q = rational(num_max, den_max);
      if (!is_zero(q)) return q;
    }
  }

  uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cartankit
